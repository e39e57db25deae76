#include "skewberger/lie/lie_rep.hpp"

#include <algorithm>
#include <map>

namespace skb::lie {

using linalg::add_scaled;
using linalg::entry;

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::none: return "none";
    case FormKind::symmetric: return "symmetric";
    case FormKind::skew: return "skew";
  }
  return "none";
}

SparseVec flatten(const SparseMat& x) {
  SparseVec out;
  out.reserve(x.nnz());
  for (Index r = 0; r < x.rows(); ++r) {
    for (const auto& [c, v] : x.row(r)) out.emplace_back(r * x.cols() + c, v);
  }
  return out;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

SpanCoordinates::SpanCoordinates(const std::vector<SparseMat>& mats, Index rows, Index cols)
    : rows_(rows), cols_(cols), count_(static_cast<Index>(mats.size())) {
  const Index n = rows * cols;
  std::vector<SparseVec> aug;
  aug.reserve(mats.size());
  for (Index i = 0; i < count_; ++i) {
    SparseVec v = flatten(mats[i]);
    v.emplace_back(n + i, Rational(1));
    aug.push_back(std::move(v));
  }
  echelon_ = linalg::rref(n + count_, std::move(aug));
  independent_ = true;
  rank_ = 0;
  std::vector<SparseVec> kept;
  for (auto& row : echelon_) {
    if (row.front().first >= n) {
      independent_ = false;
    } else {
      ++rank_;
      kept.push_back(std::move(row));
    }
  }
  echelon_ = std::move(kept);
}

std::optional<SparseVec> SpanCoordinates::coordinates(const SparseMat& x) const {
  const Index n = rows_ * cols_;
  SparseVec r = flatten(x);
  SparseVec acc;
  for (const auto& row : echelon_) {
    Rational c = entry(r, row.front().first);
    if (c == 0) continue;
    // split row into its matrix part and its coefficient part
    SparseVec head, tail;
    for (const auto& e : row) {
      if (e.first < n) {
        head.push_back(e);
      } else {
        tail.emplace_back(e.first - n, e.second);
      }
    }
    r = add_scaled(r, -c, head);
    acc = add_scaled(acc, c, tail);
  }
  if (!r.empty()) return std::nullopt;
  return acc;
}

LieRep::LieRep(LieRepData data, bool check_jac) : d_(std::move(data)) {
  for (const auto& g : d_.generators) {
    if (g.rows() != d_.dimV || g.cols() != d_.dimV) {
      throw ConstructionError(d_.name + ": generator has wrong shape");
    }
  }
  span_ = SpanCoordinates(d_.generators, d_.dimV, d_.dimV);
  if (!span_.independent()) {
    throw ConstructionError(d_.name + ": generators are linearly dependent");
  }
  compute_structure();
  if (check_jac) check_jacobi();
  check_cartan();
  check_form();
}

std::vector<Index> LieRep::semisimple_indices() const {
  std::vector<Index> out;
  for (Index i = 0; i < dim(); ++i) {
    if (!d_.center || *d_.center != i) out.push_back(i);
  }
  return out;
}

SparseMat LieRep::element(const SparseVec& coords) const {
  SparseMat out(d_.dimV, d_.dimV);
  for (const auto& [i, c] : coords) out = out + d_.generators.at(i).scaled(c);
  return out;
}

void LieRep::compute_structure() {
  const Index d = dim();
  structure_.assign(static_cast<std::size_t>(d) * d, {});
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      SparseMat br = commutator(d_.generators[i], d_.generators[j]);
      auto c = span_.coordinates(br);
      if (!c) {
        throw ConstructionError(d_.name + ": bracket of generators " + std::to_string(i) + " and " +
                                std::to_string(j) + " leaves the span");
      }
      structure_[j * d + i] = linalg::scaled(*c, -1);
      structure_[i * d + j] = std::move(*c);
    }
  }
}

void LieRep::check_jacobi() const {
  const Index d = dim();
  auto bracket_vec = [&](const SparseVec& u, Index k) {
    SparseVec out;
    for (const auto& [m, c] : u) out = add_scaled(out, c, bracket(m, k));
    return out;
  };
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      for (Index k = j + 1; k < d; ++k) {
        SparseVec s = bracket_vec(bracket(i, j), k);
        s = add_scaled(s, 1, bracket_vec(bracket(j, k), i));
        s = add_scaled(s, 1, bracket_vec(bracket(k, i), j));
        if (!s.empty()) {
          throw ConstructionError(d_.name + ": Jacobi identity fails on generators " +
                                  std::to_string(i) + ", " + std::to_string(j) + ", " +
                                  std::to_string(k));
        }
      }
    }
  }
}

void LieRep::check_cartan() const {
  for (Index h : d_.cartan) {
    if (h >= dim() || !d_.generators[h].is_diagonal()) {
      throw ConstructionError(d_.name + ": Cartan generator " + std::to_string(h) +
                              " is not diagonal");
    }
  }
  for (std::size_t a = 0; a < d_.cartan.size(); ++a) {
    for (std::size_t b = a + 1; b < d_.cartan.size(); ++b) {
      if (!bracket(d_.cartan[a], d_.cartan[b]).empty()) {
        throw ConstructionError(d_.name + ": Cartan generators do not commute");
      }
    }
  }
  if (d_.center) {
    if (*d_.center >= dim() || !(d_.generators[*d_.center] == SparseMat::identity(d_.dimV))) {
      throw ConstructionError(d_.name + ": center generator is not the identity");
    }
  }
}

bool form_invariant(const SparseMat& x, const SparseMat& g) {
  return (x.transpose() * g + g * x).is_zero();
}

void LieRep::check_form() const {
  if (!d_.form) {
    if (d_.form_kind != FormKind::none) throw ConstructionError(d_.name + ": form kind without form");
    return;
  }
  const SparseMat& g = *d_.form;
  if (g.rows() != d_.dimV || g.cols() != d_.dimV) throw ConstructionError(d_.name + ": form has wrong shape");
  SparseMat gt = g.transpose();
  if (d_.form_kind == FormKind::symmetric && !(gt == g)) {
    throw ConstructionError(d_.name + ": declared symmetric form is not symmetric");
  }
  if (d_.form_kind == FormKind::skew && !(gt == g.scaled(-1))) {
    throw ConstructionError(d_.name + ": declared skew form is not skew");
  }
  for (Index i = 0; i < dim(); ++i) {
    if (!form_invariant(d_.generators[i], g)) {
      throw ConstructionError(d_.name + ": generator " + std::to_string(i) +
                              " does not preserve the form");
    }
  }
}

Rational LieRep::cartan_eigenvalue(std::size_t k, Index i) const {
  return d_.generators[d_.cartan.at(k)].at(i, i);
}

std::vector<Rational> LieRep::weight_of_basis(Index i) const {
  std::vector<Rational> w;
  w.reserve(d_.cartan.size());
  for (std::size_t k = 0; k < d_.cartan.size(); ++k) w.push_back(cartan_eigenvalue(k, i));
  return w;
}

std::optional<std::vector<std::vector<Rational>>> LieRep::generator_weights() const {
  std::vector<std::vector<Rational>> out(dim(), std::vector<Rational>(d_.cartan.size()));
  for (Index a = 0; a < dim(); ++a) {
    for (std::size_t k = 0; k < d_.cartan.size(); ++k) {
      const SparseVec& c = bracket(d_.cartan[k], a);
      if (c.empty()) continue;
      if (c.size() != 1 || c.front().first != a) return std::nullopt;
      out[a][k] = c.front().second;
    }
  }
  return out;
}

LieRep LieRep::renamed(std::string name) const {
  LieRep r = *this;
  r.d_.name = std::move(name);
  return r;
}

std::optional<std::pair<SparseMat, FormKind>> find_invariant_form(const std::vector<SparseMat>& gens,
                                                                  const std::vector<Index>& cartan,
                                                                  Index n) {
  // Only pairs (p, q) whose weights sum to zero can carry an invariant form.
  std::vector<std::pair<Index, Index>> unknowns;
  std::map<std::pair<Index, Index>, Index> unknown_of;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      bool ok = true;
      for (Index h : cartan) {
        if (gens[h].at(p, p) + gens[h].at(q, q) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        unknown_of[{p, q}] = static_cast<Index>(unknowns.size());
        unknowns.push_back({p, q});
      }
    }
  }
  if (unknowns.empty()) return std::nullopt;
  // (X^T G + G X)_{ab} = sum_c X_{ca} G_{cb} + sum_c G_{ac} X_{cb}
  std::map<std::uint64_t, Index> row_of;
  std::vector<linalg::Triplet> trip;
  auto row_id = [&](std::size_t gi, Index a, Index b) {
    std::uint64_t key = (static_cast<std::uint64_t>(gi) * n + a) * n + b;
    auto it = row_of.find(key);
    if (it != row_of.end()) return it->second;
    Index id = static_cast<Index>(row_of.size());
    row_of.emplace(key, id);
    return id;
  };
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const SparseMat& x = gens[gi];
    for (Index u = 0; u < unknowns.size(); ++u) {
      auto [p, q] = unknowns[u];
      for (const auto& [a, v] : x.row(p)) trip.push_back({row_id(gi, a, q), u, v});
      for (const auto& [b, v] : x.row(q)) trip.push_back({row_id(gi, p, b), u, v});
    }
  }
  SparseMat sys = SparseMat::from_triplets(static_cast<Index>(row_of.size()),
                                           static_cast<Index>(unknowns.size()), std::move(trip));
  Subspace sol = linalg::nullspace(sys);
  if (sol.empty()) return std::nullopt;

  auto to_matrix = [&](const SparseVec& v) {
    std::vector<linalg::Triplet> t;
    for (const auto& [u, c] : v) t.push_back({unknowns[u].first, unknowns[u].second, c});
    return SparseMat::from_triplets(n, n, std::move(t));
  };
  std::vector<SparseMat> sym, skew;
  for (const auto& v : sol.basis()) {
    SparseMat g = to_matrix(v);
    SparseMat gt = g.transpose();
    SparseMat s = g + gt, k = g - gt;
    if (!s.is_zero()) sym.push_back(s);
    if (!k.is_zero()) skew.push_back(k);
  }
  auto normalized = [](const SparseMat& g) {
    for (Index r = 0; r < g.rows(); ++r) {
      if (!g.row(r).empty()) return g.scaled(1 / g.row(r).front().second);
    }
    return g;
  };
  for (const auto& s : sym) {
    if (linalg::rank(s) == n) return std::make_pair(normalized(s), FormKind::symmetric);
  }
  for (const auto& k : skew) {
    if (linalg::rank(k) == n) return std::make_pair(normalized(k), FormKind::skew);
  }
  return std::nullopt;
}

}  // namespace skb::lie
