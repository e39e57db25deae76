#include "skewberger/lie/builders.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace skb::lie {

using linalg::MatBuilder;
using linalg::Triplet;

namespace {

SparseMat unit(Index n, Index r, Index c, const Rational& v = 1) {
  MatBuilder b(n, n);
  b.add(r, c, v);
  return std::move(b).build();
}

std::string std_name(Family f, Index n) {
  static const char* names[] = {"sl", "gl", "so", "sp"};
  return std::string(names[static_cast<int>(f)]) + "(" + std::to_string(n) + "):std";
}

// so(m) basis labels: Cartan pairs (p, m-1-p) first, then the rest in lex order.
std::vector<std::pair<Index, Index>> so_pairs(Index m) {
  std::vector<std::pair<Index, Index>> out;
  for (Index p = 0; p < m / 2; ++p) out.push_back({p, m - 1 - p});
  for (Index p = 0; p < m; ++p) {
    for (Index q = p + 1; q < m; ++q) {
      if (q != m - 1 - p) out.push_back({p, q});
    }
  }
  return out;
}

SparseMat sign_normalized(const SparseMat& x) {
  for (Index r = 0; r < x.rows(); ++r) {
    if (!x.row(r).empty()) return x.row(r).front().second < 0 ? x.scaled(-1) : x;
  }
  return x;
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  MatBuilder mb(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (const auto& [j, x] : a.row(i)) {
      for (Index k = 0; k < b.rows(); ++k) {
        for (const auto& [l, y] : b.row(k)) mb.add(i * b.rows() + k, j * b.cols() + l, x * y);
      }
    }
  }
  return std::move(mb).build();
}

SparseMat matrix_from_columns(Index n, const std::vector<SparseVec>& cols) {
  MatBuilder mb(n, static_cast<Index>(cols.size()));
  for (Index c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c]) mb.add(r, c, v);
  }
  return std::move(mb).build();
}

}  // namespace

std::vector<std::vector<Index>> index_tuples(Index n, Index k, bool strict) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Index i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, strict ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

LieRep build_classical(Family family, Index n) {
  LieRepData d;
  d.name = std_name(family, n);
  d.dimV = n;
  switch (family) {
    case Family::sl:
    case Family::gl: {
      if (n < 2) throw std::invalid_argument(d.name + ": n must be at least 2");
      for (Index k = 0; k + 1 < n; ++k) {
        d.generators.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
        d.cartan.push_back(k);
      }
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          if (i != j) d.generators.push_back(unit(n, i, j));
        }
      }
      if (family == Family::gl) {
        d.center = static_cast<Index>(d.generators.size());
        d.generators.push_back(SparseMat::identity(n));
      } else if (n == 2) {
        // sl(2) = sp(2): the determinant form
        d.form = unit(2, 0, 1) - unit(2, 1, 0);
        d.form_kind = FormKind::skew;
      }
      break;
    }
    case Family::so: {
      if (n < 3) throw std::invalid_argument(d.name + ": so(n) needs n >= 3");
      auto bar = [n](Index p) { return n - 1 - p; };
      for (auto [p, q] : so_pairs(n)) {
        // -(e_p ^ e_q) for (u ^ w) z = G(u,z) w - G(w,z) u
        d.generators.push_back(unit(n, p, bar(q)) - unit(n, q, bar(p)));
      }
      for (Index k = 0; k < n / 2; ++k) d.cartan.push_back(k);
      MatBuilder g(n, n);
      for (Index p = 0; p < n; ++p) g.add(p, bar(p), 1);
      d.form = std::move(g).build();
      d.form_kind = FormKind::symmetric;
      break;
    }
    case Family::sp: {
      if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument(d.name + ": sp(n) needs an even n >= 2");
      }
      const Index r = n / 2;
      auto bar = [n](Index p) { return n - 1 - p; };
      MatBuilder om(n, n);
      for (Index p = 0; p < n; ++p) om.add(p, bar(p), p < r ? 1 : -1);
      SparseMat omega = std::move(om).build();
      SparseMat omega_inv = omega.scaled(-1);
      for (Index p = 0; p < r; ++p) {
        d.generators.push_back(unit(n, p, p) - unit(n, bar(p), bar(p)));
        d.cartan.push_back(p);
      }
      for (Index p = 0; p < n; ++p) {
        for (Index q = p; q < n; ++q) {
          if (q == bar(p)) continue;
          SparseMat s = p == q ? unit(n, p, p) : unit(n, p, q) + unit(n, q, p);
          d.generators.push_back(sign_normalized(omega_inv * s));
        }
      }
      d.form = omega;
      d.form_kind = FormKind::skew;
      break;
    }
  }
  return LieRep(std::move(d));
}

LieRep build_spin(Index m, Chirality chirality) {
  std::string suffix = chirality == Chirality::full ? "spin" : chirality == Chirality::plus ? "spin+" : "spin-";
  std::string name = "so(" + std::to_string(m) + "):" + suffix;
  if (m < 3) throw std::invalid_argument(name + ": m must be at least 3");
  if (chirality == Chirality::full && m % 2 == 0) {
    throw std::invalid_argument(name + ": the full spin representation needs odd m");
  }
  if (chirality != Chirality::full && m % 2 == 1) {
    throw std::invalid_argument(name + ": half-spin representations need even m");
  }
  const Index r = m / 2;
  const Index fock = Index{1} << r;
  auto parity_sign = [](std::uint32_t s, Index i) {
    return (std::popcount(s & ((1u << i) - 1)) % 2 == 0) ? 1 : -1;
  };
  // gamma matrices on the full Fock space
  std::vector<SparseMat> gamma(m);
  for (Index i = 0; i < m; ++i) {
    MatBuilder b(fock, fock);
    for (std::uint32_t s = 0; s < fock; ++s) {
      if (i < r) {
        if (!(s & (1u << i))) b.add(s | (1u << i), s, parity_sign(s, i));
      } else if (m % 2 == 1 && i == r) {
        b.add(s, s, std::popcount(s) % 2 == 0 ? 1 : -1);
      } else {
        Index mode = m - 1 - i;
        if (s & (1u << mode)) b.add(s & ~(1u << mode), s, 2 * parity_sign(s, mode));
      }
    }
    gamma[i] = std::move(b).build();
  }
  std::vector<std::uint32_t> states;
  for (std::uint32_t s = 0; s < fock; ++s) {
    int unoccupied = static_cast<int>(r) - std::popcount(s);
    if (chirality == Chirality::full || (chirality == Chirality::plus) == (unoccupied % 2 == 0)) {
      states.push_back(s);
    }
  }
  std::vector<Index> pos(fock, static_cast<Index>(-1));
  for (Index k = 0; k < states.size(); ++k) pos[states[k]] = k;
  const Index dim = static_cast<Index>(states.size());

  LieRepData d;
  d.name = name;
  d.dimV = dim;
  for (auto [p, q] : so_pairs(m)) {
    SparseMat full = (gamma[p] * gamma[q] - gamma[q] * gamma[p]).scaled(Rational(1, 4));
    MatBuilder b(dim, dim);
    for (Index k = 0; k < dim; ++k) {
      for (const auto& [c, v] : full.row(states[k])) {
        if (pos[c] == static_cast<Index>(-1)) throw ConstructionError(name + ": generator leaves the chirality subspace");
        b.add(k, pos[c], v);
      }
    }
    d.generators.push_back(std::move(b).build());
  }
  for (Index k = 0; k < r; ++k) d.cartan.push_back(k);
  if (auto f = find_invariant_form(d.generators, d.cartan, dim)) {
    d.form = f->first;
    d.form_kind = f->second;
  }
  return LieRep(std::move(d));
}

LieRep tensor_rep(const LieRep& a, const LieRep& b) {
  LieRepData d;
  d.name = a.name() + "*" + b.name();
  d.dimV = a.dimV() * b.dimV();
  SparseMat ia = SparseMat::identity(a.dimV()), ib = SparseMat::identity(b.dimV());
  std::vector<Index> a_index(a.dim()), b_index(b.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    if (a.center_index() == i) continue;
    a_index[i] = static_cast<Index>(d.generators.size());
    d.generators.push_back(kron(a.generator(i), ib));
  }
  for (Index j = 0; j < b.dim(); ++j) {
    if (b.center_index() == j) continue;
    b_index[j] = static_cast<Index>(d.generators.size());
    d.generators.push_back(kron(ia, b.generator(j)));
  }
  for (Index h : a.cartan()) d.cartan.push_back(a_index[h]);
  for (Index h : b.cartan()) d.cartan.push_back(b_index[h]);
  if (a.has_center() || b.has_center()) {
    d.center = static_cast<Index>(d.generators.size());
    d.generators.push_back(SparseMat::identity(d.dimV));
  }
  if (a.form() && b.form()) {
    d.form = kron(*a.form(), *b.form());
    d.form_kind = a.form_kind() == b.form_kind() ? FormKind::symmetric : FormKind::skew;
  }
  return LieRep(std::move(d));
}

LieRep power_rep(const LieRep& a, PowerKind kind, Index k) {
  const bool wedge = kind == PowerKind::wedge;
  std::string name = a.name() + (wedge ? "^wedge(" : "^sym(") + std::to_string(k) + ")";
  if (k < 1 || (wedge && k > a.dimV())) throw std::invalid_argument(name + ": power out of range");
  auto tuples = index_tuples(a.dimV(), k, wedge);
  std::map<std::vector<Index>, Index> index_of;
  for (Index i = 0; i < tuples.size(); ++i) index_of[tuples[i]] = i;
  const Index dim = static_cast<Index>(tuples.size());

  LieRepData d;
  d.name = name;
  d.dimV = dim;
  for (const auto& x : a.generators()) {
    auto cols = x.columns();
    MatBuilder b(dim, dim);
    for (Index t = 0; t < dim; ++t) {
      for (Index s = 0; s < k; ++s) {
        for (const auto& [rr, v] : cols[tuples[t][s]]) {
          std::vector<Index> nt = tuples[t];
          nt[s] = rr;
          int sign = 1;
          if (wedge) {
            for (Index i = 0; i < k; ++i) {
              for (Index j = i + 1; j < k; ++j) {
                if (nt[i] > nt[j]) sign = -sign;
              }
            }
            std::sort(nt.begin(), nt.end());
            if (std::adjacent_find(nt.begin(), nt.end()) != nt.end()) continue;
          } else {
            std::sort(nt.begin(), nt.end());
          }
          b.add(index_of.at(nt), t, sign * v);
        }
      }
    }
    d.generators.push_back(std::move(b).build());
  }
  d.cartan = a.cartan();
  d.center = a.center_index();
  // the identity acts on a k-th power as k times the identity
  if (d.center) d.generators[*d.center] = d.generators[*d.center].scaled(Rational(1, static_cast<long>(k)));
  if (!d.center) {
    if (auto f = find_invariant_form(d.generators, d.cartan, dim)) {
      d.form = f->first;
      d.form_kind = f->second;
    }
  }
  return LieRep(std::move(d));
}

LieRep adjoint_rep(const LieRep& a) {
  if (a.has_center()) throw std::invalid_argument(a.name() + ": adjoint representation needs a semisimple algebra");
  const Index n = a.dim();
  LieRepData d;
  d.name = a.name() + "^adjoint";
  d.dimV = n;
  for (Index i = 0; i < n; ++i) {
    MatBuilder b(n, n);
    for (Index j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.bracket(i, j)) b.add(k, j, c);
    }
    d.generators.push_back(std::move(b).build());
  }
  d.cartan = a.cartan();
  MatBuilder tf(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      SparseMat prod = a.generator(i) * a.generator(j);
      Rational tr = 0;
      for (Index r = 0; r < prod.rows(); ++r) tr += prod.at(r, r);
      tf.add(i, j, tr);
    }
  }
  d.form = std::move(tf).build();
  d.form_kind = FormKind::symmetric;
  if (linalg::rank(*d.form) != n) throw std::invalid_argument(a.name() + ": trace form is degenerate; algebra not semisimple");
  return LieRep(std::move(d));
}

LieRep add_center(const LieRep& a) {
  if (a.has_center() || a.coordinates(SparseMat::identity(a.dimV()))) {
    throw std::invalid_argument(a.name() + ": the identity already lies in the algebra");
  }
  LieRepData d = a.data();
  d.name = a.name() + "+z";
  d.center = static_cast<Index>(d.generators.size());
  d.generators.push_back(SparseMat::identity(d.dimV));
  d.form.reset();
  d.form_kind = FormKind::none;
  return LieRep(std::move(d));
}

LieRep restrict_to_invariant_subspace(const LieRep& a, const Subspace& s) {
  if (s.ambient_dim() != a.dimV()) throw std::invalid_argument("restrict: subspace has the wrong ambient dimension");
  for (Index i = 0; i < a.dim(); ++i) {
    for (const auto& v : s.basis()) {
      if (!s.contains(a.generator(i).apply(v))) {
        throw std::invalid_argument(a.name() + ": generator " + std::to_string(i) +
                                    " does not preserve the subspace");
      }
    }
  }
  // weight basis of s: its intersections with the coordinate weight spaces
  std::map<std::vector<Rational>, std::vector<Index>> classes;
  std::vector<std::vector<Rational>> order;
  for (Index i = 0; i < a.dimV(); ++i) {
    auto w = a.weight_of_basis(i);
    auto [it, fresh] = classes.try_emplace(w);
    if (fresh) order.push_back(w);
    it->second.push_back(i);
  }
  std::vector<SparseVec> basis;
  for (const auto& w : order) {
    std::vector<SparseVec> coord;
    for (Index i : classes[w]) coord.push_back({{i, Rational(1)}});
    Subspace part = linalg::intersect(s, Subspace::span(a.dimV(), std::move(coord)));
    for (const auto& v : part.basis()) basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(), [](const SparseVec& x, const SparseVec& y) {
    return x.front().first < y.front().first;
  });
  Subspace wb = Subspace::from_normal_form(a.dimV(), basis);
  if (wb.dim() != s.dim()) throw ConstructionError(a.name() + ": subspace is not a sum of weight spaces");
  const Index k = static_cast<Index>(wb.dim());

  LieRepData d;
  d.name = a.name() + "|sub(" + std::to_string(k) + ")";
  d.dimV = k;
  for (const auto& x : a.generators()) {
    std::vector<SparseVec> cols;
    for (const auto& v : wb.basis()) cols.push_back(linalg::from_dense(wb.coordinates(x.apply(v))));
    d.generators.push_back(matrix_from_columns(k, cols));
  }
  d.cartan = a.cartan();
  d.center = a.center_index();
  if (!d.center) {
    if (auto f = find_invariant_form(d.generators, d.cartan, k)) {
      d.form = f->first;
      d.form_kind = f->second;
    }
  }
  return LieRep(std::move(d));
}

LieRep traceless_sym2(const LieRep& so_std) {
  if (!so_std.form() || so_std.form_kind() != FormKind::symmetric) {
    throw std::invalid_argument(so_std.name() + ": traceless square needs a symmetric form");
  }
  LieRep s2 = power_rep(so_std, PowerKind::sym, 2);
  const SparseMat& g = *so_std.form();
  const Index n = so_std.dimV();
  // the invariant functional e_i e_j -> G^{ij}, with G^{-1} computed exactly
  SparseMat ginv_cols(n, n);
  {
    std::vector<SparseVec> inv_cols;
    for (Index j = 0; j < n; ++j) {
      MatBuilder aug(n, n + 1);
      for (const auto& t : g.triplets()) aug.add(t.row, t.col, t.value);
      aug.add(j, n, -1);
      Subspace ker = linalg::nullspace(std::move(aug).build());
      SparseVec col;
      for (const auto& v : ker.basis()) {
        Rational last = linalg::entry(v, n);
        if (last == 0) continue;
        for (const auto& [i, c] : v) {
          if (i < n) col.emplace_back(i, c / last);
        }
        break;
      }
      inv_cols.push_back(std::move(col));
    }
    ginv_cols = matrix_from_columns(n, inv_cols);
  }
  auto tuples = index_tuples(n, 2, false);
  SparseVec functional;
  for (Index t = 0; t < tuples.size(); ++t) {
    Rational v = ginv_cols.at(tuples[t][0], tuples[t][1]);
    if (v != 0) functional.emplace_back(t, v);
  }
  Subspace ker = linalg::nullspace(SparseMat::from_rows(s2.dimV(), {functional}));
  return restrict_to_invariant_subspace(s2, ker).renamed(so_std.name() + "^sym2_0");
}

LieRep primitive_wedge3(const LieRep& sp_std) {
  if (!sp_std.form() || sp_std.form_kind() != FormKind::skew) {
    throw std::invalid_argument(sp_std.name() + ": primitive cube needs a symplectic form");
  }
  const Index n = sp_std.dimV();
  LieRep w3 = power_rep(sp_std, PowerKind::wedge, 3);
  const SparseMat& om = *sp_std.form();
  auto tuples = index_tuples(n, 3, true);
  MatBuilder c(n, static_cast<Index>(tuples.size()));
  for (Index t = 0; t < tuples.size(); ++t) {
    Index a = tuples[t][0], b = tuples[t][1], e = tuples[t][2];
    c.add(e, t, om.at(a, b));
    c.add(b, t, -om.at(a, e));
    c.add(a, t, om.at(b, e));
  }
  Subspace ker = linalg::nullspace(std::move(c).build());
  return restrict_to_invariant_subspace(w3, ker).renamed(sp_std.name() + "^wedge3_0");
}

Subspace generated_submodule(const LieRep& a, const SparseVec& v) {
  std::map<Index, SparseVec> rows;
  std::vector<SparseVec> queue;
  auto insert = [&](SparseVec u) {
    // ascending pivots: each subtraction only touches later columns
    for (const auto& [p, row] : rows) {
      if (u.empty()) break;
      if (p < u.front().first) continue;
      Rational c = linalg::entry(u, p);
      if (c != 0) u = linalg::add_scaled(u, -c, row);
    }
    if (u.empty()) return;
    Rational lead = u.front().second;
    u = linalg::scaled(u, 1 / lead);
    rows.emplace(u.front().first, u);
    queue.push_back(std::move(u));
  };
  insert(v);
  while (!queue.empty()) {
    SparseVec w = std::move(queue.back());
    queue.pop_back();
    for (const auto& x : a.generators()) insert(x.apply(w));
    if (rows.size() == a.dimV()) break;
  }
  std::vector<SparseVec> basis;
  for (auto& [p, row] : rows) basis.push_back(std::move(row));
  return Subspace::span(a.dimV(), std::move(basis));
}

ProbeResult irreducibility_probe(const LieRep& a, unsigned trials, std::uint64_t seed) {
  const Index n = a.dimV();
  std::vector<SparseVec> seeds;
  {
    std::vector<SparseVec> stacked;
    for (const auto& x : a.generators()) {
      for (Index r = 0; r < n; ++r) stacked.push_back(x.row(r));
    }
    Subspace inv = linalg::nullspace(SparseMat::from_rows(n, std::move(stacked)));
    for (const auto& v : inv.basis()) seeds.push_back(v);
  }
  for (Index i = 0; i < n; ++i) seeds.push_back({{i, Rational(1)}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (unsigned t = 0; t < trials; ++t) {
    SparseVec v;
    for (Index i = 0; i < n; ++i) {
      int x = dist(rng);
      if (x != 0) v.emplace_back(i, Rational(x));
    }
    if (!v.empty()) seeds.push_back(std::move(v));
  }
  for (const auto& s : seeds) {
    Subspace sub = generated_submodule(a, s);
    if (sub.dim() > 0 && sub.dim() < n) return Reducible{std::move(sub)};
  }
  return ProbablyIrreducible{};
}

}  // namespace skb::lie
