#include "skewberger/curvature/curvature.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "skewberger/lie/builders.hpp"

namespace skb::curvature {

using linalg::add_scaled;
using linalg::MatBuilder;
using linalg::Triplet;

Layout::Layout(Index dimV, Index dimG) : n_(dimV), d_(dimG) {
  pair_id_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (Index i = 0; i < n_; ++i) {
    for (Index j = i; j < n_; ++j) {
      pair_id_[i * n_ + j] = static_cast<Index>(pairs_.size());
      pairs_.push_back({i, j});
    }
  }
  triple_id_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
  for (Index i = 0; i < n_; ++i) {
    for (Index j = i; j < n_; ++j) {
      for (Index k = j; k < n_; ++k) triple_id_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k] = num_triples_++;
    }
  }
}

Index Layout::triple(Index i, Index j, Index k) const {
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  return triple_id_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
}

namespace {

using GenColumns = std::vector<std::vector<SparseVec>>;

GenColumns generator_columns(const LieRep& a) {
  GenColumns out;
  out.reserve(a.dim());
  for (const auto& x : a.generators()) out.push_back(x.columns());
  return out;
}

int cyclic_multiplicity(Index t0, Index t1, Index t2, Index i, Index j) {
  auto eq = [&](Index x, Index y) { return (x == i && y == j) || (x == j && y == i); };
  return static_cast<int>(eq(t0, t1)) + static_cast<int>(eq(t1, t2)) + static_cast<int>(eq(t2, t0));
}

// ∂ applied to the basis tensor R(e_i,e_j) = R(e_j,e_i) = X_a. The third
// index of every matching cyclic pair is k itself, so the image at triple
// {i,j,k} is mult * X_a e_k.
template <class Emit>
void partial_column(const Layout& layout, const GenColumns& cols, Index col, Emit&& emit) {
  const Index n = layout.dimV();
  auto [i, j] = layout.pair_at(col / layout.dimG());
  const Index a = col % layout.dimG();
  for (Index k = 0; k < n; ++k) {
    Index t[3] = {i, j, k};
    std::sort(t, t + 3);
    int mult = cyclic_multiplicity(t[0], t[1], t[2], i, j);
    const Index tri = layout.triple(t[0], t[1], t[2]);
    for (const auto& [l, v] : cols[a][k]) emit(tri * n + l, v * mult);
  }
}

std::vector<SparseVec> values_by_pair(const Layout& layout, const SparseVec& r) {
  std::vector<SparseVec> vals(layout.num_pairs());
  for (const auto& [c, v] : r) vals[c / layout.dimG()].emplace_back(c % layout.dimG(), v);
  return vals;
}

SparseVec accumulate(std::vector<std::pair<Index, Rational>> entries) { return linalg::canonical(std::move(entries)); }

std::vector<std::vector<Rational>> dense_inverse(const SparseMat& k) {
  const Index d = k.rows();
  std::vector<SparseVec> aug;
  for (Index r = 0; r < d; ++r) {
    SparseVec row = k.row(r);
    row.emplace_back(d + r, Rational(1));
    aug.push_back(std::move(row));
  }
  auto red = linalg::rref(2 * d, std::move(aug));
  if (red.size() != d || red.back().front().first >= d) throw std::runtime_error("trace form is degenerate on g");
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d, 0));
  for (Index r = 0; r < d; ++r) {
    for (const auto& [c, v] : red[r]) {
      if (c >= d) inv[r][c - d] = v;
    }
  }
  return inv;
}

Rational trace(const SparseMat& m) {
  Rational t = 0;
  for (Index r = 0; r < m.rows(); ++r) t += m.at(r, r);
  return t;
}

}  // namespace

SparseMat build_partial(const LieRep& a) {
  Layout layout(a.dimV(), a.dim());
  GenColumns cols = generator_columns(a);
  std::vector<Triplet> trip;
  for (Index c = 0; c < layout.cols(); ++c) {
    partial_column(layout, cols, c, [&](Index row, const Rational& v) { trip.push_back({row, c, v}); });
  }
  return SparseMat::from_triplets(layout.rows(), layout.cols(), std::move(trip));
}

SparseVec apply_partial(const LieRep& a, const SparseVec& r) {
  Layout layout(a.dimV(), a.dim());
  GenColumns cols = generator_columns(a);
  std::vector<std::pair<Index, Rational>> out;
  for (const auto& [c, x] : r) {
    partial_column(layout, cols, c, [&](Index row, const Rational& v) { out.emplace_back(row, v * x); });
  }
  return accumulate(std::move(out));
}

CurvatureSpace skew_curvature_space(const LieRep& a, const SolveOptions& opts) {
  CurvatureSpace cs;
  cs.rep = a.name();
  cs.dimV = a.dimV();
  cs.dimG = a.dim();
  Layout layout(a.dimV(), a.dim());
  GenColumns gcols = generator_columns(a);

  // group columns by weight: -w_i - w_j + alpha_a
  std::vector<std::vector<Index>> blocks;
  if (auto gw = a.generator_weights()) {
    std::vector<std::vector<Rational>> vw(a.dimV());
    for (Index i = 0; i < a.dimV(); ++i) vw[i] = a.weight_of_basis(i);
    std::map<std::vector<Rational>, std::size_t> block_of;
    for (Index c = 0; c < layout.cols(); ++c) {
      auto [i, j] = layout.pair_at(c / layout.dimG());
      std::vector<Rational> key = (*gw)[c % layout.dimG()];
      for (std::size_t k = 0; k < key.size(); ++k) key[k] -= vw[i][k] + vw[j][k];
      auto [it, fresh] = block_of.try_emplace(std::move(key), blocks.size());
      if (fresh) blocks.emplace_back();
      blocks[it->second].push_back(c);
    }
  } else {
    blocks.emplace_back();
    for (Index c = 0; c < layout.cols(); ++c) blocks.back().push_back(c);
  }
  cs.blocks = blocks.size();

  std::vector<SparseVec> basis;
  for (const auto& block : blocks) {
    std::unordered_map<Index, Index> local_row;
    std::vector<Triplet> trip;
    for (Index lc = 0; lc < block.size(); ++lc) {
      partial_column(layout, gcols, block[lc], [&](Index row, const Rational& v) {
        auto [it, fresh] = local_row.try_emplace(row, static_cast<Index>(local_row.size()));
        trip.push_back({it->second, lc, v});
      });
    }
    SparseMat m = SparseMat::from_triplets(static_cast<Index>(local_row.size()), static_cast<Index>(block.size()),
                                           std::move(trip));
    Subspace ker = linalg::nullspace(m, opts, &cs.stats);
    for (const auto& v : ker.basis()) {
      SparseVec g;
      g.reserve(v.size());
      for (const auto& [lc, x] : v) g.emplace_back(block[lc], x);
      basis.push_back(std::move(g));
    }
  }
  std::sort(basis.begin(), basis.end(),
            [](const SparseVec& x, const SparseVec& y) { return x.front().first < y.front().first; });
  cs.basis = Subspace::from_normal_form(layout.cols(), std::move(basis));
  return cs;
}

SparseVec curvature_value(const Layout& layout, const SparseVec& r, Index i, Index j) {
  const Index p = layout.pair(i, j);
  const Index lo = p * layout.dimG(), hi = lo + layout.dimG();
  SparseVec out;
  auto it = std::lower_bound(r.begin(), r.end(), lo, [](const auto& e, Index c) { return e.first < c; });
  for (; it != r.end() && it->first < hi; ++it) out.emplace_back(it->first - lo, it->second);
  return out;
}

SparseMat curvature_endomorphism(const LieRep& a, const SparseVec& r, Index i, Index j) {
  return a.element(curvature_value(Layout(a.dimV(), a.dim()), r, i, j));
}

Subspace curvature_span(const CurvatureSpace& cs) {
  Layout layout(cs.dimV, cs.dimG);
  std::vector<SparseVec> vals;
  for (const auto& r : cs.basis.basis()) {
    for (auto& v : values_by_pair(layout, r)) {
      if (!v.empty()) vals.push_back(std::move(v));
    }
  }
  return Subspace::span(cs.dimG, std::move(vals));
}

SkewBergerResult is_skew_berger(const LieRep& a, const CurvatureSpace& cs) {
  Subspace l = curvature_span(cs);
  SkewBergerResult res;
  res.dim_L = l.dim();
  res.skew_berger = l.dim() == a.dim();
  if (!res.skew_berger) {
    for (Index g = 0; g < a.dim(); ++g) {
      if (!l.contains(SparseVec{{g, Rational(1)}})) {
        res.missing_generator = g;
        break;
      }
    }
  }
  return res;
}

SparseVec act_on_curvature(const LieRep& a, Index gen, const SparseVec& r) {
  Layout layout(a.dimV(), a.dim());
  auto vals = values_by_pair(layout, r);
  auto acols = a.generator(gen).columns();
  std::vector<std::pair<Index, Rational>> out;
  for (Index p = 0; p < layout.num_pairs(); ++p) {
    auto [i, j] = layout.pair_at(p);
    SparseVec v;
    for (const auto& [b, x] : vals[p]) v = add_scaled(v, x, a.bracket(gen, b));
    for (const auto& [s, x] : acols[i]) v = add_scaled(v, -x, vals[layout.pair(s, j)]);
    for (const auto& [s, x] : acols[j]) v = add_scaled(v, -x, vals[layout.pair(i, s)]);
    for (const auto& [c, x] : v) out.emplace_back(p * layout.dimG() + c, x);
  }
  return accumulate(std::move(out));
}

SparseVec act_on_cubic(const LieRep& a, Index gen, const SparseVec& t) {
  Layout layout(a.dimV(), a.dim());
  const Index n = a.dimV();
  std::vector<SparseVec> vals(layout.num_triples());
  for (const auto& [c, v] : t) vals[c / n].emplace_back(c % n, v);
  const SparseMat& x = a.generator(gen);
  auto acols = x.columns();
  std::vector<std::pair<Index, Rational>> out;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      for (Index k = j; k < n; ++k) {
        const Index tri = layout.triple(i, j, k);
        SparseVec v = x.apply(vals[tri]);
        for (const auto& [s, y] : acols[i]) v = add_scaled(v, -y, vals[layout.triple(s, j, k)]);
        for (const auto& [s, y] : acols[j]) v = add_scaled(v, -y, vals[layout.triple(i, s, k)]);
        for (const auto& [s, y] : acols[k]) v = add_scaled(v, -y, vals[layout.triple(i, j, s)]);
        for (const auto& [l, y] : v) out.emplace_back(tri * n + l, y);
      }
    }
  }
  return accumulate(std::move(out));
}

Subspace nabla_space(const LieRep& a, const CurvatureSpace& cs, const SolveOptions& opts) {
  const Index n = a.dimV(), d = a.dim();
  const Index r = static_cast<Index>(cs.dim());
  if (r == 0) return Subspace(0);
  Layout layout(n, d);
  std::vector<std::vector<SparseVec>> vals;
  vals.reserve(r);
  for (const auto& b : cs.basis.basis()) vals.push_back(values_by_pair(layout, b));
  std::vector<Triplet> trip;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      for (Index k = j; k < n; ++k) {
        const Index tri = layout.triple(i, j, k);
        const Index t[3] = {i, j, k};
        for (int pos = 0; pos < 3; ++pos) {
          const Index m = t[pos];
          const Index p = layout.pair(t[(pos + 1) % 3], t[(pos + 2) % 3]);
          for (Index b = 0; b < r; ++b) {
            for (const auto& [g, x] : vals[b][p]) trip.push_back({tri * d + g, m * r + b, x});
          }
        }
      }
    }
  }
  SparseMat sys = SparseMat::from_triplets(layout.num_triples() * d, n * r, std::move(trip));
  return linalg::nullspace(sys, opts);
}

std::vector<SparseVec> nabla_slices(const CurvatureSpace& cs, const SparseVec& s) {
  const Index r = static_cast<Index>(cs.dim());
  std::vector<SparseVec> out(cs.dimV);
  for (const auto& [c, x] : s) out[c / r] = add_scaled(out[c / r], x, cs.basis.basis()[c % r]);
  return out;
}

RAFamily family_R_A(const LieRep& a) {
  if (!a.form() || a.form_kind() != lie::FormKind::symmetric) {
    throw std::invalid_argument(a.name() + ": the R_A family needs a symmetric preserved form");
  }
  const Index n = a.dimV(), d = a.dim();
  const SparseMat& g = *a.form();
  Layout layout(n, d);
  // trace-form projection of x ∧ y, where (x ∧ y)z = g(x,z)y - g(y,z)x
  MatBuilder kb(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) kb.add(i, j, trace(a.generator(i) * a.generator(j)));
  }
  auto kinv = dense_inverse(std::move(kb).build());
  std::vector<SparseMat> gx;
  for (const auto& x : a.generators()) gx.push_back(g * x);
  // proj[i * n + j]: generator coordinates of the projection of e_i ∧ e_j
  std::vector<SparseVec> proj(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Rational> b(d);
      for (Index c = 0; c < d; ++c) b[c] = gx[c].at(i, j) - gx[c].at(j, i);
      std::vector<Rational> u(d, 0);
      for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) u[r] += kinv[r][c] * b[c];
      }
      proj[i * n + j] = linalg::from_dense(u);
    }
  }
  auto wedge_apply = [&](const std::vector<Rational>& x, const std::vector<Rational>& y, const std::vector<Rational>& z) {
    SparseVec coords;
    for (Index i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (Index j = 0; j < n; ++j) {
        if (i != j && y[j] != 0) coords = add_scaled(coords, x[i] * y[j], proj[i * n + j]);
      }
    }
    return a.element(coords).apply(linalg::from_dense(z));
  };
  auto form = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (Index i = 0; i < n; ++i) {
      for (const auto& [j, v] : g.row(i)) s += x[i] * v * y[j];
    }
    return s;
  };
  auto generic = [&](int salt) {
    std::vector<Rational> v(n);
    for (Index i = 0; i < n; ++i) v[i] = static_cast<long>((i + 2) * (i + salt) % 17 + 1);
    return v;
  };
  auto x = generic(1), y = generic(4), z = generic(9);
  SparseVec lhs = add_scaled(wedge_apply(x, y, z), 1, wedge_apply(x, z, y));
  SparseVec rhs = add_scaled(add_scaled(linalg::scaled(linalg::from_dense(x), -2 * form(y, z)), form(x, y),
                                        linalg::from_dense(z)),
                             form(x, z), linalg::from_dense(y));
  if (lhs.empty()) throw std::runtime_error(a.name() + ": projected wedge vanishes; no R_A structure");
  RAFamily fam;
  fam.c = linalg::entry(rhs, lhs.front().first) / lhs.front().second;
  if (linalg::scaled(lhs, fam.c) != rhs) {
    throw std::runtime_error(a.name() + ": no scaling of the projected wedge satisfies the identity");
  }
  for (auto& p : proj) p = linalg::scaled(p, fam.c);
  // verify on all basis triples
  std::vector<SparseMat> wb(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) wb[i * n + j] = a.element(proj[i * n + j]);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        SparseMat lhs_m = wb[i * n + j];
        SparseVec l = add_scaled(lhs_m.apply({{k, Rational(1)}}), 1, wb[i * n + k].apply({{j, Rational(1)}}));
        SparseVec r = linalg::canonical({{i, -2 * g.at(j, k)}, {k, g.at(i, j)}, {j, g.at(i, k)}});
        if (l != r) throw std::runtime_error(a.name() + ": the wedge identity fails on a basis triple");
      }
    }
  }
  for (Index ag = 0; ag < d; ++ag) {
    auto acols = a.generator(ag).columns();
    std::vector<std::pair<Index, Rational>> out;
    for (Index p = 0; p < layout.num_pairs(); ++p) {
      auto [i, j] = layout.pair_at(p);
      SparseVec v;
      if (g.at(i, j) != 0) v.emplace_back(ag, 2 * g.at(i, j));
      for (const auto& [k, x] : acols[i]) v = add_scaled(v, x, proj[k * n + j]);
      for (const auto& [k, x] : acols[j]) v = add_scaled(v, x, proj[k * n + i]);
      for (const auto& [c, x] : v) out.emplace_back(p * d + c, x);
    }
    SparseVec t = accumulate(std::move(out));
    if (!apply_partial(a, t).empty()) throw std::runtime_error(a.name() + ": R_A fails the Bianchi identity");
    fam.tensors.push_back(std::move(t));
  }
  fam.rank = Subspace::span(layout.cols(), fam.tensors).dim();
  fam.injective = fam.rank == d;
  return fam;
}

LieRep tau_tensor_rep(Index n, Index m, bool with_center) {
  LieRep t = lie::tensor_rep(lie::build_classical(lie::Family::sl, n), lie::build_classical(lie::Family::sl, m));
  if (with_center) t = lie::add_center(t);
  return t;
}

SparseVec family_R_tau_tensor(const LieRep& rep, Index n, Index m, const SparseMat& tau) {
  const Index dim = n * m;
  if (rep.dimV() != dim || tau.rows() != dim || tau.cols() != dim) {
    throw std::invalid_argument("R_tau: dimensions do not match C^n (x) C^m");
  }
  Layout layout(dim, rep.dim());
  SparseMat in = SparseMat::identity(n), im = SparseMat::identity(m);
  auto t = [&](Index x1, Index x2, Index u1, Index u2) { return tau.at(x1 * m + x2, u1 * m + u2); };
  std::vector<std::pair<Index, Rational>> out;
  for (Index p = 0; p < layout.num_pairs(); ++p) {
    auto [x, u] = layout.pair_at(p);
    const Index a = x / m, b = x % m, c = u / m, dd = u % m;
    MatBuilder am(n, n), bm(m, m);
    for (Index q = 0; q < n; ++q) {
      am.add(c, q, -t(a, b, q, dd));
      am.add(a, q, -t(c, dd, q, b));
    }
    for (Index q = 0; q < m; ++q) {
      bm.add(dd, q, t(a, b, c, q));
      bm.add(b, q, t(c, dd, a, q));
    }
    SparseMat amat = std::move(am).build(), bmat = std::move(bm).build();
    MatBuilder full(dim, dim);
    for (const auto& e : amat.triplets()) {
      for (Index q = 0; q < m; ++q) full.add(e.row * m + q, e.col * m + q, e.value);
    }
    for (const auto& e : bmat.triplets()) {
      for (Index q = 0; q < n; ++q) full.add(q * m + e.row, q * m + e.col, e.value);
    }
    auto coords = rep.coordinates(std::move(full).build());
    if (!coords) throw std::domain_error("R_tau: a value lies outside " + rep.name());
    for (const auto& [g, v] : *coords) out.emplace_back(p * rep.dim() + g, v);
  }
  return accumulate(std::move(out));
}

Rational tau_tensor_trace(Index n, Index m, const SparseMat& tau, Index x, Index u) {
  return Rational(static_cast<long>(n) - static_cast<long>(m)) * (tau.at(x, u) + tau.at(u, x));
}

Index spe_tau_dim(Index n) { return n * (n + 1) / 2 * (n * (n - 1) / 2); }

namespace {

// dense τ(x1, x2, y, z), symmetric in (x1, x2) and skew in (y, z)
std::vector<Rational> spe_dense(Index n, const SparseVec& tau) {
  auto sym = lie::index_tuples(n, 2, false);
  auto alt = lie::index_tuples(n, 2, true);
  const Index nw = static_cast<Index>(alt.size());
  std::vector<Rational> t(static_cast<std::size_t>(n) * n * n * n, 0);
  auto at = [&](Index a, Index b, Index c, Index d) -> Rational& { return t[((a * n + b) * n + c) * n + d]; };
  for (const auto& [idx, v] : tau) {
    const auto& s = sym[idx / nw];
    const auto& w = alt[idx % nw];
    for (int swap_s = 0; swap_s < 2; ++swap_s) {
      Index a = s[swap_s], b = s[1 - swap_s];
      if (swap_s == 1 && a == b) continue;
      at(a, b, w[0], w[1]) += v;
      at(a, b, w[1], w[0]) -= v;
    }
  }
  return t;
}

// R_τ(e_i e_j, e_k e_l) as an n x n matrix
SparseMat spe_value(Index n, const std::vector<Rational>& t, Index i, Index j, Index k, Index l) {
  auto at = [&](Index a, Index b, Index c, Index d) { return t[((a * n + b) * n + c) * n + d]; };
  MatBuilder mb(n, n);
  for (Index z = 0; z < n; ++z) {
    mb.add(l, z, -2 * at(i, j, k, z));
    mb.add(k, z, -2 * at(i, j, l, z));
    mb.add(j, z, -2 * at(k, l, i, z));
    mb.add(i, z, -2 * at(k, l, j, z));
  }
  return std::move(mb).build();
}

}  // namespace

SparseVec family_R_tau_spe(const LieRep& rep, Index n, const SparseVec& tau) {
  auto monos = lie::index_tuples(n, 2, false);
  if (rep.dimV() != monos.size()) throw std::invalid_argument("R_tau: representation is not on the symmetric square");
  LieRep sl = lie::build_classical(lie::Family::sl, n);
  auto t = spe_dense(n, tau);
  Layout layout(rep.dimV(), rep.dim());
  std::vector<std::pair<Index, Rational>> out;
  for (Index p = 0; p < layout.num_pairs(); ++p) {
    auto [u, v] = layout.pair_at(p);
    SparseMat val = spe_value(n, t, monos[u][0], monos[u][1], monos[v][0], monos[v][1]);
    auto coords = sl.coordinates(val);
    if (!coords) throw std::domain_error("R_tau: a value is not traceless");
    for (const auto& [g, x] : *coords) out.emplace_back(p * rep.dim() + g, x);
  }
  return accumulate(std::move(out));
}

std::size_t spe_so_constrained_dim(Index n) {
  LieRep so = lie::build_classical(lie::Family::so, n);
  const SparseMat& g = *so.form();
  auto monos = lie::index_tuples(n, 2, false);
  const Index nm = static_cast<Index>(monos.size());
  const Index dim = spe_tau_dim(n);
  std::vector<Triplet> trip;
  for (Index b = 0; b < dim; ++b) {
    auto t = spe_dense(n, {{b, Rational(1)}});
    Index row = 0;
    for (Index u = 0; u < nm; ++u) {
      for (Index v = u; v < nm; ++v) {
        SparseMat val = spe_value(n, t, monos[u][0], monos[u][1], monos[v][0], monos[v][1]);
        SparseMat res = val.transpose() * g + g * val;
        for (const auto& e : res.triplets()) trip.push_back({row + e.row * n + e.col, b, e.value});
        row += n * n;
      }
    }
  }
  const Index rows = nm * (nm + 1) / 2 * n * n;
  return linalg::nullspace(SparseMat::from_triplets(rows, dim, std::move(trip))).dim();
}

WeakSpace weak_space(const LieRep& a, const SolveOptions& opts) {
  if (!a.form()) throw std::invalid_argument(a.name() + ": weak curvature space needs a preserved form");
  const Index n = a.dimV(), d = a.dim();
  const SparseMat& g = *a.form();
  std::vector<SparseMat> w;
  for (const auto& x : a.generators()) w.push_back(x.transpose() * g);
  std::vector<Triplet> trip;
  Index row = 0;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x; y < n; ++y) {
      for (Index z = x; z < n; ++z) {
        for (Index c = 0; c < d; ++c) {
          Rational v1 = w[c].at(y, z), v2 = w[c].at(z, x), v3 = w[c].at(x, y);
          if (v1 != 0) trip.push_back({row, x * d + c, v1});
          if (v2 != 0) trip.push_back({row, y * d + c, v2});
          if (v3 != 0) trip.push_back({row, z * d + c, v3});
        }
        ++row;
      }
    }
  }
  WeakSpace ws;
  ws.space = linalg::nullspace(SparseMat::from_triplets(row, n * d, std::move(trip)), opts);
  std::vector<SparseVec> imgs;
  for (const auto& p : ws.space.basis()) {
    std::vector<SparseVec> per(n);
    for (const auto& [c, v] : p) per[c / d].emplace_back(c % d, v);
    for (auto& v : per) {
      if (!v.empty()) imgs.push_back(std::move(v));
    }
  }
  ws.images = Subspace::span(d, std::move(imgs));
  ws.is_weak = d > 0 && ws.images.dim() == d;
  return ws;
}

SparseVec curvature_slice(const Layout& layout, const SparseVec& r, Index x) {
  std::vector<std::pair<Index, Rational>> out;
  for (Index m = 0; m < layout.dimV(); ++m) {
    for (const auto& [c, v] : curvature_value(layout, r, m, x)) out.emplace_back(m * layout.dimG() + c, v);
  }
  return accumulate(std::move(out));
}

}  // namespace skb::curvature
