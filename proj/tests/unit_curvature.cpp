#include <doctest.h>

#include "oracle/dense_oracle.hpp"
#include "skewberger/curvature/curvature.hpp"
#include "skewberger/lie/builders.hpp"

using namespace skb::curvature;
using namespace skb::lie;

namespace {

// Bianchi system over all ordered triples, unknowns R(i,j) for i <= j.
oracle::Dense brute_bianchi(const LieRep& a, std::size_t& cols) {
  const Index n = a.dimV(), d = a.dim();
  std::vector<std::vector<Index>> pid(n, std::vector<Index>(n));
  Index np = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) pid[i][j] = pid[j][i] = np++;
  }
  cols = np * d;
  oracle::Dense m;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        for (Index l = 0; l < n; ++l) {
          std::vector<oracle::Q> row(cols, 0);
          for (Index g = 0; g < d; ++g) {
            const auto& X = a.generator(g);
            row[pid[x][y] * d + g] += X.at(l, z);
            row[pid[y][z] * d + g] += X.at(l, x);
            row[pid[z][x] * d + g] += X.at(l, y);
          }
          m.push_back(std::move(row));
        }
      }
    }
  }
  return m;
}

std::size_t brute_dim(const LieRep& a) {
  std::size_t cols = 0;
  auto m = brute_bianchi(a, cols);
  return cols - oracle::rank(m, cols);
}

}  // namespace

TEST_CASE("partial shape and layout") {
  LieRep sl2 = build_classical(Family::sl, 2);
  SparseMat p = build_partial(sl2);
  CHECK(p.rows() == 8);
  CHECK(p.cols() == 9);
  Layout l(4, 1);
  CHECK(l.num_pairs() == 10);
  CHECK(l.num_triples() == 20);
  CHECK(l.pair(3, 1) == l.pair(1, 3));
  CHECK(l.triple(3, 0, 2) == l.triple(0, 2, 3));
}

TEST_CASE("curvature spaces agree with the dense oracle") {
  std::vector<LieRep> reps = {
      build_classical(Family::sl, 2),
      build_classical(Family::gl, 2),
      build_classical(Family::so, 3),
      build_classical(Family::so, 4),
      build_classical(Family::sp, 4),
      build_classical(Family::sl, 3),
      power_rep(build_classical(Family::sl, 2), PowerKind::sym, 2),
      power_rep(build_classical(Family::sl, 2), PowerKind::sym, 3),
      tensor_rep(build_classical(Family::sl, 2), build_classical(Family::sl, 2)),
  };
  for (const auto& a : reps) {
    CAPTURE(a.name());
    CurvatureSpace cs = skew_curvature_space(a);
    CHECK(cs.dim() == brute_dim(a));
    SparseMat p = build_partial(a);
    for (const auto& r : cs.basis.basis()) {
      CHECK(p.apply(r).empty());
      CHECK(apply_partial(a, r).empty());
    }
  }
}

TEST_CASE("small curvature dimensions") {
  CHECK(skew_curvature_space(build_spin(7, Chirality::full)).dim() == 126);
  LieRep s1 = build_classical(Family::sl, 2);
  CHECK(skew_curvature_space(s1).dim() == 1);
  CHECK(skew_curvature_space(power_rep(s1, PowerKind::sym, 2)).dim() == 3);
  CHECK(skew_curvature_space(power_rep(s1, PowerKind::sym, 3)).dim() == 0);
  CHECK(skew_curvature_space(build_classical(Family::gl, 2)).dim() == 4);
  LieRep t = tau_tensor_rep(2, 3, false);
  CHECK(skew_curvature_space(t).dim() == 15);
  CHECK(skew_curvature_space(tau_tensor_rep(2, 3, true)).dim() == 36);
}

TEST_CASE("equivariance and skew-Berger test") {
  for (const auto& a : {build_classical(Family::so, 3), build_classical(Family::sl, 3),
                        power_rep(build_classical(Family::sl, 2), PowerKind::sym, 2)}) {
    CAPTURE(a.name());
    CurvatureSpace cs = skew_curvature_space(a);
    for (Index g = 0; g < a.dim(); ++g) {
      for (const auto& r : cs.basis.basis()) {
        SparseVec ar = act_on_curvature(a, g, r);
        CHECK(cs.basis.contains(ar));
        CHECK(apply_partial(a, ar) == act_on_cubic(a, g, apply_partial(a, r)));
      }
    }
  }
  LieRep so3 = build_classical(Family::so, 3);
  auto sb = is_skew_berger(so3, skew_curvature_space(so3));
  CHECK(sb.skew_berger);
  CHECK(sb.dim_L == 3);
  LieRep gl = build_classical(Family::gl, 2);
  auto res = is_skew_berger(gl, skew_curvature_space(gl));
  CHECK(res.dim_L <= gl.dim());
}

TEST_CASE("R_A family") {
  LieRep so3 = build_classical(Family::so, 3);
  RAFamily f = family_R_A(so3);
  CHECK(f.c == 1);
  CHECK(f.tensors.size() == 3);
  CHECK(f.injective);
  for (const auto& a : {build_g2(), build_spin(7, Chirality::full), build_classical(Family::so, 5)}) {
    CAPTURE(a.name());
    RAFamily fa = family_R_A(a);
    CHECK(fa.rank == a.dim());
    CurvatureSpace cs = skew_curvature_space(a);
    for (const auto& t : fa.tensors) CHECK(cs.basis.contains(t));
  }
  CHECK_THROWS_AS(family_R_A(build_classical(Family::sl, 3)), std::invalid_argument);
}

TEST_CASE("R_tau on tensor products") {
  const Index n = 2, m = 3;
  LieRep z = tau_tensor_rep(n, m, true);
  LieRep s = tau_tensor_rep(n, m, false);
  CurvatureSpace csz = skew_curvature_space(z);
  CurvatureSpace css = skew_curvature_space(s);
  std::vector<SparseVec> all, skew;
  for (Index x = 0; x < n * m; ++x) {
    for (Index u = 0; u < n * m; ++u) {
      SparseMat tau = SparseMat::from_triplets(n * m, n * m, {{x, u, 1}});
      SparseVec r = family_R_tau_tensor(z, n, m, tau);
      CHECK(csz.basis.contains(r));
      all.push_back(r);
      // trace of the value at (x, u) over V
      Layout lay(z.dimV(), z.dim());
      Rational tr = 0;
      SparseMat val = curvature_endomorphism(z, r, x, u);
      for (Index i = 0; i < z.dimV(); ++i) tr += val.at(i, i);
      CHECK(tr == tau_tensor_trace(n, m, tau, x, u));
      if (x < u) {
        SparseMat sk = SparseMat::from_triplets(n * m, n * m, {{x, u, 1}, {u, x, -1}});
        SparseVec rs = family_R_tau_tensor(s, n, m, sk);
        CHECK(css.basis.contains(rs));
        skew.push_back(rs);
      }
    }
  }
  CHECK(Subspace::span(csz.basis.ambient_dim(), all).dim() == 36);
  CHECK(Subspace::span(css.basis.ambient_dim(), skew).dim() == 15);
  SparseMat sym = SparseMat::from_triplets(n * m, n * m, {{0, 1, 1}, {1, 0, 1}});
  CHECK_THROWS_AS(family_R_tau_tensor(s, n, m, sym), std::domain_error);
  CHECK(tau_tensor_trace(3, 3, sym, 0, 1) == 0);
}

TEST_CASE("R_tau on the symmetric square") {
  LieRep sq = power_rep(build_classical(Family::sl, 3), PowerKind::sym, 2);
  CurvatureSpace cs = skew_curvature_space(sq);
  std::vector<SparseVec> vals;
  for (Index b = 0; b < spe_tau_dim(3); ++b) {
    SparseVec r = family_R_tau_spe(sq, 3, {{b, Rational(1)}});
    CHECK(cs.basis.contains(r));
    vals.push_back(r);
  }
  CHECK(Subspace::span(cs.basis.ambient_dim(), vals).dim() == cs.dim());
  CHECK(spe_so_constrained_dim(3) == 0);
}

TEST_CASE("nabla and weak spaces") {
  LieRep t = tensor_rep(build_classical(Family::so, 3), build_classical(Family::sl, 3));
  CurvatureSpace ct = skew_curvature_space(t);
  CHECK(nabla_space(t, ct).dim() == 0);

  for (const auto& a : {build_classical(Family::sp, 4), power_rep(build_classical(Family::sl, 2), PowerKind::sym, 3),
                        tensor_rep(build_classical(Family::so, 3), build_classical(Family::sp, 4))}) {
    CAPTURE(a.name());
    CurvatureSpace cs = skew_curvature_space(a);
    WeakSpace ws = weak_space(a);
    Layout lay(a.dimV(), a.dim());
    for (const auto& r : cs.basis.basis()) {
      for (Index x = 0; x < a.dimV(); ++x) CHECK(ws.space.contains(curvature_slice(lay, r, x)));
    }
  }
  CHECK(weak_space(build_classical(Family::sp, 4)).is_weak);

  // symmetric form: slices of the classical curvature x ∧ y lie in P_g
  LieRep so4 = build_classical(Family::so, 4);
  WeakSpace wg = weak_space(so4);
  CHECK(wg.is_weak);
  const SparseMat& g = *so4.form();
  for (Index x = 0; x < 4; ++x) {
    SparseVec p;
    for (Index m = 0; m < 4; ++m) {
      skb::linalg::MatBuilder w(4, 4);
      for (Index z = 0; z < 4; ++z) {
        w.add(x, z, g.at(m, z));
        w.add(m, z, -g.at(x, z));
      }
      auto c = so4.coordinates(std::move(w).build());
      REQUIRE(c);
      for (const auto& [k, v] : *c) p.emplace_back(m * so4.dim() + k, v);
    }
    CHECK(wg.space.contains(p));
  }
  CHECK_THROWS_AS(weak_space(build_classical(Family::sl, 3)), std::invalid_argument);
}
