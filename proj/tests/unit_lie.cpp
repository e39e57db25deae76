#include <doctest.h>

#include "skewberger/lie/builders.hpp"

using namespace skb::lie;
using skb::linalg::Rational;

namespace {

bool all_cartan_diagonal(const LieRep& a) {
  for (Index h : a.cartan()) {
    if (!a.generator(h).is_diagonal()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("classical standard representations") {
  LieRep sl2 = build_classical(Family::sl, 2);
  CHECK(sl2.dim() == 3);
  CHECK(sl2.dimV() == 2);
  REQUIRE(sl2.cartan().size() == 1);
  CHECK(sl2.generator(sl2.cartan()[0]) == SparseMat::from_dense({{1, 0}, {0, -1}}));
  REQUIRE(sl2.form());
  CHECK(sl2.form_kind() == FormKind::skew);
  CHECK_FALSE(build_classical(Family::sl, 3).form());

  LieRep so3 = build_classical(Family::so, 3);
  CHECK(so3.dim() == 3);
  REQUIRE(so3.form());
  CHECK(so3.form_kind() == FormKind::symmetric);
  CHECK(*so3.form() == SparseMat::from_dense({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  for (const auto& x : so3.generators()) CHECK(form_invariant(x, *so3.form()));

  CHECK_THROWS_AS(build_classical(Family::sp, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_classical(Family::so, 2), std::invalid_argument);

  for (Index n = 2; n <= 8; n += 2) {
    LieRep sp = build_classical(Family::sp, n);
    CHECK(sp.dim() == n * (n + 1) / 2);
    CHECK(sp.form_kind() == FormKind::skew);
  }
  for (Index n = 3; n <= 8; ++n) CHECK(build_classical(Family::so, n).dim() == n * (n - 1) / 2);
  LieRep gl3 = build_classical(Family::gl, 3);
  CHECK(gl3.dim() == 9);
  CHECK(gl3.has_center());
  CHECK(gl3.semisimple_indices().size() == 8);
}

TEST_CASE("spin representations") {
  LieRep s7 = build_spin(7, Chirality::full);
  CHECK(s7.dimV() == 8);
  CHECK(s7.dim() == 21);
  CHECK(s7.form_kind() == FormKind::symmetric);
  LieRep s10 = build_spin(10, Chirality::plus);
  CHECK(s10.dimV() == 16);
  CHECK(s10.dim() == 45);
  CHECK(build_spin(12, Chirality::plus).dimV() == 32);
  CHECK_THROWS_AS(build_spin(10, Chirality::full), std::invalid_argument);
  CHECK_THROWS_AS(build_spin(7, Chirality::minus), std::invalid_argument);

  for (const auto& w : {std::make_pair(7u, Chirality::full), std::make_pair(8u, Chirality::plus),
                        std::make_pair(10u, Chirality::minus)}) {
    LieRep s = build_spin(w.first, w.second);
    LieRep so = build_classical(Family::so, w.first);
    REQUIRE(s.dim() == so.dim());
    // same structure constants as the vector representation, generator by generator
    for (Index i = 0; i < s.dim(); ++i) {
      for (Index j = 0; j < s.dim(); ++j) CHECK(s.bracket(i, j) == so.bracket(i, j));
    }
    for (Index v = 0; v < s.dimV(); ++v) {
      for (const auto& c : s.weight_of_basis(v)) CHECK(abs(c) == Rational(1, 2));
    }
  }
}

TEST_CASE("tensor and power representations") {
  LieRep t = tensor_rep(build_classical(Family::so, 3), build_classical(Family::sp, 4));
  CHECK(t.dim() == 13);
  CHECK(t.dimV() == 12);
  CHECK(t.form_kind() == FormKind::skew);
  CHECK(all_cartan_diagonal(t));
  CHECK(tensor_rep(build_classical(Family::sl, 2), build_classical(Family::sl, 3)).dim() == 11);
  LieRep tg = tensor_rep(build_classical(Family::gl, 2), build_classical(Family::gl, 3));
  CHECK(tg.dim() == 12);
  CHECK(tg.has_center());

  CHECK(power_rep(build_classical(Family::sl, 5), PowerKind::wedge, 2).dimV() == 10);
  CHECK(power_rep(build_classical(Family::sl, 3), PowerKind::sym, 2).dimV() == 6);
  LieRep s3 = power_rep(build_classical(Family::sl, 2), PowerKind::sym, 3);
  CHECK(s3.dimV() == 4);
  CHECK(all_cartan_diagonal(s3));
  // sl(2) on cubics preserves a symplectic form
  CHECK(s3.form_kind() == FormKind::skew);
  CHECK_THROWS_AS(power_rep(build_classical(Family::sl, 3), PowerKind::wedge, 4), std::invalid_argument);
  LieRep w3 = power_rep(build_classical(Family::sl, 6), PowerKind::wedge, 3);
  CHECK(w3.dimV() == 20);
  CHECK(w3.form_kind() == FormKind::skew);
}

TEST_CASE("adjoint and center") {
  CHECK(adjoint_rep(build_classical(Family::sl, 2)).dimV() == 3);
  LieRep ad5 = adjoint_rep(build_classical(Family::so, 5));
  CHECK(ad5.dimV() == 10);
  for (const auto& x : ad5.generators()) CHECK(form_invariant(x, *ad5.form()));
  CHECK_THROWS_AS(adjoint_rep(build_classical(Family::gl, 2)), std::invalid_argument);
  CHECK(add_center(build_spin(10, Chirality::plus)).dim() == 46);
  CHECK_THROWS_AS(add_center(build_classical(Family::gl, 2)), std::invalid_argument);
  LieRep gl = add_center(build_classical(Family::sl, 3));
  CHECK(gl.has_center());
  CHECK(gl.dim() == 9);
}

TEST_CASE("invariant subspaces") {
  LieRep so3 = build_classical(Family::so, 3);
  LieRep s20 = traceless_sym2(so3);
  CHECK(s20.dimV() == 5);
  CHECK(all_cartan_diagonal(s20));
  LieRep p14 = primitive_wedge3(build_classical(Family::sp, 6));
  CHECK(p14.dimV() == 14);
  CHECK(p14.dim() == 21);
  CHECK(all_cartan_diagonal(p14));
  CHECK(p14.form_kind() == FormKind::skew);

  Subspace line = Subspace::span(3, {SparseVec{{0, Rational(1)}}});
  CHECK_THROWS_AS(restrict_to_invariant_subspace(build_classical(Family::sl, 3), line), std::invalid_argument);
}

TEST_CASE("irreducibility probe") {
  CHECK(std::holds_alternative<ProbablyIrreducible>(irreducibility_probe(build_classical(Family::sl, 2), 4)));
  LieRep so3 = build_classical(Family::so, 3);
  LieRep s2 = power_rep(so3, PowerKind::sym, 2);
  auto res = irreducibility_probe(s2, 4);
  REQUIRE(std::holds_alternative<Reducible>(res));
  const Subspace& w = std::get<Reducible>(res).witness;
  CHECK(w.dim() == 1);
  // the invariant quadric e0 e2 + e1^2 / 2 in monomial coordinates (00,01,02,11,12,22)
  CHECK(w.contains(SparseVec{{2, Rational(2)}, {3, Rational(1)}}));
  LieRep direct = tensor_rep(build_classical(Family::sl, 2), build_classical(Family::sl, 2));
  CHECK(std::holds_alternative<ProbablyIrreducible>(irreducibility_probe(direct, 4)));
  // sl(2) acting diagonally on C^2 (x) C^2 splits as sym + wedge
  LieRep sl2 = build_classical(Family::sl, 2);
  LieRepData d;
  d.name = "sl(2) diag";
  d.dimV = 4;
  SparseMat id2 = SparseMat::identity(2);
  for (const auto& x : sl2.generators()) {
    std::vector<skb::linalg::Triplet> t;
    for (const auto& a : x.triplets()) {
      for (Index k = 0; k < 2; ++k) {
        t.push_back({a.row * 2 + k, a.col * 2 + k, a.value});
        t.push_back({k * 2 + a.row, k * 2 + a.col, a.value});
      }
    }
    d.generators.push_back(SparseMat::from_triplets(4, 4, t));
  }
  d.cartan = {0};
  CHECK(std::holds_alternative<Reducible>(irreducibility_probe(LieRep(d), 4)));
}

TEST_CASE("exceptional models") {
  LieRep g2 = build_g2();
  CHECK(g2.dim() == 14);
  CHECK(g2.dimV() == 7);
  CHECK(g2.cartan().size() == 2);
  CHECK(g2.form_kind() == FormKind::symmetric);
  LieRep f4 = build_f4_model();
  CHECK(f4.dim() == 52);
  CHECK(f4.dimV() == 26);
  CHECK(f4.form_kind() == FormKind::symmetric);
  for (Index i = 0; i < 36; ++i) CHECK(f4.generator(i).row(0).empty());
  LieRep e7 = build_e7_model();
  CHECK(e7.dim() == 133);
  CHECK(e7.dimV() == 56);
  CHECK(e7.form_kind() == FormKind::skew);
}
