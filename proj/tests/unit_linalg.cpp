#include <doctest.h>

#include <random>

#include "oracle/dense_oracle.hpp"
#include "skewberger/linalg/linalg.hpp"

using namespace skb::linalg;

namespace {

SparseMat dense(std::vector<std::vector<Rational>> rows) { return SparseMat::from_dense(rows); }

oracle::Dense to_oracle(const SparseMat& m) {
  oracle::Dense d(m.rows(), std::vector<oracle::Q>(m.cols(), 0));
  for (const auto& t : m.triplets()) d[t.row][t.col] = t.value;
  return d;
}

SparseMat random_matrix(std::mt19937_64& rng, Index r, Index c, int density_pct, bool low_rank) {
  std::uniform_int_distribution<int> val(-9, 9), pct(0, 99), den(1, 4);
  std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c, 0));
  for (auto& row : rows) {
    for (auto& x : row) {
      if (pct(rng) < density_pct) {
        x = Rational(val(rng), den(rng));
        x.canonicalize();
      }
    }
  }
  if (low_rank && r > 2) {
    for (Index i = 0; i < c; ++i) rows[r - 1][i] = rows[0][i] * 3 - rows[1][i];
  }
  return dense(rows);
}

}  // namespace

TEST_CASE("scalars stay canonical") {
  Rational x = parse_rational("6/-4");
  CHECK(x == Rational(-3, 2));
  CHECK(x.get_den() > 0);
  PrimeField f(kDefaultPrimes[0]);
  CHECK(f.reduce(Rational(-1)) == kDefaultPrimes[0] - 1);
  CHECK(f.mul(f.reduce(Rational(1, 3)), 3) == 1);
  auto r = rational_reconstruct(Integer(static_cast<unsigned long>(f.reduce(Rational(-7, 11)))),
                                Integer(static_cast<unsigned long>(kDefaultPrimes[0])));
  REQUIRE(r);
  CHECK(*r == Rational(-7, 11));
}

TEST_CASE("sparse matrices drop zeros and merge duplicates") {
  auto m = SparseMat::from_triplets(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, 2}, {1, 1, 3}});
  CHECK(m.nnz() == 1);
  CHECK(m.at(1, 1) == 5);
  CHECK_THROWS_AS(SparseMat::from_triplets(2, 2, {{2, 0, 1}}), std::out_of_range);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(SparseMat(3, 5)).dim() == 5);
  CHECK(nullspace(SparseMat::identity(4)).dim() == 0);
  Subspace k = nullspace(dense({{1, 2, 3}, {2, 4, 6}}));
  CHECK(k.dim() == 2);
  CHECK(k.contains(SparseVec{{0, -2}, {1, 1}}));
  CHECK(k.contains(SparseVec{{0, -3}, {2, 1}}));
}

TEST_CASE("rank and column space examples") {
  CHECK(rank(SparseMat(2, 2)) == 0);
  CHECK(rank(SparseMat::identity(7)) == 7);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(column_space(SparseMat::identity(3)) == Subspace::full(3));
  CHECK(column_space(SparseMat(3, 2)).dim() == 0);
  Subspace c = column_space(dense({{1, 1}, {0, 0}, {2, 2}}));
  CHECK(c == Subspace::span(3, {SparseVec{{0, 1}, {2, 2}}}));
}

TEST_CASE("intersect examples") {
  Subspace a = Subspace::span(2, {SparseVec{{0, 1}}, SparseVec{{1, 1}}});
  Subspace b = Subspace::span(2, {SparseVec{{0, 1}, {1, 1}}});
  CHECK(intersect(a, b) == b);
  CHECK(intersect(b, Subspace::full(2)) == b);
  CHECK(intersect(b, Subspace(2)).dim() == 0);
  CHECK_THROWS_AS(intersect(b, Subspace(3)), std::invalid_argument);
}

TEST_CASE("verified rank") {
  std::vector<std::uint64_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
  VerifiedRank v = verified_rank(SparseMat::identity(5), primes);
  CHECK(v.rank == 5);
  CHECK(v.flag == RankFlag::modular_agreed);
  VerifiedRank c = verified_rank(SparseMat::identity(5), primes, true);
  CHECK(c.flag == RankFlag::certified);
  auto bad = dense({{Rational(1) / Rational(mpz_class(std::to_string(kDefaultPrimes[0]))), 1}});
  try {
    verified_rank(bad, primes);
    FAIL("expected PrimeDividesDenominator");
  } catch (const PrimeDividesDenominator& e) {
    CHECK(e.prime() == kDefaultPrimes[0]);
    CHECK(std::string(e.what()).find(std::to_string(kDefaultPrimes[0])) != std::string::npos);
  }
  CHECK_THROWS_AS(verified_rank(SparseMat::identity(2), {kDefaultPrimes[0]}), std::invalid_argument);
}

TEST_CASE("randomized agreement with the dense oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Index r = 1 + rng() % 9, c = 1 + rng() % 9;
    SparseMat m = random_matrix(rng, r, c, 20 + static_cast<int>(rng() % 60), trial % 2 == 0);
    auto od = to_oracle(m);
    std::size_t expected = oracle::rank(od, c);
    CHECK(rank(m) == expected);
    Subspace k = nullspace(m);
    CHECK(k.dim() + expected == c);
    for (const auto& b : k.basis()) CHECK(m.apply(b).empty());
    // the normal form is canonical, so it must equal the oracle's RREF kernel
    auto ok = oracle::nullspace(od, c);
    REQUIRE(ok.size() == k.dim());
    for (std::size_t i = 0; i < ok.size(); ++i) CHECK(to_dense(k.basis()[i], c) == ok[i]);
    SolveOptions mod;
    mod.arithmetic = Arithmetic::modular;
    CHECK(nullspace(m, mod) == k);
    CHECK(verified_rank(m, {kDefaultPrimes[2], kDefaultPrimes[3]}).rank == expected);
    CHECK(Subspace::span(c, k.basis()) == k);
  }
}

TEST_CASE("resource limits abort with a diagnostic") {
  ResourceLimits lim;
  lim.max_entries = 3;
  SolveOptions opts;
  opts.limits = lim;
  std::mt19937_64 rng(3);
  SparseMat m = random_matrix(rng, 12, 12, 90, false);
  CHECK_THROWS_AS(nullspace(m, opts), ResourceLimitExceeded);
}
