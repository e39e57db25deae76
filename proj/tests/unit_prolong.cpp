#include <doctest.h>

#include "oracle/dense_oracle.hpp"
#include "skewberger/lie/builders.hpp"
#include "skewberger/prolong/prolong.hpp"

using namespace skb::prolong;
using namespace skb::lie;

namespace {

// dim {φ : φ(x)y = -φ(y)x} over all ordered basis pairs
std::size_t brute_g1(const LieRep& a) {
  const Index n = a.dimV(), d = a.dim();
  oracle::Dense m;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index l = 0; l < n; ++l) {
        std::vector<oracle::Q> row(n * d, 0);
        for (Index g = 0; g < d; ++g) {
          row[x * d + g] += a.generator(g).at(l, y);
          row[y * d + g] += a.generator(g).at(l, x);
        }
        m.push_back(std::move(row));
      }
    }
  }
  return n * d - oracle::rank(m, n * d);
}

}  // namespace

TEST_CASE("first skew-prolongation") {
  CHECK(skew_prolongation(build_classical(Family::sl, 3), 1).g1.dim() == 6);
  CHECK(skew_prolongation(build_classical(Family::so, 4), 1).g1.dim() == 4);
  CHECK(skew_prolongation(build_classical(Family::sp, 4), 1).g1.dim() == 0);
  CHECK_THROWS_AS(skew_prolongation(build_classical(Family::sl, 2), 3), std::invalid_argument);
  for (const auto& a : {build_classical(Family::sl, 2), build_classical(Family::gl, 3), build_classical(Family::so, 5),
                        add_center(build_classical(Family::sp, 4)), adjoint_rep(build_classical(Family::sl, 2)),
                        power_rep(build_classical(Family::sl, 2), PowerKind::sym, 2)}) {
    CAPTURE(a.name());
    ProlongChain c = skew_prolongation(a, 2);
    CHECK(c.g1.dim() == brute_g1(a));
    for (const auto& phi : c.g1.basis()) {
      for (Index x = 0; x < a.dimV(); ++x) {
        for (Index y = 0; y < a.dimV(); ++y) {
          SparseVec ex{{y, 1}}, ey{{x, 1}};
          SparseVec lhs = a.element(prolong_value(c, phi, x)).apply(ex);
          SparseVec rhs = a.element(prolong_value(c, phi, y)).apply(ey);
          CHECK(skb::linalg::add_scaled(lhs, 1, rhs).empty());
        }
      }
    }
  }
}

TEST_CASE("Spencer cohomology") {
  SpencerReport sl3 = spencer_h22(build_classical(Family::sl, 3));
  CHECK(sl3.dim_g1 == 6);
  CHECK(sl3.dim_h22 == 0);
  CHECK(sl3.exact);
  CHECK(sl3.spencer_rank == 3 * 6 - sl3.dim_g2);

  SpencerReport gl5 = spencer_h22(power_rep(build_classical(Family::gl, 5), PowerKind::wedge, 2));
  CHECK(gl5.dim_h22 == 5);
  CHECK(gl5.exact);
  SpencerReport gl7 = spencer_h22(power_rep(build_classical(Family::gl, 7), PowerKind::wedge, 2));
  CHECK(gl7.dim_h22 == 0);
  CHECK(gl7.exact);
  // n = 6 is exceptional: Λ²C⁶ ≅ Λ⁴(C⁶)* adds 21 tensors outside the Spencer image
  SpencerReport gl6 = spencer_h22(power_rep(build_classical(Family::gl, 6), PowerKind::wedge, 2));
  CHECK(gl6.dim_rbar == 336);
  CHECK(gl6.spencer_rank == 315);
  CHECK(gl6.dim_h22 == 21);
  CHECK(gl6.exact);

  LieRep ad = adjoint_rep(build_classical(Family::sl, 3));
  SpencerReport r = spencer_h22(ad);
  CHECK(r.dim_g1 == 1);
  CHECK(r.spencer_rank == ad.dim());
  CHECK(r.image_in_rbar);

  ProlongChain none = skew_prolongation(build_classical(Family::sp, 4), 2);
  CHECK(spencer_map(none).cols() == 0);
}
