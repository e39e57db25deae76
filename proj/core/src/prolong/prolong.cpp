#include "skewberger/prolong/prolong.hpp"

#include <stdexcept>

namespace skb::prolong {

using curvature::Layout;
using linalg::Rational;
using linalg::Triplet;

ProlongChain skew_prolongation(const LieRep& a, int k, const SolveOptions& opts) {
  if (k != 1 && k != 2) throw std::invalid_argument("skew_prolongation: k must be 1 or 2");
  const Index n = a.dimV(), d = a.dim();
  Layout layout(n, d);
  ProlongChain chain;
  chain.rep = a.name();
  chain.dimV = n;
  chain.dimG = d;
  chain.depth = k;

  // rows (pair(i,j), l): φ(e_i)e_j + φ(e_j)e_i
  std::vector<Triplet> trip;
  for (Index a_ = 0; a_ < d; ++a_) {
    auto cols = a.generator(a_).columns();
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const Index row0 = layout.pair(i, j) * n;
        for (const auto& [l, v] : cols[j]) trip.push_back({row0 + l, i * d + a_, v});
      }
    }
  }
  chain.g1 = linalg::nullspace(SparseMat::from_triplets(layout.num_pairs() * n, n * d, std::move(trip)), opts);
  if (k == 1) return chain;

  const Index d1 = static_cast<Index>(chain.g1.dim());
  trip.clear();
  for (Index b = 0; b < d1; ++b) {
    const SparseVec& phi = chain.g1.basis()[b];
    for (const auto& [c, v] : phi) {
      const Index j = c / d, a_ = c % d;
      // ψ_{i,b} contributes φ_b(e_j) to row (i, j) for every i
      for (Index i = 0; i < n; ++i) trip.push_back({layout.pair(i, j) * d + a_, i * d1 + b, v});
    }
  }
  chain.g2 = linalg::nullspace(SparseMat::from_triplets(layout.num_pairs() * d, n * d1, std::move(trip)), opts);
  return chain;
}

SparseVec prolong_value(const ProlongChain& chain, const SparseVec& phi, Index m) {
  SparseVec out;
  for (const auto& [c, v] : phi) {
    if (c / chain.dimG == m) out.emplace_back(c % chain.dimG, v);
  }
  return out;
}

SparseMat spencer_map(const ProlongChain& chain) {
  const Index n = chain.dimV, d = chain.dimG;
  const Index d1 = static_cast<Index>(chain.g1.dim());
  Layout layout(n, d);
  std::vector<Triplet> trip;
  for (Index b = 0; b < d1; ++b) {
    const SparseVec& phi = chain.g1.basis()[b];
    for (Index i = 0; i < n; ++i) {
      const Index col = i * d1 + b;
      for (const auto& [c, v] : phi) {
        const Index p = c / d, a_ = c % d;
        // R(e_i, e_p) = φ_b(e_p), doubled on the diagonal
        trip.push_back({layout.pair(i, p) * d + a_, col, p == i ? 2 * v : v});
      }
    }
  }
  return SparseMat::from_triplets(layout.cols(), n * d1, std::move(trip));
}

SpencerReport spencer_h22(const LieRep& a, const ProlongChain& chain, const curvature::CurvatureSpace& rbar) {
  if (chain.depth < 2) throw std::invalid_argument("spencer_h22 needs the second prolongation");
  SpencerReport rep;
  rep.dim_g1 = chain.g1.dim();
  rep.dim_g2 = chain.g2.dim();
  rep.dim_rbar = rbar.dim();
  SparseMat s = spencer_map(chain);
  rep.image_in_rbar = true;
  std::vector<SparseVec> cols = s.columns();
  for (const auto& c : cols) {
    if (!c.empty() && !curvature::apply_partial(a, c).empty()) rep.image_in_rbar = false;
  }
  Subspace image = Subspace::span(s.rows(), cols);
  rep.spencer_rank = image.dim();
  rep.kernel_matches_g2 = s.cols() - rep.spencer_rank == rep.dim_g2;
  // residues of R̄ modulo the image span a complement; their echelon form lifts H^{2,2}
  std::vector<SparseVec> residues;
  for (const auto& r : rbar.basis.basis()) {
    SparseVec res = image.reduce(r);
    if (!res.empty()) residues.push_back(std::move(res));
  }
  rep.h22_basis = linalg::rref(s.rows(), std::move(residues));
  rep.dim_h22 = rep.h22_basis.size();
  rep.exact = rep.image_in_rbar && rep.kernel_matches_g2 && rep.dim_rbar >= rep.spencer_rank &&
              rep.dim_h22 == rep.dim_rbar - rep.spencer_rank;
  return rep;
}

SpencerReport spencer_h22(const LieRep& a, const curvature::CurvatureSpace& rbar, const SolveOptions& opts) {
  return spencer_h22(a, skew_prolongation(a, 2, opts), rbar);
}

SpencerReport spencer_h22(const LieRep& a, const SolveOptions& opts) {
  return spencer_h22(a, curvature::skew_curvature_space(a, opts), opts);
}

}  // namespace skb::prolong
