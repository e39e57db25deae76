#pragma once

#include <string>
#include <vector>

#include "skewberger/curvature/curvature.hpp"

namespace skb::prolong {

using lie::LieRep;
using linalg::Index;
using linalg::SolveOptions;
using linalg::SparseMat;
using linalg::SparseVec;
using linalg::Subspace;

/// g^[1] in V*⊗g coordinates (i * dimG + a) and, when requested, g^[2] in
/// V*⊗g^[1] coordinates (i * dim g^[1] + b, b indexing g1's basis).
struct ProlongChain {
  std::string rep;
  Index dimV = 0;
  Index dimG = 0;
  Subspace g1;
  Subspace g2;
  int depth = 0;
};

/// k = 1 or 2. Throws std::invalid_argument for other k.
ProlongChain skew_prolongation(const LieRep& a, int k, const SolveOptions& opts = {});

/// φ(e_m) of a g^[1] element in generator coordinates.
SparseVec prolong_value(const ProlongChain& chain, const SparseVec& phi, Index m);

/// V*⊗g^[1] → ⊙²V*⊗g, column i * dim g^[1] + b is R(x,y) = e^i(x)φ_b(y) + e^i(y)φ_b(x).
SparseMat spencer_map(const ProlongChain& chain);

struct SpencerReport {
  std::size_t dim_g1 = 0;
  std::size_t dim_g2 = 0;
  std::size_t dim_rbar = 0;
  std::size_t spencer_rank = 0;
  std::size_t dim_h22 = 0;
  std::vector<SparseVec> h22_basis;  // lifts in ⊙²V*⊗g of a complement of the image
  bool image_in_rbar = false;        // ∂ kills every column
  bool kernel_matches_g2 = false;    // dim ker = dim g^[2]
  bool exact = false;
};

SpencerReport spencer_h22(const LieRep& a, const curvature::CurvatureSpace& rbar, const SolveOptions& opts = {});
/// Reuses a chain of depth 2.
SpencerReport spencer_h22(const LieRep& a, const ProlongChain& chain, const curvature::CurvatureSpace& rbar);
/// Computes R̄(g) itself.
SpencerReport spencer_h22(const LieRep& a, const SolveOptions& opts = {});

}  // namespace skb::prolong
