#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewberger/lie/lie_rep.hpp"

namespace skb::curvature {

using lie::LieRep;
using linalg::Index;
using linalg::Rational;
using linalg::SolveOptions;
using linalg::SolveStats;
using linalg::SparseMat;
using linalg::SparseVec;
using linalg::Subspace;

/// Index bookkeeping for the coordinate spaces of the symmetrization map.
/// Columns of ⊙²V*⊗g are (i <= j, a) at pair(i, j) * dimG + a; rows of
/// ⊙³V*⊗V are (i <= j <= k, l) at triple(i, j, k) * dimV + l. Pairs and
/// triples are numbered in lexicographic order.
class Layout {
 public:
  Layout(Index dimV, Index dimG);

  Index dimV() const noexcept { return n_; }
  Index dimG() const noexcept { return d_; }
  Index num_pairs() const noexcept { return static_cast<Index>(pairs_.size()); }
  Index num_triples() const noexcept { return num_triples_; }
  Index cols() const noexcept { return num_pairs() * d_; }
  Index rows() const noexcept { return num_triples_ * n_; }

  /// Either argument order.
  Index pair(Index i, Index j) const { return pair_id_[i < j ? i * n_ + j : j * n_ + i]; }
  /// Any argument order.
  Index triple(Index i, Index j, Index k) const;
  std::pair<Index, Index> pair_at(Index p) const { return pairs_[p]; }

 private:
  Index n_;
  Index d_;
  Index num_triples_ = 0;
  std::vector<Index> pair_id_;
  std::vector<Index> triple_id_;
  std::vector<std::pair<Index, Index>> pairs_;
};

/// The matrix of ∂: ⊙²V*⊗g → ⊙³V*⊗V. Row (i,j,k,l) holds the coefficient of
/// e_l in R(e_i,e_j)e_k + R(e_j,e_k)e_i + R(e_k,e_i)e_j, evaluated literally
/// when indices repeat.
SparseMat build_partial(const LieRep& a);
/// ∂R for a single coordinate vector, without forming the matrix.
SparseVec apply_partial(const LieRep& a, const SparseVec& r);

struct CurvatureSpace {
  std::string rep;
  Index dimV = 0;
  Index dimG = 0;
  Subspace basis;  // inside ⊙²V*⊗g, ambient dimension pairs * dimG
  SolveStats stats;
  std::size_t blocks = 0;  // weight blocks solved independently

  std::size_t dim() const noexcept { return basis.dim(); }
};

/// ker ∂, solved one weight block at a time when the generators are weight vectors.
CurvatureSpace skew_curvature_space(const LieRep& a, const SolveOptions& opts = {});

/// R(e_i, e_j) in generator coordinates.
SparseVec curvature_value(const Layout& layout, const SparseVec& r, Index i, Index j);
/// R(e_i, e_j) as an endomorphism of V.
SparseMat curvature_endomorphism(const LieRep& a, const SparseVec& r, Index i, Index j);

/// L(R̄): span of all values R(e_i, e_j), in generator coordinates.
Subspace curvature_span(const CurvatureSpace& cs);

struct SkewBergerResult {
  bool skew_berger = false;
  std::size_t dim_L = 0;
  /// A generator outside L when the test fails.
  std::optional<Index> missing_generator;
};
SkewBergerResult is_skew_berger(const LieRep& a, const CurvatureSpace& cs);

/// Action of generator `gen` on a curvature coordinate vector:
/// (A·R)(x,y) = [A, R(x,y)] - R(Ax,y) - R(x,Ay).
SparseVec act_on_curvature(const LieRep& a, Index gen, const SparseVec& r);
/// Action of generator `gen` on ⊙³V*⊗V in the row coordinates of ∂.
SparseVec act_on_cubic(const LieRep& a, Index gen, const SparseVec& t);

/// R̄∇: S in V*⊗R̄ with S_x(y,z) + S_y(z,x) + S_z(x,y) = 0. Coordinates
/// (m, b) at m * dim R̄ + b, b indexing cs.basis.
Subspace nabla_space(const LieRep& a, const CurvatureSpace& cs, const SolveOptions& opts = {});
/// Expands a nabla_space coordinate vector to S_m coordinates in ⊙²V*⊗g.
std::vector<SparseVec> nabla_slices(const CurvatureSpace& cs, const SparseVec& s);

struct RAFamily {
  Rational c;                      // x ∧̄ y = c · projection of x ∧ y onto g
  std::vector<SparseVec> tensors;  // R_A for each generator A
  std::size_t rank = 0;
  bool injective = false;
};
/// Requires a symmetric preserved form with g inside so(V, G). Throws
/// std::invalid_argument without one, std::runtime_error when no scaling c exists.
RAFamily family_R_A(const LieRep& a);

/// sl(n) + sl(m) (+ center) on C^n ⊗ C^m, the representation carrying R_τ.
LieRep tau_tensor_rep(Index n, Index m, bool with_center);
/// R_τ for τ ∈ V*⊗V*, given as an nm x nm matrix with τ(x, u) = x^T τ u and
/// V index p*m + q for f_p ⊗ h_q. rep must be tau_tensor_rep(n, m, ·). Throws
/// std::domain_error if a value leaves the algebra (non-skew τ without center).
SparseVec family_R_tau_tensor(const LieRep& rep, Index n, Index m, const SparseMat& tau);
/// Trace over V of R_τ(x, u) predicted by (n - m)(τ(x,u) + τ(u,x)).
Rational tau_tensor_trace(Index n, Index m, const SparseMat& tau, Index x, Index u);

/// Coordinates of τ ∈ ⊙²(C^n)*⊗Λ²(C^n)*: index s * C(n,2) + w with s a
/// nondecreasing pair and w a strictly increasing pair, both lexicographic.
Index spe_tau_dim(Index n);
/// R_τ on ⊙²C^n for sl(n); rep must be power_rep(sl(n) std, sym, 2).
SparseVec family_R_tau_spe(const LieRep& rep, Index n, const SparseVec& tau);
/// Dimension of {τ : every value of R_τ lies in so(n)} for the split form.
std::size_t spe_so_constrained_dim(Index n);

struct WeakSpace {
  Subspace space;   // P in V*⊗g at m * dimG + a
  Subspace images;  // span of all P(e_m)
  bool is_weak = false;
};
/// P_g (symmetric form) or P_Ω (skew form): P(x)y paired cyclically vanishes.
/// Throws std::invalid_argument when the representation carries no form.
WeakSpace weak_space(const LieRep& a, const SolveOptions& opts = {});
/// The slice R(·, e_x) in V*⊗g coordinates.
SparseVec curvature_slice(const Layout& layout, const SparseVec& r, Index x);

}  // namespace skb::curvature
