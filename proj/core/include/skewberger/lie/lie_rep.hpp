#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewberger/linalg/linalg.hpp"

namespace skb::lie {

using linalg::Index;
using linalg::Rational;
using linalg::SparseMat;
using linalg::SparseVec;
using linalg::Subspace;

enum class FormKind { none, symmetric, skew };
const char* to_string(FormKind k);

/// Raised when a construction fails one of its own consistency checks.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates of matrices in the span of a fixed list of matrices.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(const std::vector<SparseMat>& mats, Index rows, Index cols);

  /// Number of independent matrices among the inputs.
  std::size_t rank() const noexcept { return rank_; }
  bool independent() const noexcept { return independent_; }
  /// Coefficients c with X = sum c_i M_i, or nullopt if X is outside the span.
  std::optional<SparseVec> coordinates(const SparseMat& x) const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Index count_ = 0;
  std::size_t rank_ = 0;
  bool independent_ = false;
  // reduced echelon rows of [vec(M_i) | e_i]; pivots lie in the vec part
  std::vector<SparseVec> echelon_;
};

SparseVec flatten(const SparseMat& x);
SparseMat commutator(const SparseMat& a, const SparseMat& b);

struct LieRepData {
  std::string name;
  Index dimV = 0;
  std::vector<SparseMat> generators;
  std::vector<Index> cartan;
  std::optional<SparseMat> form;
  FormKind form_kind = FormKind::none;
  std::optional<Index> center;
};

/// Explicit matrix realization of a Lie algebra g inside gl(V).
///
/// Construction computes structure constants and verifies linear
/// independence, closure, the Jacobi identity, diagonal Cartan generators and
/// invariance of the declared form. Any failure throws ConstructionError.
class LieRep {
 public:
  LieRep() = default;
  explicit LieRep(LieRepData data, bool check_jacobi = true);

  const std::string& name() const noexcept { return d_.name; }
  Index dimV() const noexcept { return d_.dimV; }
  Index dim() const noexcept { return static_cast<Index>(d_.generators.size()); }
  const std::vector<SparseMat>& generators() const noexcept { return d_.generators; }
  const SparseMat& generator(Index i) const { return d_.generators.at(i); }
  const std::vector<Index>& cartan() const noexcept { return d_.cartan; }
  const std::optional<SparseMat>& form() const noexcept { return d_.form; }
  FormKind form_kind() const noexcept { return d_.form_kind; }
  bool has_center() const noexcept { return d_.center.has_value(); }
  std::optional<Index> center_index() const noexcept { return d_.center; }
  std::vector<Index> semisimple_indices() const;

  /// c_{ij}: coefficients of [X_i, X_j] in the generator basis.
  const SparseVec& bracket(Index i, Index j) const { return structure_[i * dim() + j]; }
  /// Generator coordinates of a matrix in g, nullopt if not in g.
  std::optional<SparseVec> coordinates(const SparseMat& x) const { return span_.coordinates(x); }
  SparseMat element(const SparseVec& coords) const;

  /// Eigenvalue of Cartan generator k on basis vector i.
  Rational cartan_eigenvalue(std::size_t k, Index i) const;
  /// Weight of basis vector i in Cartan coordinates.
  std::vector<Rational> weight_of_basis(Index i) const;
  /// Simultaneous Cartan eigenvalues of each generator under ad, when every
  /// generator is a weight vector; nullopt otherwise.
  std::optional<std::vector<std::vector<Rational>>> generator_weights() const;

  const LieRepData& data() const noexcept { return d_; }
  LieRep renamed(std::string name) const;

 private:
  void compute_structure();
  void check_jacobi() const;
  void check_cartan() const;
  void check_form() const;

  LieRepData d_;
  SpanCoordinates span_;
  std::vector<SparseVec> structure_;
};

/// Nondegenerate invariant bilinear form, if the representation has one.
/// Symmetric is preferred over skew when both exist.
std::optional<std::pair<SparseMat, FormKind>> find_invariant_form(const std::vector<SparseMat>& gens,
                                                                  const std::vector<Index>& cartan,
                                                                  Index dimV);

bool form_invariant(const SparseMat& x, const SparseMat& g);

}  // namespace skb::lie
