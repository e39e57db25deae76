#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewberger/linalg/scalar.hpp"
#include "skewberger/linalg/sparse.hpp"

namespace skb::linalg {

/// Raised when an elimination exceeds its configured time or fill budget.
/// The message carries how far the elimination got.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResourceLimits {
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
  std::size_t max_entries = 0;               // 0 = unlimited
};

enum class Arithmetic { rational, modular, automatic };

const char* to_string(Arithmetic a);
Arithmetic parse_arithmetic(const std::string& s);

struct SolveOptions {
  Arithmetic arithmetic = Arithmetic::automatic;
  std::vector<std::uint64_t> primes{kDefaultPrimes.begin(), kDefaultPrimes.end()};
  /// In automatic mode, systems with at least this many stored entries are
  /// solved modularly.
  std::size_t modular_threshold = 4000;
  ResourceLimits limits;
};

/// What a solve actually did; accumulated across calls by the caller.
struct SolveStats {
  std::size_t rational_solves = 0;
  std::size_t modular_solves = 0;
  std::size_t modular_fallbacks = 0;
  std::vector<std::uint64_t> primes_used;
};

/// Linear subspace of Q^n stored as a reduced row echelon basis with pivots 1.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}

  static Subspace full(Index ambient);
  static Subspace span(Index ambient, std::vector<SparseVec> vectors);
  /// Wraps a basis the caller guarantees to be in normal form: reduced row
  /// echelon, unit pivots, sorted by pivot.
  static Subspace from_normal_form(Index ambient, std::vector<SparseVec> basis);

  Index ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool empty() const noexcept { return basis_.empty(); }
  const std::vector<SparseVec>& basis() const noexcept { return basis_; }
  std::vector<Index> pivots() const;

  /// Remainder of v after clearing every pivot coordinate.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis; v must lie in the subspace.
  std::vector<Rational> coordinates(const SparseVec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  std::vector<SparseVec> basis_;
};

/// Reduced row echelon form of the span of the given vectors (rank rows).
std::vector<SparseVec> rref(Index ambient, std::vector<SparseVec> vectors,
                            const ResourceLimits& limits = {});

Subspace nullspace(const SparseMat& m, const SolveOptions& opts = {}, SolveStats* stats = nullptr);
std::size_t rank(const SparseMat& m, const SolveOptions& opts = {}, SolveStats* stats = nullptr);
Subspace column_space(const SparseMat& m, const SolveOptions& opts = {});
Subspace intersect(const Subspace& a, const Subspace& b);

/// Rank over Z/pZ; throws PrimeDividesDenominator if p divides an entry's denominator.
std::size_t rank_mod(const SparseMat& m, std::uint64_t p, const ResourceLimits& limits = {});
std::size_t rank_exact(const SparseMat& m, const ResourceLimits& limits = {});

enum class RankFlag { modular_agreed, modular_disagreement, certified };
const char* to_string(RankFlag f);

struct VerifiedRank {
  std::size_t rank = 0;
  RankFlag flag = RankFlag::modular_agreed;
  std::vector<std::size_t> per_prime;
};

/// Rank modulo each prime; all agreeing gives "modular-agreed". With
/// confirm_exact an exact rational elimination upgrades the flag.
VerifiedRank verified_rank(const SparseMat& m, const std::vector<std::uint64_t>& primes,
                           bool confirm_exact = false, const ResourceLimits& limits = {});

}  // namespace skb::linalg
