#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "skewberger/lie/builders.hpp"

namespace skb::weights {

using lie::LieRep;
using linalg::Index;
using linalg::Rational;

/// Coordinates are eigenvalues of the Cartan generators in stored order.
using WeightVec = std::vector<Rational>;

struct Weight {
  WeightVec coords;
  std::size_t multiplicity = 0;
};

/// Distinct weights in order of first appearance along the basis of V.
/// Throws lie::ConstructionError if a Cartan generator is not diagonal.
std::vector<Weight> weights_of(const LieRep& a);

struct RootDatum {
  std::vector<WeightVec> roots;       // nonzero ad-weights, lex sorted
  std::vector<WeightVec> positive;    // positive under the chosen order
  std::vector<WeightVec> simple;
  std::vector<Index> root_generator;  // generator carrying roots[i]
  /// Inner product on weight coordinates, dual to K_kl = tr_V(H_k H_l).
  std::vector<std::vector<Rational>> form;

  Rational inner(const WeightVec& x, const WeightVec& y) const;
  /// <λ, α^∨> = 2(λ, α) / (α, α).
  Rational pairing(const WeightVec& lambda, const WeightVec& alpha) const;
  WeightVec reflect(const WeightVec& lambda, const WeightVec& alpha) const;
  bool is_root(const WeightVec& w) const;
};

/// Positivity is lexicographic on order_key(coords); the identity when empty.
/// Throws std::invalid_argument when some generator is not an ad-weight vector.
RootDatum root_datum(const LieRep& a, const std::function<WeightVec(const WeightVec&)>& order_key = {});

struct PhiAlpha {
  std::vector<WeightVec> intersection;  // (α + Φ) ∩ Φ
  std::vector<WeightVec> image;         // weights occurring in A_α V
  bool agree = false;
};
/// Throws std::invalid_argument if alpha is not a root.
PhiAlpha phi_alpha(const LieRep& a, const RootDatum& rd, const WeightVec& alpha);

/// Maximal norm among the weights of V. Throws std::invalid_argument if λ is not a weight.
bool is_extremal(const LieRep& a, const RootDatum& rd, const WeightVec& lambda);

struct SpanningTriple {
  WeightVec lambda0;
  WeightVec lambda1;
  WeightVec alpha;
  bool extremal = false;
  std::size_t orbit_count = 0;  // raw ordered pairs in this class
};

struct SpanningTriples {
  std::vector<SpanningTriple> classes;  // canonical representatives
  std::vector<SpanningTriple> raw;      // every ordered pair satisfying the inclusion
  bool budget_exceeded = false;         // classes is then empty
  std::size_t nodes_visited = 0;
};

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

SpanningTriples spanning_triples(const LieRep& a, const RootDatum& rd, const WeightVec& alpha, bool extremal_only,
                                 std::size_t budget = kDefaultOrbitBudget);

/// Lexicographically least element over the Weyl orbit of (λ0, λ1, α) and
/// of (λ1, λ0, α). nullopt when the orbit exceeds the budget.
std::optional<SpanningTriple> canonical_triple(const RootDatum& rd, const SpanningTriple& t,
                                               std::size_t budget = kDefaultOrbitBudget);

/// ε-coordinates of a weight of a single classical factor. For sl(n) the
/// representative with zero coordinate sum. so and sp coordinates are already ε.
WeightVec epsilon_coordinates(lie::Family family, Index n, const WeightVec& w);
/// Inverse of epsilon_coordinates.
WeightVec from_epsilon(lie::Family family, Index n, const WeightVec& eps);
/// Coordinates <λ, α_i^∨> against the simple roots, ordered by the position
/// of their largest coordinate.
WeightVec fundamental_coordinates(const RootDatum& rd, const WeightVec& w);

}  // namespace skb::weights
