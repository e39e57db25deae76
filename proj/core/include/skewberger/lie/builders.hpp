#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "skewberger/lie/lie_rep.hpp"

namespace skb::lie {

enum class Family { sl, gl, so, sp };
enum class Chirality { full, plus, minus };
enum class PowerKind { sym, wedge };

/// Standard representation on C^n. so and sp use split forms:
/// G(e_p, e_{n-1-p}) = 1 for so, Omega(e_p, e_{n-1-p}) = +1 (p < n/2) and -1
/// otherwise for sp, so that the first floor(n/2) generators are diagonal.
LieRep build_classical(Family family, Index n);

/// Spin representation of so(m) on a fermionic Fock space with floor(m/2)
/// modes. Generators follow the order of build_classical(so, m).
LieRep build_spin(Index m, Chirality chirality);

/// Stabilizer of a generic 3-form inside split so(7).
LieRep build_g2();
/// so(9) + Delta acting on C + C^9 + Delta (dimension 26).
LieRep build_f4_model();
/// sl(8) + Lambda^4 C^8 acting on Lambda^2 C^8 + Lambda^2 (C^8)^* (dimension 56).
LieRep build_e7_model();

/// g_a + g_b acting on V_a (x) V_b. A duplicated identity generator is kept once.
LieRep tensor_rep(const LieRep& a, const LieRep& b);
/// The action on the k-th symmetric or exterior power, monomial basis in
/// lexicographic order of index tuples.
LieRep power_rep(const LieRep& a, PowerKind kind, Index k);
LieRep adjoint_rep(const LieRep& a);
LieRep add_center(const LieRep& a);
/// Representation on an invariant subspace, in a weight basis of it. Throws
/// std::invalid_argument naming a generator that does not preserve s.
LieRep restrict_to_invariant_subspace(const LieRep& a, const Subspace& s);

/// so(n) on the kernel of the invariant functional on the symmetric square.
LieRep traceless_sym2(const LieRep& so_std);
/// sp(2r) on the kernel of the contraction Lambda^3 V -> V with the symplectic form.
LieRep primitive_wedge3(const LieRep& sp_std);

struct Reducible {
  Subspace witness;
};
struct ProbablyIrreducible {};
using ProbeResult = std::variant<Reducible, ProbablyIrreducible>;

/// Looks for a proper nonzero submodule generated by invariant vectors, basis
/// vectors and `trials` pseudo-random rational vectors. Only "reducible" is a
/// definite answer.
ProbeResult irreducibility_probe(const LieRep& a, unsigned trials, std::uint64_t seed = 1);

/// Smallest g-invariant subspace containing v.
Subspace generated_submodule(const LieRep& a, const SparseVec& v);

/// Index tuples of length k over [0, n), nondecreasing or strictly increasing, in lex order.
std::vector<std::vector<Index>> index_tuples(Index n, Index k, bool strictly_increasing);

}  // namespace skb::lie
