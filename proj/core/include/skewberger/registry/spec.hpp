#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewberger/lie/builders.hpp"

namespace skb::registry {

using linalg::Index;

/// Malformed spec string. position is a 0-based character offset.
class SpecSyntaxError : public std::invalid_argument {
 public:
  SpecSyntaxError(const std::string& msg, std::size_t position)
      : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed spec naming no representation (parity, range, arity).
class SpecSemanticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FactorKind { sl, gl, so, sp, spin, g2, f4, e7 };
enum class RepKind { std_rep, adjoint, sym, wedge, spin, spin_plus, spin_minus, tensor, sym2_0, wedge3_0 };

struct Factor {
  FactorKind kind = FactorKind::sl;
  Index n = 0;  // unused for g2, f4, e7

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// spec := algebra ":" rep ; algebra := factor ("*" factor)* ["+z"]
/// factor := sl(n) | gl(n) | so(n) | sp(n) | spin(n) | g2 | f4 | e7
/// rep := std | adjoint | sym(k) | wedge(k) | spin | spin+ | spin- | tensor | sym2_0 | wedge3_0
/// spin(n) is so(n) acting on its spinors (full for odd n, positive half for even n).
struct RepSpec {
  std::vector<Factor> factors;
  bool center = false;
  RepKind rep = RepKind::std_rep;
  Index k = 0;

  /// Sorted factors, gl folded into sl + center for products.
  std::string canonical() const;
  Index dimV() const;
  lie::LieRep build() const;
  /// Classical family when the algebra is a single sl/gl/so/sp factor.
  std::optional<std::pair<lie::Family, Index>> single_classical() const;
};

/// Parses and normalizes; throws SpecSyntaxError or SpecSemanticError.
RepSpec parse_spec(const std::string& text);

/// For presentations isomorphic to another registry form, the preferred spec.
std::optional<std::string> preferred_presentation(const RepSpec& spec);

}  // namespace skb::registry
