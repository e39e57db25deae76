#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skb::linalg {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Four primes just below 2^62, used when no explicit prime list is given.
inline constexpr std::array<std::uint64_t, 4> kDefaultPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL};

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Raised when a prime divides the denominator of an entry that has to be
/// reduced modulo that prime.
class PrimeDividesDenominator : public std::domain_error {
 public:
  explicit PrimeDividesDenominator(std::uint64_t prime);
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};

/// Arithmetic in Z/pZ for a word-sized prime p < 2^63. Residues live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t from_int(long long v) const noexcept;
  std::uint64_t reduce(const Integer& z) const;
  /// Residue of q, or nullopt when p divides the denominator.
  std::optional<std::uint64_t> try_reduce(const Rational& q) const;
  /// Residue of q; throws PrimeDividesDenominator when p divides the denominator.
  std::uint64_t reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
};

/// Smallest |r|/s with r/s == u (mod m), |r|,s <= sqrt(m/2); nullopt if none.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m);

}  // namespace skb::linalg
