#include "skewberger/linalg/scalar.hpp"

#include <string>

namespace skb::linalg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

PrimeDividesDenominator::PrimeDividesDenominator(std::uint64_t prime)
    : std::domain_error("prime " + std::to_string(prime) +
                        " divides the denominator of a matrix entry"),
      prime_(prime) {}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 63)) {
    throw std::invalid_argument("prime field modulus out of range");
  }
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  // extended Euclid on signed 128-bit values
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible; modulus is not prime");
  if (t < 0) t += p_;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::from_int(long long v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return neg(m % p_);
}

std::uint64_t PrimeField::reduce(const Integer& z) const {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
  return mpz_fdiv_ui(z.get_mpz_t(), p_);
}

std::optional<std::uint64_t> PrimeField::try_reduce(const Rational& q) const {
  std::uint64_t den = reduce(q.get_den());
  if (den == 0) return std::nullopt;
  return mul(reduce(q.get_num()), inv(den));
}

std::uint64_t PrimeField::reduce(const Rational& q) const {
  auto r = try_reduce(q);
  if (!r) throw PrimeDividesDenominator(p_);
  return *r;
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace skb::linalg
