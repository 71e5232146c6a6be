#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hecketrace {

/// Arbitrary-precision integer used for every coefficient.
using Integer = mpz_class;
/// Exact rational number (always kept canonical).
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool fits_int64(const Integer& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Integer& x) { return mpz_get_si(x.get_mpz_t()); }

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Exact quotient; the caller guarantees divisibility.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline bool divides(const Integer& d, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// num/den in lowest terms; mpq_class(num, den) alone leaves the fraction unreduced.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace hecketrace
