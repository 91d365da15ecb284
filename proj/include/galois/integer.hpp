#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois/error.hpp"

namespace galois {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer make_integer(long long v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  // Always "num/den", including integral values, so files stay uniform.
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline int sign(const Integer& v) { return sgn(v); }

inline bool fits_int64(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) throw Error(ErrorCode::OutOfRange, "integer does not fit in 62 bits");
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline Integer isqrt(const Integer& v) {
  if (v < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline bool is_square(const Integer& v) {
  if (v < 0) return false;
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

/// A rational is a square in Q iff numerator and denominator are squares.
inline bool is_square(const Rational& v) {
  return is_square(Integer(v.get_num())) && is_square(Integer(v.get_den()));
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

/// Natural log of |v| for v != 0; safe for values beyond double range.
inline double log_abs(const Integer& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

/// Positive divisors of |v| by trial division; nullopt when |v| is too large
/// to factor this way (callers fall back to an exact root isolation path).
inline std::optional<std::vector<Integer>> positive_divisors(const Integer& v) {
  Integer a = abs_value(v);
  if (a == 0) return std::nullopt;
  if (mpz_sizeinbase(a.get_mpz_t(), 2) > 40) return std::nullopt;
  std::uint64_t n = mpz_get_ui(a.get_mpz_t());
  std::vector<Integer> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.emplace_back(static_cast<unsigned long>(d));
      if (d != n / d) large.emplace_back(static_cast<unsigned long>(n / d));
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace galois
