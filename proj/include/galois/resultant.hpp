#pragma once

#include "galois/error.hpp"
#include "galois/integer.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// Resultant over Z by the subresultant pseudo-remainder sequence
/// (Collins / Brown). Intermediate divisions are exact, so coefficients stay
/// bounded by the subresultant determinants.
inline Integer resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0 && b.degree() == 0) return 1;
  Integer ca = a.content();
  Integer cb = b.content();
  a = a.divided_exactly(ca);
  b = b.divided_exactly(cb);
  Integer t = pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
  }
  Integer g = 1, h = 1;
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = r.divided_exactly(g * pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    // h <- g^delta / h^(delta - 1), exact; unchanged when delta == 0.
    if (delta > 0) {
      Integer num = pow(g, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // b is a nonzero constant here.
  const int da = a.degree();
  Integer num = pow(b.leading(), static_cast<unsigned long>(da));
  Integer den = pow(h, static_cast<unsigned long>(da > 0 ? da - 1 : 0));
  Integer last;
  if (da == 0) {
    last = 1;
  } else {
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return Integer(s * t * last);
}

/// Discriminant (-1)^(n(n-1)/2) Res(f, f') / a_n, so that
/// disc(a2 x^2 + a1 x + a0) = a1^2 - 4 a0 a2.
inline Integer discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "discriminant needs degree >= 2");
  Integer res = resultant(f, f.derivative());
  Integer out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) out = -out;
  return out;
}

}  // namespace galois
