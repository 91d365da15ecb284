#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "galois/bigfloat.hpp"
#include "galois/error.hpp"
#include "galois/integer.hpp"
#include "galois/polynomial.hpp"
#include "galois/resultant.hpp"

namespace galois {

struct InvariantVector {
  int degree = 0;
  std::vector<Integer> values;
  std::vector<int> weights;
};

/// max_k |v_k|^(1 / w_k).
inline double weighted_height(const InvariantVector& inv) {
  if (inv.values.size() != inv.weights.size())
    throw Error(ErrorCode::InvalidArgument, "invariant and weight lists differ in length");
  double best = 0;
  for (std::size_t k = 0; k < inv.values.size(); ++k) {
    if (inv.values[k] == 0) continue;
    best = std::max(best, std::exp(log_abs(inv.values[k]) / inv.weights[k]));
  }
  return best;
}

/// Cubic forms carry the single invariant 2 * disc, weight 4.
inline InvariantVector cubic_invariants(const IntPolynomial& f) {
  if (f.degree() != 3) throw Error(ErrorCode::InvalidArgument, "expected a cubic");
  return {3, {2 * discriminant(f)}, {4}};
}

struct QuarticInvariants {
  Integer J2, J3, delta;
  Rational j;

  InvariantVector vector() const { return {4, {J2, J3}, {3, 4}}; }
};

/// J2, J3, disc = (4 J2^3 - J3^2) / 27 and j = J2^3 / (4 J2^3 - J3^2).
inline QuarticInvariants quartic_invariants(const IntPolynomial& f) {
  if (f.degree() != 4) throw Error(ErrorCode::InvalidArgument, "expected a quartic");
  const Integer &a0 = f[0], &a1 = f[1], &a2 = f[2], &a3 = f[3], &a4 = f[4];
  QuarticInvariants q;
  q.J2 = 12 * a0 * a4 - 3 * a1 * a3 + a2 * a2;
  q.J3 = 72 * a0 * a2 * a4 - 27 * a0 * a3 * a3 - 27 * a1 * a1 * a4 + 9 * a1 * a2 * a3 - 2 * a2 * a2 * a2;
  Integer d = 4 * q.J2 * q.J2 * q.J2 - q.J3 * q.J3;
  q.delta = d / 27;
  if (d == 0) throw Error(ErrorCode::ZeroDiscriminant, "j is undefined for a singular quartic");
  q.j = Rational(q.J2 * q.J2 * q.J2, d);
  q.j.canonicalize();
  return q;
}

/// Resolvent g(x) = x^6 + d1 x^5 + ... + d6 of a quintic.
struct SexticResolvent {
  std::array<Integer, 6> d;
  std::array<Integer, 6> delta_nearest;  // real parts of delta_i, rounded

  IntPolynomial polynomial() const {
    std::vector<Integer> c(7);
    c[6] = 1;
    for (int r = 1; r <= 6; ++r) c[static_cast<std::size_t>(6 - r)] = d[static_cast<std::size_t>(r - 1)];
    return IntPolynomial(std::move(c));
  }
};

/// The six pentagons (one per 5-Sylow subgroup of S5), 0-based.
inline constexpr std::array<std::array<int, 5>, 6> kSylowPentagons{{
    {0, 1, 2, 3, 4},
    {0, 1, 2, 4, 3},
    {0, 1, 3, 4, 2},
    {0, 1, 3, 2, 4},
    {0, 1, 4, 2, 3},
    {0, 2, 3, 4, 1},
}};

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 212;
inline constexpr mpfr_prec_t kMaxPrecisionBits = 4096;

namespace detail {

/// Accepts x when it is within 1e-10 relative (and 2^-16 absolute) of an integer.
inline bool certify_integer(const Real& x, const Real& imag, Integer& out) {
  out = x.nearest_integer();
  Real err = abs(x - Real(out, x.precision()));
  double e = err.to_double();
  double scale = std::max(1.0, std::fabs(out.get_d()));
  double ei = std::fabs(imag.to_double());
  return e <= 1e-10 * scale && e <= std::ldexp(1.0, -16) && ei <= 1e-10 * scale;
}

}  // namespace detail

/// delta_i = -5 a5^4 (T_i + T'_i) where T_i is the product of the squared
/// root differences along the edges of pentagon i and T'_i the same along its
/// opposite pentagon; d_r = e_r(delta_1..delta_6), certified to integers.
/// Coinciding delta_i raise DegenerateDelta unless allow_degenerate is set
/// (the d_r, and so J4, J8, J12, stay well defined).
inline SexticResolvent quintic_resolvent(const IntPolynomial& f, mpfr_prec_t precision_bits = kDefaultPrecisionBits,
                                         bool allow_degenerate = false, mpfr_prec_t* precision_used = nullptr) {
  if (f.degree() != 5) throw Error(ErrorCode::InvalidArgument, "expected a quintic");
  for (mpfr_prec_t prec = precision_bits; prec <= kMaxPrecisionBits; prec *= 2) {
    auto roots = complex_roots(f, prec);
    auto sq_diff = [&](int i, int j) {
      Complex d = roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      return d * d;
    };
    Real scale(pow(f.leading(), 4) * -5, prec);
    std::vector<Complex> delta;
    for (const auto& c : kSylowPentagons) {
      Complex pent(Real(1.0, prec), Real(prec)), opp(Real(1.0, prec), Real(prec));
      for (int k = 0; k < 5; ++k) {
        pent *= sq_diff(c[k], c[(k + 1) % 5]);
        opp *= sq_diff(c[k], c[(k + 2) % 5]);
      }
      delta.push_back((pent + opp) * scale);
    }
    // e_r by the product expansion of prod (x + delta_i).
    std::vector<Complex> e(7, Complex(prec));
    e[0] = Complex(Real(1.0, prec), Real(prec));
    for (const auto& di : delta)
      for (int r = 6; r >= 1; --r) e[static_cast<std::size_t>(r)] += e[static_cast<std::size_t>(r - 1)] * di;

    // e_r is a sum of products of r of the delta_i; once those terms carry
    // more bits than the working precision the rounding can land on an
    // integer by accident, so the precision must exceed them with margin.
    std::vector<long> bits;
    for (const auto& di : delta) {
      long b = 0;
      for (const Real* part : {&di.re, &di.im})
        if (!mpfr_zero_p(part->get())) b = std::max<long>(b, mpfr_get_exp(part->get()));
      bits.push_back(b);
    }
    long term_bits = 0;
    for (long b : bits) term_bits += std::max(0L, b);
    if (term_bits + 64 > static_cast<long>(prec)) continue;

    SexticResolvent res;
    for (std::size_t i = 0; i < 6; ++i) res.delta_nearest[i] = delta[i].re.nearest_integer();
    bool ok = true;
    for (int r = 1; r <= 6 && ok; ++r)
      ok = detail::certify_integer(e[static_cast<std::size_t>(r)].re, e[static_cast<std::size_t>(r)].im,
                                   res.d[static_cast<std::size_t>(r - 1)]);
    if (!ok) continue;
    if (precision_used) *precision_used = prec;
    if (allow_degenerate) return res;

    // Distinct delta_i: an approximate collision is confirmed exactly.
    double min_gap = INFINITY, max_mag = 1;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      max_mag = std::max(max_mag, std::abs(delta[i].to_complex()));
      for (std::size_t j = i + 1; j < delta.size(); ++j)
        min_gap = std::min(min_gap, std::abs((delta[i] - delta[j]).to_complex()));
    }
    if (min_gap < 1e-20 * max_mag && discriminant(res.polynomial()) == 0)
      throw Error(ErrorCode::DegenerateDelta, "resolvent roots coincide for " + f.to_string());
    return res;
  }
  throw Error(ErrorCode::PrecisionExhausted, "resolvent not certified within " + std::to_string(kMaxPrecisionBits) +
                                                 " bits for " + f.to_string());
}

struct QuinticInvariants {
  Integer J4, J8, J12;

  InvariantVector vector() const { return {5, {J4, J8, J12}, {4, 8, 12}}; }
  friend bool operator==(const QuinticInvariants&, const QuinticInvariants&) = default;
};

/// Inverts d1..d3 for (J4, J8, J12) and checks the d4..d6 relations exactly.
inline QuinticInvariants quintic_invariants_from_resolvent(const SexticResolvent& res) {
  const auto& d = res.d;
  auto exact_div10 = [](const Integer& v, const char* what) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), 10))
      throw Error(ErrorCode::BerwickInconsistent, std::string(what) + " is not divisible by 10");
    return Integer(v / 10);
  };
  QuinticInvariants q;
  q.J4 = -exact_div10(d[0], "d1");
  q.J8 = exact_div10(d[1] - 35 * q.J4 * q.J4, "d2 - 35 J4^2");
  q.J12 = -exact_div10(d[2] + 60 * q.J4 * q.J4 * q.J4 + 30 * q.J4 * q.J8, "d3 + 60 J4^3 + 30 J4 J8");

  const Integer &a = q.J4, &b = q.J8, &c = q.J12;
  Integer a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  Integer d4 = 55 * a4 + 30 * a2 * b + 25 * b * b + 50 * a * c;
  Integer d5 = -26 * a4 * a - 10 * a3 * b - 44 * a * b * b - 59 * a2 * c - 14 * b * c;
  Integer d6 = 5 * a4 * a2 + 20 * a2 * b * b + 20 * a3 * c + 20 * a * b * c + 25 * c * c;
  if (d4 != d[3] || d5 != d[4] || d6 != d[5])
    throw Error(ErrorCode::BerwickInconsistent, "d4, d5, d6 disagree with (J4, J8, J12)");
  return q;
}

inline QuinticInvariants quintic_invariants(const IntPolynomial& f,
                                            mpfr_prec_t precision_bits = kDefaultPrecisionBits) {
  return quintic_invariants_from_resolvent(quintic_resolvent(f, precision_bits, true));
}

}  // namespace galois
