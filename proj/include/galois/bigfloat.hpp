#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "galois/error.hpp"
#include "galois/integer.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// Owning MPFR value. Results of binary operations take the left operand's
/// precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 212) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Integer& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  Integer nearest_integer() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend Real abs(Real a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real sqrt(Real a) {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 212) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(std::complex<double> z, mpfr_prec_t prec) : re(z.real(), prec), im(z.imag(), prec) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  Real norm() const { return re * re + im * im; }
  Real magnitude() const { return sqrt(norm()); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

namespace detail {

inline std::vector<std::complex<double>> aberth_double(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  // Start on a circle of radius max |a_i / a_n|^(1/(n-i)), with an irrational twist.
  double radius = 0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, std::pow(std::fabs(c[static_cast<std::size_t>(i)] / c.back()), 1.0 / (n - i)));
  radius = std::max(radius, 1e-3);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * std::numbers::pi * k / n + 0.4);
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      std::complex<double> p = c.back(), dp = 0;
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * zk + p;
        p = p * zk + c[static_cast<std::size_t>(i)];
      }
      if (p == 0.0) continue;
      std::complex<double> w = p / dp, s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      std::complex<double> step = w / (1.0 - w * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      zk -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(zk)));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

}  // namespace detail

/// All complex roots of a squarefree f at the given precision: Aberth in
/// double precision, then Aberth iterations in MPFR until corrections fall
/// below the working precision.
inline std::vector<Complex> complex_roots(const IntPolynomial& f, mpfr_prec_t prec) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");
  std::vector<double> cd;
  for (const auto& a : f.coeffs()) {
    double v = a.get_d();
    if (!std::isfinite(v)) throw Error(ErrorCode::OutOfRange, "coefficients exceed double range");
    cd.push_back(v);
  }
  auto start = detail::aberth_double(cd);
  std::vector<Complex> z;
  for (const auto& s : start) z.emplace_back(s, prec);
  std::vector<Real> c;
  for (const auto& a : f.coeffs()) c.emplace_back(a, prec);

  Real eps(1.0, prec);
  mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(prec) + 8, MPFR_RNDN);
  const Real one(1.0, prec);
  for (int iter = 0; iter < 200; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      Complex& zk = z[static_cast<std::size_t>(k)];
      Complex p(c.back(), Real(prec)), dp(prec);
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * zk + p;
        p = p * zk + Complex(c[static_cast<std::size_t>(i)], Real(prec));
      }
      if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get())) continue;
      Complex w = p / dp;
      Complex s(prec);
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(one, Real(prec)) / (zk - z[static_cast<std::size_t>(j)]);
      Complex step = w / (Complex(one, Real(prec)) - w * s);
      zk -= step;
      Real scale = zk.magnitude();
      if (scale < one) scale = one;
      if (step.magnitude() > eps * scale) converged = false;
    }
    if (converged) break;
  }
  return z;
}

}  // namespace galois
