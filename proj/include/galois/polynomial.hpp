#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galois/error.hpp"
#include "galois/integer.hpp"

namespace galois {

/// Dense integer polynomial, coefficient i multiplies x^i. The zero
/// polynomial has no coefficients and degree -1; every other value has a
/// nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.push_back(make_integer(c));
    trim();
  }

  static IntPolynomial monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
    v.back() = c;
    return IntPolynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Integer& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Sign of the value at a rational point without forming fractions:
  /// evaluates den^n f(num/den) (den > 0 keeps the sign).
  int sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0, den_pow = 1;
    // Horner on the homogenized form sum a_i num^i den^(n-i).
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * num + *it * den_pow;
      den_pow *= den;
    }
    return sgn(acc);
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      g = gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> v(coeffs_);
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
  }

  IntPolynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-() const {
    std::vector<Integer> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial scaled(const Integer& s) const {
    std::vector<Integer> v(coeffs_);
    for (auto& c : v) c *= s;
    return IntPolynomial(std::move(v));
  }

  /// Exact division by a nonzero integer that divides every coefficient.
  IntPolynomial divided_exactly(const Integer& s) const {
    std::vector<Integer> v(coeffs_);
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Integer mag = abs_value(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += mag.get_str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; exact over Z.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  // One multiplication by lc(b) per step, including steps whose leading
  // term is already zero, so the exponent is exactly deg a - deg b + 1.
  for (int k = a.degree(); k >= db; --k) {
    Integer lead = r[static_cast<std::size_t>(k)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= lead * b[j];
  }
  return IntPolynomial(std::move(r));
}

/// Quotient q with a = q*b if b divides a in Z[x].
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Integer(0));
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Integer& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

/// The canonical projective representative (a0, ..., an): primitive, with
/// an > 0. This is the database dictionary key.
class PolyKey {
 public:
  const std::vector<long long>& values() const { return values_; }
  int degree() const { return static_cast<int>(values_.size()) - 1; }
  long long operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

  long long height() const {
    long long h = 0;
    for (long long v : values_) h = std::max(h, v < 0 ? -v : v);
    return h;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const PolyKey&, const PolyKey&) = default;

  /// Wraps a tuple already known to be canonical (enumeration hot path).
  static PolyKey trusted(std::vector<long long> values) {
    PolyKey k;
    k.values_ = std::move(values);
    return k;
  }

 private:
  std::vector<long long> values_;
};

/// Projective canonicalization of a raw coefficient tuple (a0 first).
inline PolyKey canonicalize(std::span<const long long> raw) {
  if (raw.size() < 2) throw Error(ErrorCode::InvalidArgument, "key needs at least two entries");
  bool all_zero = std::all_of(raw.begin(), raw.end(), [](long long v) { return v == 0; });
  if (all_zero) throw Error(ErrorCode::ZeroTuple, "all coefficients are zero");
  if (raw.front() == 0 || raw.back() == 0)
    throw Error(ErrorCode::ZeroEndpoint, "a0 and an must both be nonzero");
  long long g = 0;
  for (long long v : raw) g = std::gcd(g, v < 0 ? -v : v);
  if (raw.back() < 0) g = -g;
  std::vector<long long> out(raw.begin(), raw.end());
  for (auto& v : out) v /= g;
  return PolyKey::trusted(std::move(out));
}

inline PolyKey canonicalize(std::initializer_list<long long> raw) {
  return canonicalize(std::span<const long long>(raw.begin(), raw.size()));
}

inline IntPolynomial poly_from_key(const PolyKey& key) {
  std::vector<Integer> c;
  c.reserve(key.values().size());
  for (long long v : key.values()) c.push_back(make_integer(v));
  return IntPolynomial(std::move(c));
}

/// Primitive integer polynomial (positive leading coefficient) proportional
/// to f(a*x + b).
inline IntPolynomial affine_substitute(const IntPolynomial& f, const Rational& a, const Rational& b) {
  if (a == 0) throw Error(ErrorCode::ZeroScale, "affine substitution needs a != 0");
  if (f.is_zero()) return {};
  // With a = p/q and b = r/s, L = (p s x + r q) / (q s). Clearing (q s)^n
  // turns f(L) into sum c_i (p s x + r q)^i (q s)^(n-i).
  const Integer& p = a.get_num();
  const Integer& q = a.get_den();
  const Integer& r = b.get_num();
  const Integer& s = b.get_den();
  IntPolynomial lin(std::vector<Integer>{Integer(r * q), Integer(p * s)});
  Integer qs = q * s;
  const int n = f.degree();
  IntPolynomial acc;
  IntPolynomial lin_pow{1};
  for (int i = 0; i <= n; ++i) {
    if (f[i] != 0) acc = acc + lin_pow.scaled(f[i] * pow(qs, static_cast<unsigned long>(n - i)));
    lin_pow = lin_pow * lin;
  }
  return acc.primitive_part();
}

/// Monic integer polynomial a_n^(n-1) f(x / a_n) with the same splitting field.
inline IntPolynomial monicize(const IntPolynomial& f) {
  const int n = f.degree();
  const Integer& lc = f.leading();
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  Integer scale = 1;
  for (int i = n; i >= 0; --i) {
    // coefficient of x^i becomes a_i * lc^(n-1-i); for i = n it is 1.
    if (i == n) {
      v[static_cast<std::size_t>(i)] = 1;
    } else {
      v[static_cast<std::size_t>(i)] = f[i] * scale;
      scale *= lc;
    }
  }
  return IntPolynomial(std::move(v));
}

}  // namespace galois
