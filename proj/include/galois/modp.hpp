#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/integer.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// Multiset of factor degrees (equivalently a permutation cycle type),
/// stored in non-increasing order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  CycleType(std::initializer_list<int> parts) : CycleType(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Parity of a permutation with this cycle type.
  bool is_even() const {
    int transpositions = 0;
    for (int p : parts_) transpositions += p - 1;
    return transpositions % 2 == 0;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

/// A set of cycle types for one degree: either observed through reductions
/// mod p or admitted by a permutation group.
struct Signature {
  int degree = 0;
  std::set<CycleType> types;

  bool contains(const CycleType& t) const { return types.count(t) != 0; }
  bool includes(const Signature& other) const {
    return std::includes(types.begin(), types.end(), other.types.begin(), other.types.end());
  }
};

/// Primes below 2^16, ascending.
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1u << 16;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

namespace modp {

using Coeffs = std::vector<std::uint64_t>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

/// Remainder of a modulo b (b nonzero), in place.
inline void rem_in_place(Coeffs& a, const Coeffs& b, std::uint64_t p) {
  const int db = degree(b);
  const std::uint64_t inv_lead = inverse(b.back(), p);
  for (int k = degree(a); k >= db; --k) {
    std::uint64_t c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::uint64_t t = c * inv_lead % p;
    for (int j = 0; j <= db; ++j) {
      auto& slot = a[static_cast<std::size_t>(k - db + j)];
      slot = (slot + p - t * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  trim(a);
}

inline Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  rem_in_place(r, m, p);
  return r;
}

inline Coeffs gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t inv = inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

/// Exact quotient a / b for b dividing a.
inline Coeffs div_exact(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r(a);
  const int db = degree(b);
  Coeffs q(static_cast<std::size_t>(degree(a) - db + 1), 0);
  const std::uint64_t inv_lead = inverse(b.back(), p);
  for (int k = degree(a); k >= db; --k) {
    std::uint64_t c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::uint64_t t = c * inv_lead % p;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(k - db + j)];
      slot = (slot + p - t * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  trim(q);
  return q;
}

inline Coeffs derivative(const Coeffs& a, std::uint64_t p) {
  if (a.size() < 2) return {};
  Coeffs d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  trim(d);
  return d;
}

/// base^e mod m by repeated squaring.
inline Coeffs pow_mod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
  Coeffs r{1};
  rem_in_place(base, m, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, m, p);
    e >>= 1;
    if (e) base = mul_mod(base, base, m, p);
  }
  return r;
}

inline Coeffs reduce(const IntPolynomial& f, std::uint64_t p) {
  Coeffs c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  trim(c);
  return c;
}

}  // namespace modp

/// Whether f mod p is unusable for Dedekind's theorem: p | a_n or p | disc(f).
inline bool is_bad_prime(const IntPolynomial& f, std::uint32_t p) {
  modp::Coeffs fp = modp::reduce(f, p);
  if (modp::degree(fp) != f.degree()) return true;
  modp::Coeffs g = modp::gcd(fp, modp::derivative(fp, p), p);
  return modp::degree(g) > 0;
}

/// Factor degrees of f mod p via distinct-degree factorization.
/// Requires p not dividing a_n and f mod p squarefree.
inline CycleType degree_pattern_mod_p(const IntPolynomial& f, std::uint32_t p) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "degree pattern needs degree >= 1");
  modp::Coeffs fp = modp::reduce(f, p);
  if (modp::degree(fp) != f.degree())
    throw Error(ErrorCode::BadPrime, "p = " + std::to_string(p) + " divides the leading coefficient");
  if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) > 0)
    throw Error(ErrorCode::BadPrime, "p = " + std::to_string(p) + " divides the discriminant");

  // Monic reduction (equivalent to the a_n^(n-1) f(x / a_n) scaling).
  const std::uint64_t inv = modp::inverse(fp.back(), p);
  for (auto& c : fp) c = c * inv % p;

  std::vector<int> parts;
  modp::Coeffs rest = fp;
  modp::Coeffs h{0, 1};  // x
  for (int d = 1; 2 * d <= modp::degree(rest); ++d) {
    h = modp::pow_mod(h, p, rest, p);
    modp::Coeffs hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    modp::trim(hx);
    modp::Coeffs g = modp::gcd(hx, rest, p);
    const int dg = modp::degree(g);
    if (dg > 0) {
      for (int k = 0; k < dg / d; ++k) parts.push_back(d);
      rest = modp::div_exact(rest, g, p);
      modp::rem_in_place(h, rest, p);
    }
  }
  if (modp::degree(rest) > 0) parts.push_back(modp::degree(rest));
  return CycleType(std::move(parts));
}

struct DedekindSample {
  Signature signature;
  std::vector<std::uint32_t> primes_used;
  std::vector<std::uint32_t> primes_skipped;
};

/// Cycle types observed over the first `prime_budget` usable primes; bad
/// primes are skipped and not counted.
inline DedekindSample dedekind_sample(const IntPolynomial& f, int prime_budget) {
  if (prime_budget < 1) throw Error(ErrorCode::InvalidArgument, "prime budget must be positive");
  DedekindSample out;
  out.signature.degree = f.degree();
  for (std::uint32_t p : small_primes()) {
    if (static_cast<int>(out.primes_used.size()) >= prime_budget) break;
    if (is_bad_prime(f, p)) {
      out.primes_skipped.push_back(p);
      continue;
    }
    out.signature.types.insert(degree_pattern_mod_p(f, p));
    out.primes_used.push_back(p);
  }
  if (out.primes_used.empty()) throw Error(ErrorCode::NoUsablePrimes, "no usable prime below 2^16");
  return out;
}

inline Signature dedekind_signature(const IntPolynomial& f, int prime_budget) {
  return dedekind_sample(f, prime_budget).signature;
}

/// Output of the reference signature listing: starts from [n] and appends
/// each factor degree > 1 seen mod 2, 3, 5, 7, without ramification checks.
inline std::vector<int> listing_signature(const IntPolynomial& f) {
  std::vector<int> sig{f.degree()};
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    modp::Coeffs fp = modp::reduce(f, p);
    if (fp.empty()) continue;
    // Full factorization degrees with multiplicity ignored: repeatedly split
    // off the squarefree part and run distinct-degree factorization on it.
    const std::uint64_t inv = modp::inverse(fp.back(), p);
    for (auto& c : fp) c = c * inv % p;
    std::vector<int> degs;
    std::vector<modp::Coeffs> stack{fp};
    while (!stack.empty()) {
      modp::Coeffs cur = stack.back();
      stack.pop_back();
      if (modp::degree(cur) < 1) continue;
      modp::Coeffs d = modp::derivative(cur, p);
      if (d.empty()) {
        // cur = g(x^p) = g(x)^p over F_p: recurse on the p-th root.
        modp::Coeffs root;
        for (std::size_t i = 0; i < cur.size(); i += p) root.push_back(cur[i]);
        stack.push_back(root);
        continue;
      }
      modp::Coeffs g = modp::gcd(cur, d, p);
      if (modp::degree(g) > 0) {
        stack.push_back(g);
        stack.push_back(modp::div_exact(cur, g, p));
        continue;
      }
      IntPolynomial lifted;
      {
        std::vector<Integer> c;
        for (auto v : cur) c.emplace_back(static_cast<unsigned long>(v));
        lifted = IntPolynomial(std::move(c));
      }
      const CycleType pattern = degree_pattern_mod_p(lifted, p);
      for (int part : pattern.parts()) degs.push_back(part);
    }
    for (int deg : degs)
      if (deg > 1 && std::find(sig.begin(), sig.end(), deg) == sig.end()) sig.push_back(deg);
  }
  return sig;
}

}  // namespace galois
