#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galois/error.hpp"
#include "galois/integer.hpp"
#include "galois/modp.hpp"
#include "galois/polynomial.hpp"
#include "galois/realroots.hpp"
#include "galois/resultant.hpp"

namespace galois {

/// Rational roots of f, ascending.
inline std::vector<Rational> rational_roots(const IntPolynomial& f) {
  std::vector<Rational> out;
  if (f.degree() < 1) return out;
  IntPolynomial g = f;
  if (g[0] == 0) {
    out.emplace_back(0);
    int k = 0;
    while (g[k] == 0) ++k;
    g = IntPolynomial(std::vector<Integer>(g.coeffs().begin() + k, g.coeffs().end()));
  }
  if (g.degree() >= 1) {
    auto num_divs = positive_divisors(g[0]);
    auto den_divs = positive_divisors(g.leading());
    if (num_divs && den_divs) {
      for (const auto& q : *den_divs) {
        for (const auto& p : *num_divs) {
          if (gcd(p, q) != 1) continue;
          for (int s : {1, -1}) {
            Rational x(Integer(s * p), q);
            x.canonicalize();
            if (g.sign_at(x) == 0) out.push_back(x);
          }
        }
      }
    } else {
      // Roots of f are r / a_n for integer roots r of the monic transform.
      IntPolynomial m = monicize(g);
      for (const auto& r : integer_roots(m)) {
        Rational x(r, g.leading());
        x.canonicalize();
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

/// Bit k set when every sampled reduction admits a factor of degree k.
inline std::uint32_t factor_degrees_allowed_mod_p(const IntPolynomial& f, int max_primes) {
  const int n = f.degree();
  std::uint32_t allowed = 0;
  for (int k = 1; 2 * k <= n; ++k) allowed |= 1u << k;
  int used = 0;
  for (std::uint32_t p : small_primes()) {
    if (used >= max_primes || allowed == 0) break;
    if (p > 1000) break;
    if (is_bad_prime(f, p)) continue;
    ++used;
    // Subset sums of the factor degrees.
    std::uint64_t sums = 1;
    const CycleType pattern = degree_pattern_mod_p(f, p);
    for (int part : pattern.parts()) sums |= sums << part;
    allowed &= static_cast<std::uint32_t>(sums);
  }
  return allowed;
}

inline void enumerate_factor_candidates(const IntPolynomial& f, int k, const std::vector<Integer>& lead_divs,
                                        const std::vector<Integer>& const_divs, bool& found) {
  // Mignotte: |b_j| <= C(k-1, j) ||f||_2 + C(k-1, j-1) |a_n|.
  Integer norm_sq = 0;
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  Integer norm = isqrt(norm_sq) + 1;
  std::vector<Integer> bound(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j < k; ++j)
    bound[static_cast<std::size_t>(j)] =
        binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j)) * norm +
        binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j - 1)) * abs_value(f.leading());

  // Values used to reject candidates before trial division.
  const std::vector<long long> points{1, -1, 2, -2, 3};
  std::vector<Integer> fvals;
  for (long long v : points) fvals.push_back(f.eval(make_integer(v)));

  std::vector<Integer> b(static_cast<std::size_t>(k) + 1);
  auto check = [&]() {
    for (std::size_t i = 0; i < points.size(); ++i) {
      Integer gv = 0;
      Integer x = make_integer(points[i]);
      for (int j = k; j >= 0; --j) gv = gv * x + b[static_cast<std::size_t>(j)];
      if (gv == 0) {
        if (fvals[i] != 0) return;
      } else if (!mpz_divisible_p(fvals[i].get_mpz_t(), gv.get_mpz_t())) {
        return;
      }
    }
    if (divide_exact(f, IntPolynomial(b))) found = true;
  };

  // Odometer over the middle coefficients.
  for (const auto& lead : lead_divs) {
    for (const auto& c0 : const_divs) {
      for (int s : {1, -1}) {
        b[static_cast<std::size_t>(k)] = lead;
        b[0] = c0 * s;
        for (int j = 1; j < k; ++j) b[static_cast<std::size_t>(j)] = -bound[static_cast<std::size_t>(j)];
        while (true) {
          check();
          if (found) return;
          int j = 1;
          while (j < k) {
            auto& slot = b[static_cast<std::size_t>(j)];
            if (slot < bound[static_cast<std::size_t>(j)]) {
              ++slot;
              break;
            }
            slot = -bound[static_cast<std::size_t>(j)];
            ++j;
          }
          if (j >= k) break;
        }
      }
    }
  }
}

}  // namespace detail

/// Irreducibility over Q.
inline bool is_irreducible(const IntPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "irreducibility needs degree >= 1");
  const int n = f.degree();
  if (n == 1) return true;
  IntPolynomial g = f.primitive_part();
  if (g[0] == 0) return false;
  if (discriminant(g) == 0) return false;

  std::uint32_t allowed = detail::factor_degrees_allowed_mod_p(g, 10);
  if (allowed == 0) return true;

  if ((allowed & 2u) && !rational_roots(g).empty()) return false;
  if (n <= 3) return true;

  auto lead_divs = positive_divisors(g.leading());
  auto const_divs = positive_divisors(g[0]);
  if (!lead_divs || !const_divs)
    throw Error(ErrorCode::OutOfRange, "coefficients too large for the exhaustive factor search");
  for (int k = 2; 2 * k <= n; ++k) {
    if (!(allowed & (1u << k))) continue;
    bool found = false;
    detail::enumerate_factor_candidates(g, k, *lead_divs, *const_divs, found);
    if (found) return false;
  }
  return true;
}

}  // namespace galois
