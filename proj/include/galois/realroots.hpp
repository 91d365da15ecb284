#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "galois/error.hpp"
#include "galois/integer.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// Sturm sequence f, f', -rem(f, f'), ... built with fraction-free pseudo
/// remainders. Every entry is a positive multiple of the corresponding
/// rational-coefficient Sturm polynomial, so sign patterns are identical.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& f) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "Sturm chain needs degree >= 1");
    chain_.push_back(f);
    chain_.push_back(f.derivative());
    while (true) {
      const IntPolynomial& a = chain_[chain_.size() - 2];
      const IntPolynomial& b = chain_.back();
      IntPolynomial r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      // prem = lc(b)^k * rem; undo a negative scalar so the sign matches rem.
      const int k = a.degree() - b.degree() + 1;
      bool negative_scale = b.leading() < 0 && (k % 2 == 1);
      if (!negative_scale) r = -r;
      Integer c = r.content();
      chain_.push_back(r.divided_exactly(c));
    }
  }

  const std::vector<IntPolynomial>& entries() const { return chain_; }
  std::size_t size() const { return chain_.size(); }

  /// The last entry is a constant exactly when f is squarefree.
  bool squarefree() const { return chain_.back().degree() == 0; }

  /// Sign variations at +infinity or -infinity, read off leading terms.
  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
      int s = sgn(p.leading());
      if (!positive && p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count_variations(signs);
  }

  /// Sign variations at a rational point, zeros dropped.
  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_variations(signs);
  }

  /// Distinct real roots in (a, b] for a < b (endpoints may be roots).
  int roots_in(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

 private:
  static int count_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  std::vector<IntPolynomial> chain_;
};

struct RealRootCount {
  int real_count = 0;
  int nonreal_count = 0;
};

/// Exact count of distinct real roots over R and the number r of non-real
/// roots.
inline RealRootCount count_real_roots(const IntPolynomial& f) {
  SturmChain chain(f);
  if (!chain.squarefree()) throw Error(ErrorCode::NotSquarefree, "polynomial has a repeated root");
  int real = chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
  return {real, f.degree() - real};
}

/// Reproduces the reference listing: endpoints +-10^10 stand in for
/// infinity, zeros are kept as a sign value, and equal neighbours collapse
/// before counting.
inline int listing_real_root_count(const IntPolynomial& f) {
  SturmChain chain(f);
  auto changes = [&](const Integer& x) {
    std::vector<int> evals;
    for (const auto& p : chain.entries()) evals.push_back(sgn(p.eval(x)));
    std::vector<int> collapsed;
    for (std::size_t i = 0; i < evals.size(); ++i)
      if (i == 0 || evals[i] != evals[i - 1]) collapsed.push_back(evals[i]);
    return static_cast<int>(collapsed.size()) - 1;
  };
  Integer big = pow(Integer(10), 10);
  return changes(Integer(-big)) - changes(big);
}

/// N(r) = floor(s (s ln s + 2 ln s + 3)) for r = 2s.
inline long nonreal_degree_bound(int r) {
  if (r < 2 || r % 2 != 0) throw Error(ErrorCode::InvalidArgument, "N(r) needs even r >= 2");
  const double s = r / 2;
  const double ls = std::log(s);
  return static_cast<long>(std::floor(s * (s * ls + 2.0 * ls + 3.0)));
}

enum class ForcingReason { Corollary, DegreeBound };

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// For an irreducible polynomial of prime degree p with r non-real roots,
/// reports when the group is forced to be A_p or S_p.
inline std::optional<ForcingReason> forced_alternating_or_symmetric(int p, int r) {
  if (p < 5 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "degree must be a prime >= 5");
  if (r < 0 || r > p || r % 2 != 0) throw Error(ErrorCode::InvalidArgument, "r must be even in [0, p]");
  if (r == 0) return std::nullopt;
  if ((r == 4 && p > 7) || (r == 6 && p > 13) || (r == 8 && p > 23) || (r == 10 && p > 37))
    return ForcingReason::Corollary;
  if (p >= nonreal_degree_bound(r)) return ForcingReason::DegreeBound;
  return std::nullopt;
}

/// Integer roots of f, ascending, found by Sturm bisection on integer
/// intervals inside the Cauchy bound. Exact for any coefficient size.
inline std::vector<Integer> integer_roots(const IntPolynomial& f) {
  std::vector<Integer> roots;
  if (f.degree() < 1) return roots;
  IntPolynomial g = f;
  if (g[0] == 0) {
    roots.push_back(0);
    int k = 0;
    while (g[k] == 0) ++k;
    std::vector<Integer> c(g.coeffs().begin() + k, g.coeffs().end());
    g = IntPolynomial(std::move(c));
    if (g.degree() < 1) return roots;
  }
  // Squarefree part keeps the Sturm count exact.
  SturmChain chain(g);
  IntPolynomial sqf = g;
  if (!chain.squarefree()) {
    // Chain entries are primitive, so Gauss's lemma makes this exact over Z.
    sqf = divide_exact(g, chain.entries().back()).value().primitive_part();
    chain = SturmChain(sqf);
  }
  // Cauchy bound 1 + max |a_i / a_n|, rounded up.
  Integer bound = 0;
  for (int i = 0; i < sqf.degree(); ++i) {
    Integer q = abs_value(sqf[i]);
    mpz_cdiv_q(q.get_mpz_t(), q.get_mpz_t(), abs_value(sqf.leading()).get_mpz_t());
    if (q > bound) bound = q;
  }
  bound += 1;
  struct Interval {
    Integer lo, hi;
  };
  std::vector<Interval> stack{{Integer(-bound - 1), bound}};
  std::vector<Integer> found;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (chain.roots_in(Rational(iv.lo), Rational(iv.hi)) == 0) continue;
    if (iv.hi - iv.lo == 1) {
      if (sqf.eval(iv.hi) == 0) found.push_back(iv.hi);
      continue;
    }
    Integer mid = iv.lo + (iv.hi - iv.lo) / 2;
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  for (auto& r : found) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace galois
