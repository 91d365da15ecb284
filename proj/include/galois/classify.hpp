#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/groups.hpp"
#include "galois/integer.hpp"
#include "galois/invariants.hpp"
#include "galois/irreducible.hpp"
#include "galois/modp.hpp"
#include "galois/polynomial.hpp"
#include "galois/realroots.hpp"
#include "galois/resultant.hpp"

namespace galois {

inline constexpr int kDefaultPrimeBudget = 25;
inline constexpr int kExhaustivePrimeBudget = 400;

struct ClassifyOptions {
  int prime_budget = kDefaultPrimeBudget;
  mpfr_prec_t precision_bits = kDefaultPrecisionBits;
  bool check_irreducible = true;
};

struct Verdict {
  const GroupId* group = nullptr;  // points into the static catalog
  bool deterministic = true;
  int prime_budget = 0;
  std::vector<std::uint32_t> primes_used;      // filled for sampled verdicts
  std::vector<std::string> residual_alternatives;
  std::vector<std::string> evidence;

  std::string certainty() const { return deterministic ? "deterministic" : "sampled"; }
};

/// Facts about one polynomial shared between classification and record
/// building; the expensive ones are computed on first use.
class PolynomialFacts {
 public:
  explicit PolynomialFacts(IntPolynomial f, ClassifyOptions options = {})
      : f_(f.primitive_part()), options_(options) {
    if (f_.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "need degree >= 2");
  }

  const IntPolynomial& polynomial() const { return f_; }
  const ClassifyOptions& options() const { return options_; }
  int degree() const { return f_.degree(); }

  const Integer& discriminant() const {
    if (!delta_) delta_ = galois::discriminant(f_);
    return *delta_;
  }
  bool discriminant_is_square() const { return is_square(discriminant()); }

  const RealRootCount& real_roots() const {
    if (!roots_) roots_ = count_real_roots(f_);
    return *roots_;
  }

  const DedekindSample& sample() const {
    if (!sample_) sample_ = dedekind_sample(f_, options_.prime_budget);
    return *sample_;
  }

  /// Resolvent of f itself; may have repeated roots.
  const SexticResolvent& resolvent() const {
    if (!resolvent_) resolvent_ = quintic_resolvent(f_, options_.precision_bits, true);
    return *resolvent_;
  }

  /// Whether the quintic resolvent has a rational (hence integer) root. A
  /// degenerate resolvent is replaced by that of a Tschirnhaus transform.
  bool resolvent_has_rational_root() const;

  /// The squarefree resolvent used by the rational-root test.
  const SexticResolvent& separable_resolvent() const;

 private:
  IntPolynomial f_;
  ClassifyOptions options_;
  mutable std::optional<Integer> delta_;
  mutable std::optional<RealRootCount> roots_;
  mutable std::optional<DedekindSample> sample_;
  mutable std::optional<SexticResolvent> resolvent_;
  mutable std::optional<SexticResolvent> separable_;
  mutable std::optional<bool> resolvent_root_;
};

/// Characteristic polynomial of x^2 + c x acting on Q[x]/(f), for the
/// monic transform of f. Same splitting field and root permutation action
/// whenever the result is squarefree.
inline IntPolynomial tschirnhaus_transform(const IntPolynomial& f, long c) {
  IntPolynomial g = monicize(f);
  const int n = g.degree();
  auto reduce = [&](std::vector<Integer> v) {
    for (int k = static_cast<int>(v.size()) - 1; k >= n; --k) {
      Integer t = v[static_cast<std::size_t>(k)];
      if (t == 0) continue;
      for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(k - n + j)] -= t * g[j];
    }
    v.resize(static_cast<std::size_t>(n));
    return v;
  };
  // Column j holds x^j (x^2 + c x) mod g.
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    std::vector<Integer> v(static_cast<std::size_t>(j) + 3, Integer(0));
    v[static_cast<std::size_t>(j) + 2] = 1;
    v[static_cast<std::size_t>(j) + 1] = c;
    auto col = reduce(std::move(v));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
  }
  // Faddeev-LeVerrier; the divisions by k are exact for integer matrices.
  using Matrix = std::vector<std::vector<Integer>>;
  auto multiply = [n](const Matrix& a, const Matrix& b) {
    Matrix r(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return r;
  };
  std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  Matrix mk(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k) {
    Matrix am = multiply(m, mk);
    for (int i = 0; i < n; ++i) am[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += coeffs[static_cast<std::size_t>(n - k + 1)];
    mk = am;
    Matrix t = multiply(m, mk);
    Integer trace = 0;
    for (int i = 0; i < n; ++i) trace += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    coeffs[static_cast<std::size_t>(n - k)] = -trace / k;
  }
  return IntPolynomial(std::move(coeffs));
}

inline const SexticResolvent& PolynomialFacts::separable_resolvent() const {
  if (!separable_) {
    try {
      separable_ = quintic_resolvent(f_, options_.precision_bits);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateDelta) throw;
      for (long c = 1; c <= 50 && !separable_; ++c) {
        IntPolynomial h = tschirnhaus_transform(f_, c);
        if (galois::discriminant(h) == 0) continue;
        try {
          separable_ = quintic_resolvent(h, options_.precision_bits);
        } catch (const Error& inner) {
          if (inner.code() != ErrorCode::DegenerateDelta) throw;
        }
      }
      if (!separable_) throw;
    }
  }
  return *separable_;
}

inline bool PolynomialFacts::resolvent_has_rational_root() const {
  if (!resolvent_root_) {
    const auto& res = separable_resolvent();
    IntPolynomial g = res.polynomial();
    bool found = false;
    // Any rational root is -delta_i for some i; candidates come from the
    // certified approximations and are confirmed exactly.
    for (const auto& c : res.delta_nearest)
      if (g.eval(Integer(-c)) == 0) found = true;
    resolvent_root_ = found;
  }
  return *resolvent_root_;
}

namespace detail {

inline void require_irreducible(const PolynomialFacts& facts) {
  if (facts.options().check_irreducible && !is_irreducible(facts.polynomial()))
    throw Error(ErrorCode::Reducible, facts.polynomial().to_string() + " is reducible over Q");
}

/// x^2 + p x + q splits over Q(sqrt(delta)).
inline bool quadratic_splits_over(const Integer& p, const Integer& q, const Integer& delta) {
  Integer disc = p * p - 4 * q;
  return disc == 0 || is_square(disc) || is_square(Integer(disc * delta));
}

}  // namespace detail

inline Verdict classify_cubic(const PolynomialFacts& facts) {
  if (facts.degree() != 3) throw Error(ErrorCode::InvalidArgument, "expected a cubic");
  detail::require_irreducible(facts);
  Verdict v;
  v.group = &group_by_name(3, facts.discriminant_is_square() ? "C3" : "S3");
  v.evidence = {"discriminant"};
  return v;
}

/// Integer roots of the cubic resolvent of the monic transform of f.
inline std::vector<Integer> quartic_resolvent_roots(const IntPolynomial& f, Integer* a_out = nullptr,
                                                    Integer* b_out = nullptr, Integer* d_out = nullptr) {
  const Integer& a4 = f[4];
  Integer a = f[3], b = f[2] * a4, c = f[1] * a4 * a4, d = f[0] * a4 * a4 * a4;
  IntPolynomial r(std::vector<Integer>{-a * a * d + 4 * b * d - c * c, a * c - 4 * d, -b, 1});
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  if (d_out) *d_out = d;
  std::vector<Integer> out;
  for (const auto& x : rational_roots(r)) out.emplace_back(x.get_num());
  return out;
}

inline Verdict classify_quartic(const PolynomialFacts& facts) {
  if (facts.degree() != 4) throw Error(ErrorCode::InvalidArgument, "expected a quartic");
  detail::require_irreducible(facts);
  const IntPolynomial& f = facts.polynomial();
  Integer a, b, d;
  auto roots = quartic_resolvent_roots(f, &a, &b, &d);
  const bool square = facts.discriminant_is_square();
  Verdict v;
  v.evidence = {"cubic-resolvent"};
  if (roots.size() == 3) {
    v.group = &group_by_name(4, "V4");
  } else if (roots.empty()) {
    v.group = &group_by_name(4, square ? "A4" : "S4");
    v.evidence.push_back("discriminant");
  } else {
    const Integer& t = roots.front();
    const Integer& delta = facts.discriminant();
    bool cyclic = detail::quadratic_splits_over(-t, d, delta) && detail::quadratic_splits_over(a, b - t, delta);
    v.group = &group_by_name(4, cyclic ? "C4" : "D4");
    v.evidence.push_back("quadratic-splitting");
  }
  return v;
}

inline Verdict classify_quintic(const PolynomialFacts& facts) {
  if (facts.degree() != 5) throw Error(ErrorCode::InvalidArgument, "expected a quintic");
  detail::require_irreducible(facts);
  const bool square = facts.discriminant_is_square();
  const auto& sample = facts.sample();
  Verdict v;
  v.prime_budget = facts.options().prime_budget;

  std::vector<GroupId> candidates;
  for (const auto& g : candidates_from_signature(5, sample.signature))
    if (g.in_alternating == square) candidates.push_back(g);
  if (candidates.empty()) throw Error(ErrorCode::Inconsistent, "signature and discriminant disagree");
  if (candidates.size() == 1) {
    v.group = &group_by_index(5, candidates.front().k);
    v.evidence = {"signature", "discriminant"};
    return v;
  }

  const int r = facts.real_roots().nonreal_count;
  if (forced_alternating_or_symmetric(5, r)) {
    v.group = &group_by_name(5, square ? "A5" : "S5");
    v.evidence = {"real-roots", "discriminant"};
    return v;
  }

  v.evidence = {"sextic-resolvent", "discriminant"};
  if (!facts.resolvent_has_rational_root()) {
    v.group = &group_by_name(5, square ? "A5" : "S5");
    return v;
  }
  if (!square) {
    v.group = &group_by_name(5, "F5");
    return v;
  }
  v.evidence.push_back("signature");
  if (sample.signature.contains(CycleType{2, 2, 1})) {
    v.group = &group_by_name(5, "D5");
    return v;
  }
  v.group = &group_by_name(5, "C5");
  v.deterministic = false;
  v.primes_used = sample.primes_used;
  v.residual_alternatives = {"D5"};
  return v;
}

inline Verdict classify(const PolynomialFacts& facts) {
  switch (facts.degree()) {
    case 3: return classify_cubic(facts);
    case 4: return classify_quartic(facts);
    case 5: return classify_quintic(facts);
    default: throw Error(ErrorCode::OutOfRange, "classification covers degrees 3 to 5");
  }
}

inline Verdict classify(const IntPolynomial& f, ClassifyOptions options = {}) {
  return classify(PolynomialFacts(f, options));
}

}  // namespace galois
