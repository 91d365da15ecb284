#include <gtest/gtest.h>

#include <random>

#include "galois/classify.hpp"
#include "galois/database.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

// Chebotarev census: over 400 good primes every non-identity cycle type of
// the group shows up with overwhelming probability, and for n <= 5 the set of
// non-identity types determines the transitive group.
std::string chebotarev_group(const IntPolynomial& f) {
  const int n = f.degree();
  auto s = dedekind_sample(f, 400).signature;
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  s.types.erase(CycleType(ones));
  std::vector<std::string> hits;
  for (const auto& g : group_catalog(n)) {
    auto t = g.signature.types;
    t.erase(CycleType(ones));
    if (t == s.types) hits.push_back(g.name);
  }
  return hits.size() == 1 ? hits.front() : "?";
}

std::string name(const IntPolynomial& f) { return classify(f).group->name; }

}  // namespace

TEST(Catalog, Shapes) {
  EXPECT_EQ(group_catalog(5).size(), 5u);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(group_catalog(5)[static_cast<std::size_t>(k - 1)].gap_id(), "[5," + std::to_string(k) + "]");
  std::vector<std::string> quartic;
  for (const auto& g : group_catalog(4)) quartic.push_back(g.name);
  EXPECT_EQ(quartic, (std::vector<std::string>{"C4", "V4", "D4", "A4", "S4"}));
  EXPECT_EQ(transitive_group_count(12), 301);
  EXPECT_THROW(group_catalog(12), Error);
  const std::map<std::string, long long> orders{{"C5", 5}, {"D5", 10}, {"F5", 20}, {"A5", 60}, {"S5", 120},
                                                {"C4", 4}, {"V4", 4},  {"D4", 8},  {"A4", 12}, {"S4", 24}};
  for (int n : {4, 5})
    for (const auto& g : group_catalog(n)) {
      EXPECT_EQ(g.order, orders.at(g.name));
      EXPECT_EQ(g.order % n, 0);
    }
  EXPECT_EQ(group_by_name(5, "D5").label, "G_2");
  EXPECT_EQ(group_by_name(5, "F5").label, "G_3");
}

TEST(Catalog, ParityMatchesSignature) {
  for (int n : {3, 4, 5})
    for (const auto& g : group_catalog(n)) {
      bool even = true;
      for (const auto& t : g.signature.types) even = even && t.is_even();
      EXPECT_EQ(even, g.in_alternating) << g.name;
    }
  for (int n : {7, 11, 13, 17, 19})
    for (const auto& g : group_catalog(n)) EXPECT_EQ(galois::detail::factorial(n) % g.order, 0) << g.name;
}

TEST(Classify, CubicExamples) {
  EXPECT_EQ(name(IntPolynomial{1, 3, -4, 1}), "C3");
  EXPECT_EQ(name(IntPolynomial{-2, 0, 0, 1}), "S3");
  EXPECT_EQ(name(IntPolynomial{20, -9, -20, 1}), "C3");
}

TEST(Classify, QuarticExamples) {
  EXPECT_EQ(name(IntPolynomial{1, -2, -2, -2, 1}), "D4");
  EXPECT_EQ(name(IntPolynomial{-1, 2, -1, -2, 1}), "D4");
  EXPECT_EQ(name(IntPolynomial{1, 0, 0, 0, 1}), "V4");
  EXPECT_EQ(name(IntPolynomial{1, 1, 1, 1, 1}), "C4");
  EXPECT_EQ(name(IntPolynomial{12, 8, 0, 0, 1}), "A4");
  EXPECT_EQ(name(IntPolynomial{1, 1, 0, 0, 1}), "S4");
  EXPECT_EQ(quartic_resolvent_roots(IntPolynomial{1, -2, -2, -2, 1}).size(), 1u);
}

TEST(Classify, QuinticExamples) {
  auto c5 = classify(IntPolynomial{-1, 1, 4, -3, -3, 1});
  EXPECT_EQ(c5.group->name, "C5");
  EXPECT_FALSE(c5.deterministic);
  EXPECT_EQ(c5.prime_budget, kDefaultPrimeBudget);
  EXPECT_EQ(name(IntPolynomial{-1, -1, 0, 0, 0, 1}), "S5");
  EXPECT_EQ(name(IntPolynomial{-2, 0, 0, 0, 0, 1}), "F5");
  EXPECT_EQ(name(IntPolynomial{16, 20, 0, 0, 0, 1}), "A5");
  EXPECT_EQ(name(IntPolynomial{1, 0, -1, 2, -2, 1}), "D5");
  EXPECT_EQ(name(IntPolynomial{-2, -1, 0, -2, -2, 1}), "F5");
  EXPECT_EQ(name(IntPolynomial{12, -5, 0, 0, 0, 1}), "D5");
}

TEST(Classify, Reducible) {
  try {
    classify(IntPolynomial{-1, 0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Reducible);
  }
}

TEST(Classify, AgreesWithChebotarevOnSmallMonicCensus) {
  int seen = 0;
  std::map<std::string, int> groups;
  for (int n : {3, 4, 5}) {
    const int h = n == 5 ? 2 : 3;
    for_each_candidate(
        n, h,
        [&](const PolyKey& k) {
          auto f = poly_from_key(k);
          if (discriminant(f) == 0 || !is_irreducible(f)) return;
          const std::string got = name(f);
          EXPECT_EQ(got, chebotarev_group(f)) << k.to_string();
          ++groups[got];
          ++seen;
        },
        {}, true);
  }
  EXPECT_GT(seen, 3000);
  for (const char* g : {"C3", "V4", "C4", "D4", "A4", "D5", "F5", "A5"}) EXPECT_GT(groups[g], 0) << g;
}

TEST(Classify, AffineInvariance) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> s(-3, 3), d(1, 3);
  for (int n : {3, 4, 5}) {
    int done = 0;
    while (done < 200) {
      auto f = oracle::random_poly(rng, n, 10);
      if (f[0] == 0 || discriminant(f) == 0 || !is_irreducible(f)) continue;
      long long a = s(rng);
      if (a == 0) a = -1;
      Rational ra(make_integer(a), make_integer(d(rng))), rb(make_integer(s(rng)), make_integer(d(rng)));
      ra.canonicalize();
      rb.canonicalize();
      EXPECT_EQ(name(f), name(affine_substitute(f, ra, rb))) << f;
      ++done;
    }
  }
}

TEST(Classify, TschirnhausKeepsGroup) {
  auto f = IntPolynomial{-2, 0, 0, 0, 0, 1};
  for (long c = 1; c <= 3; ++c) {
    auto g = tschirnhaus_transform(f, c);
    EXPECT_EQ(g.degree(), 5);
    if (discriminant(g) != 0) {
      EXPECT_EQ(chebotarev_group(g), "F5");
    }
  }
}
