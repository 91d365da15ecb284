#include <gtest/gtest.h>

#include <random>

#include "galois/groups.hpp"
#include "galois/modp.hpp"
#include "galois/resultant.hpp"
#include "oracles.hpp"

using namespace galois;

TEST(DegreePattern, Examples) {
  EXPECT_EQ(degree_pattern_mod_p(IntPolynomial{1, 0, 1}, 5), (CycleType{1, 1}));
  EXPECT_EQ(degree_pattern_mod_p(IntPolynomial{1, 0, 1}, 3), (CycleType{2}));
  try {
    degree_pattern_mod_p(IntPolynomial{1, 0, 1}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadPrime);
  }
  EXPECT_EQ(degree_pattern_mod_p(IntPolynomial{-1, -1, 0, 0, 0, 1}, 2), (CycleType{3, 2}));
  EXPECT_EQ(degree_pattern_mod_p(IntPolynomial{1, 1, 1, 1, 1}, 2), (CycleType{4}));
  EXPECT_EQ(degree_pattern_mod_p(IntPolynomial{1, 3, -4, 1}, 2), (CycleType{3}));
}

TEST(DegreePattern, MatchesTrialFactorization) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    auto f = oracle::random_poly(rng, 2 + i % 4, 40);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      if (is_bad_prime(f, p)) continue;
      auto pattern = degree_pattern_mod_p(f, p);
      EXPECT_EQ(pattern.total(), f.degree());
      EXPECT_EQ(pattern.parts(), oracle::factor_degrees(f, p)) << f << " mod " << p;
      ++checked;
    }
  }
  EXPECT_GT(checked, 2000);
}

TEST(DedekindSample, SkippedPrimesAreBad) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    auto f = oracle::random_poly(rng, 3 + i % 3, 30);
    if (f[0] == 0 || discriminant(f) == 0) continue;
    auto s = dedekind_sample(f, 10);
    EXPECT_EQ(s.primes_used.size(), 10u);
    const Integer d = discriminant(f);
    for (auto p : s.primes_skipped) {
      const bool divides = mpz_divisible_ui_p(d.get_mpz_t(), p) || mpz_divisible_ui_p(f.leading().get_mpz_t(), p);
      EXPECT_TRUE(divides) << f << " skipped " << p;
    }
  }
}

TEST(DedekindSample, KnownTypes) {
  EXPECT_TRUE(dedekind_signature(IntPolynomial{-1, -1, 0, 0, 0, 1}, 25).contains(CycleType{3, 2}));
  EXPECT_TRUE(dedekind_signature(IntPolynomial{1, 1, 1, 1, 1}, 25).contains(CycleType{4}));
  EXPECT_TRUE(dedekind_signature(IntPolynomial{1, 3, -4, 1}, 25).contains(CycleType{3}));
}

TEST(Candidates, Examples) {
  auto names = [](const std::vector<GroupId>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.name);
    return out;
  };
  Signature a{5, {CycleType{5}, CycleType{4, 1}}};
  EXPECT_EQ(names(candidates_from_signature(5, a)), (std::vector<std::string>{"F5", "S5"}));
  Signature b{5, {CycleType{3, 2}}};
  EXPECT_EQ(names(candidates_from_signature(5, b)), (std::vector<std::string>{"S5"}));
  Signature c{5, {CycleType{5}}};
  EXPECT_EQ(candidates_from_signature(5, c).size(), 5u);
  Signature bad{5, {CycleType{4}}};
  EXPECT_THROW(candidates_from_signature(5, bad), Error);
}

TEST(Candidates, Antitone) {
  const auto& cat = group_catalog(5);
  std::vector<CycleType> all;
  for (const auto& g : cat)
    for (const auto& t : g.signature.types) all.push_back(t);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Signature s{5, {}};
    s.types.insert(CycleType{5});
    Signature bigger = s;
    bigger.types.insert(all[rng() % all.size()]);
    auto small = candidates_from_signature(5, s);
    auto large = candidates_from_signature(5, bigger);
    EXPECT_LE(large.size(), small.size());
    for (const auto& g : large) EXPECT_NE(std::find(small.begin(), small.end(), g), small.end());
  }
}

TEST(ListingSignature, SeedsWithDegree) {
  auto sig = listing_signature(IntPolynomial{1, -2, -2, -2, 1});
  ASSERT_FALSE(sig.empty());
  EXPECT_EQ(sig.front(), 4);
}
