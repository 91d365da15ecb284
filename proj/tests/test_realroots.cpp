#include <gtest/gtest.h>

#include <random>

#include "galois/bigfloat.hpp"
#include "galois/realroots.hpp"
#include "galois/resultant.hpp"
#include "oracles.hpp"

using namespace galois;

TEST(RealRoots, Examples) {
  auto c = count_real_roots(IntPolynomial{1, 0, 1});
  EXPECT_EQ(c.real_count, 0);
  EXPECT_EQ(c.nonreal_count, 2);
  c = count_real_roots(IntPolynomial{1, 0, -3, 1});
  EXPECT_EQ(c.real_count, 3);
  c = count_real_roots(IntPolynomial{-1, -1, 0, 0, 0, 1});
  EXPECT_EQ(c.real_count, 1);
  EXPECT_EQ(c.nonreal_count, 4);
  EXPECT_THROW(count_real_roots(IntPolynomial{1, -2, 1}), Error);
}

TEST(RealRoots, SturmMatchesNumericRoots) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    auto f = oracle::random_poly(rng, 1 + i % 6, 20);
    if (f.degree() >= 2 && discriminant(f) == 0) continue;
    auto c = count_real_roots(f);
    EXPECT_EQ(c.real_count + c.nonreal_count, f.degree());
    EXPECT_EQ(c.nonreal_count % 2, 0);
    int numeric = 0;
    for (const auto& z : complex_roots(f, 200))
      if (std::fabs(z.im.to_double()) <= 1e-40 * std::max(1.0, std::abs(z.to_complex()))) ++numeric;
    EXPECT_EQ(c.real_count, numeric) << f;
  }
}

TEST(RealRoots, CubicDiscriminantSign) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    auto f = oracle::random_poly(rng, 3, 50);
    const Integer d = discriminant(f);
    if (d == 0) continue;
    EXPECT_EQ(count_real_roots(f).real_count, d > 0 ? 3 : 1);
  }
}

TEST(Forcing, CorollaryTable) {
  EXPECT_TRUE(forced_alternating_or_symmetric(11, 4).has_value());
  EXPECT_FALSE(forced_alternating_or_symmetric(7, 4).has_value());
  EXPECT_FALSE(forced_alternating_or_symmetric(13, 6).has_value());
  EXPECT_TRUE(forced_alternating_or_symmetric(17, 6).has_value());
  EXPECT_TRUE(forced_alternating_or_symmetric(5, 2).has_value());
  EXPECT_FALSE(forced_alternating_or_symmetric(5, 0).has_value());
  EXPECT_FALSE(forced_alternating_or_symmetric(5, 4).has_value());
  EXPECT_THROW(forced_alternating_or_symmetric(6, 2), Error);
}

TEST(Forcing, BoundMonotone) {
  for (int r = 2; r <= 20; r += 2) EXPECT_GT(nonreal_degree_bound(r + 2), nonreal_degree_bound(r));
}

TEST(Listing, AgreesOnSmallInputs) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto f = oracle::random_poly(rng, 2 + i % 4, 20);
    if (discriminant(f) == 0) continue;
    EXPECT_EQ(listing_real_root_count(f), count_real_roots(f).real_count) << f;
  }
}
