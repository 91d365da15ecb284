#include <gtest/gtest.h>

#include <random>

#include "galois/invariants.hpp"
#include "galois/irreducible.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

Rational q(long long n, long long d = 1) {
  Rational r(make_integer(n), make_integer(d));
  r.canonicalize();
  return r;
}

IntPolynomial random_quintic(std::mt19937_64& rng, long long bound) {
  while (true) {
    auto f = oracle::random_poly(rng, 5, bound);
    if (f[0] != 0 && discriminant(f) != 0) return f;
  }
}

}  // namespace

TEST(Quartic, SliceRows) {
  auto a = quartic_invariants(IntPolynomial{1, -2, -2, -2, 1});
  EXPECT_EQ(a.J2, 4);
  EXPECT_EQ(a.J3, -416);
  EXPECT_EQ(a.delta, -6400);
  EXPECT_EQ(to_string(a.j), "-1/2700");
  auto b = quartic_invariants(IntPolynomial{-1, 2, -1, -2, 1});
  EXPECT_EQ(b.J2, 1);
  EXPECT_EQ(b.J3, 110);
  EXPECT_EQ(b.delta, -448);
  EXPECT_EQ(to_string(b.j), "-1/12096");
  auto c = quartic_invariants(IntPolynomial{1, 0, 0, 0, 1});
  EXPECT_EQ(c.J2, 12);
  EXPECT_EQ(c.J3, 0);
  EXPECT_EQ(c.delta, 256);
  EXPECT_EQ(to_string(c.j), "1/4");
}

TEST(Quartic, DeltaIsDiscriminantAndTranslationInvariant) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> shift(-5, 5);
  int n = 0;
  while (n < 500) {
    auto f = oracle::random_poly(rng, 4, 15).primitive_part();
    if (discriminant(f) == 0) continue;
    ++n;
    auto a = quartic_invariants(f);
    EXPECT_EQ(a.delta, discriminant(f));
    EXPECT_EQ(4 * a.J2 * a.J2 * a.J2 - a.J3 * a.J3, 27 * a.delta);
    auto g = affine_substitute(f, q(1), q(shift(rng)));
    auto b = quartic_invariants(g);
    EXPECT_EQ(a.J2, b.J2);
    EXPECT_EQ(a.J3, b.J3);
  }
  try {
    quartic_invariants(IntPolynomial{1, -2, 2, -2, 1});  // (x-1)^2 (x^2+1)
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDiscriminant);
  }
}

TEST(Quintic, Table4Triples) {
  auto a = quintic_invariants(IntPolynomial{-1, 1, 4, -3, -3, 1});
  EXPECT_EQ(a, (QuinticInvariants{4235, 4026275, Integer("-16076916075")}));
  auto b = quintic_invariants(IntPolynomial{-1, 4, 9, -5, -9, 1});
  EXPECT_EQ(b, (QuinticInvariants{113377, 2971552001, Integer("-47471703427379")}));
  auto c = quintic_invariants(IntPolynomial{-1, 0, 10, 5, -10, 1});
  EXPECT_EQ(c, (QuinticInvariants{109375, 2392578125, Integer("-96893310546875")}));
  EXPECT_EQ(quintic_resolvent(IntPolynomial{-1, 1, 4, -3, -3, 1}).d[0], -42350);
}

TEST(Quintic, SliceTriples) {
  EXPECT_EQ(quintic_invariants(IntPolynomial{1, 0, -1, 2, -2, 1}), (QuinticInvariants{-539, 3599, 116197}));
  EXPECT_EQ(quintic_invariants(IntPolynomial{-2, -1, 0, -2, -2, 1}),
            (QuinticInvariants{-3264, -8152576, Integer("-29726998528")}));
}

TEST(Quintic, ResolventRootExamples) {
  auto has_root = [](const IntPolynomial& f) {
    auto g = quintic_resolvent(f, kDefaultPrecisionBits, true).polynomial();
    return !rational_roots(g).empty();
  };
  EXPECT_FALSE(has_root(IntPolynomial{-1, -1, 0, 0, 0, 1}));
  EXPECT_TRUE(has_root(IntPolynomial{-2, 0, 0, 0, 0, 1}));
}

TEST(Quintic, PureQuinticIsDegenerate) {
  try {
    quintic_resolvent(IntPolynomial{-2, 0, 0, 0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateDelta);
  }
}

TEST(Quintic, TranslationInvariance) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long long> shift(-3, 3);
  for (int i = 0; i < 500; ++i) {
    auto f = random_quintic(rng, 8).primitive_part();
    auto g = affine_substitute(f, q(1), q(shift(rng)));
    EXPECT_EQ(quintic_resolvent(f, kDefaultPrecisionBits, true).d, quintic_resolvent(g, kDefaultPrecisionBits, true).d)
        << f;
  }
}

TEST(Quintic, Homogeneity) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    auto f = random_quintic(rng, 10);
    auto base = quintic_resolvent(f, kDefaultPrecisionBits, true).d;
    for (long long lambda : {2LL, 3LL}) {
      auto scaled = quintic_resolvent(f.scaled(make_integer(lambda)), kDefaultPrecisionBits, true).d;
      for (int r = 1; r <= 6; ++r)
        EXPECT_EQ(scaled[static_cast<std::size_t>(r - 1)],
                  base[static_cast<std::size_t>(r - 1)] * pow(make_integer(lambda), static_cast<unsigned long>(4 * r)));
    }
  }
}

TEST(Quintic, BerwickIdentitiesOnRandomIrreducibles) {
  std::mt19937_64 rng(34);
  int done = 0;
  while (done < 1000) {
    auto f = random_quintic(rng, 20);
    if (!is_irreducible(f)) continue;
    mpfr_prec_t used = 0;
    auto res = quintic_resolvent(f, kDefaultPrecisionBits, true, &used);
    EXPECT_LT(used, 512);
    EXPECT_NO_THROW(quintic_invariants_from_resolvent(res)) << f;
    ++done;
  }
}

TEST(Quintic, BerwickRejectsCorruptedResolvent) {
  auto res = quintic_resolvent(IntPolynomial{-1, 1, 4, -3, -3, 1});
  res.d[4] += 10;
  try {
    quintic_invariants_from_resolvent(res);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BerwickInconsistent);
  }
}

TEST(WeightedHeight, PrintedValues) {
  EXPECT_NEAR(weighted_height(cubic_invariants(IntPolynomial{-1, -9, -20, 1})), 3.1463462836, 1e-4);
  EXPECT_EQ(cubic_invariants(IntPolynomial{-1, -9, -20, 1}).values[0], 98);
  EXPECT_NEAR(weighted_height(QuinticInvariants{4235, 4026275, Integer("-16076916075")}.vector()), 8.06, 0.01);
  EXPECT_NEAR(weighted_height(quartic_invariants(IntPolynomial{1, -2, -2, -2, 1}).vector()), 4.5162, 1e-4);
}
