#include <gtest/gtest.h>

#include <random>

#include "plb/scalar.hpp"

using namespace plb;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-3").str(), "-3/1");
  EXPECT_EQ(Rational::parse("0/5").str(), "0/1");
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1/2/3"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("2/-4"), ParseError);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 2), b(1, 3);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 6));
  EXPECT_EQ(a / b, Rational(3, 2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_LT(b, a);
}

TEST(ModP, ArithmeticModuloSeven) {
  const ModP a(3, 7), b(5, 7);
  EXPECT_EQ(a * b, ModP(1, 7));
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ(a + b, ModP(1, 7));
  EXPECT_EQ(-a, ModP(4, 7));
  EXPECT_EQ(ModP(-1, 7).residue(), 6);
}

TEST(ModP, UnboundIntegersAdoptTheModulus) {
  // Eigen builds zeros and ones without a field; they bind on first use.
  EXPECT_EQ(ModP(0) + ModP(3, 11), ModP(3, 11));
  EXPECT_EQ(ModP(1) * ModP(5, 11), ModP(5, 11));
  EXPECT_TRUE(ModP(14, 7).is_zero());
}

TEST(ModP, MixedModuliAreRejected) {
  EXPECT_THROW(ModP(1, 7) + ModP(1, 11), FieldMismatch);
}

TEST(ScalarField, PrimesOnly) {
  EXPECT_THROW(ScalarField::prime(9), PreconditionViolated);
  EXPECT_EQ(ScalarField::prime(13).str(), "F_13");
  EXPECT_EQ(ScalarField::rationals().str(), "Q");
  EXPECT_THROW(ScalarField::prime(5).require_characteristic_above(5, "test"),
               CharacteristicTooSmall);
  EXPECT_NO_THROW(ScalarField::prime(7).require_characteristic_above(5, "test"));
  EXPECT_NO_THROW(ScalarField::rationals().require_characteristic_above(100, "test"));
}

TEST(FromRational, ReducesModP) {
  const auto f7 = ScalarField::prime(7);
  EXPECT_EQ(from_rational<ModP>(f7, Rational(1, 2)), ModP(4, 7));
  EXPECT_EQ(from_rational<ModP>(f7, Rational(-1, 2)), ModP(3, 7));
  EXPECT_THROW(from_rational<ModP>(f7, Rational(1, 7)), CharacteristicTooSmall);
  EXPECT_THROW(from_rational<Rational>(f7, Rational(1)), FieldMismatch);
}

TEST(RandomScalar, DeterministicForASeed) {
  const auto f = ScalarField::rationals();
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_scalar<Rational>(f, r1), random_scalar<Rational>(f, r2));
}

TEST(RandomScalar, FieldLawsHoldOnSamples) {
  for (auto f : {ScalarField::rationals(), ScalarField::prime(11)}) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
      if (f.is_rationals()) {
        auto a = random_scalar<Rational>(f, rng), b = random_scalar<Rational>(f, rng),
             c = random_scalar<Rational>(f, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) EXPECT_EQ(a * (Rational(1) / a), Rational(1));
      } else {
        auto a = random_scalar<ModP>(f, rng), b = random_scalar<ModP>(f, rng),
             c = random_scalar<ModP>(f, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), ModP(1, 11));
      }
    }
  }
}
