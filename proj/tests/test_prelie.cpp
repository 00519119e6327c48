#include <gtest/gtest.h>

#include <random>

#include "plb/brace.hpp"
#include "plb/prelie.hpp"
#include "support.hpp"

using namespace plb;
using plb::test::q;
using plb::test::vec;

namespace {

const ScalarField Q = ScalarField::rationals();

PreLieAlgebra<Rational> f4_unchecked(std::vector<ProductEntry<Rational>> extra = {}) {
  std::vector<ProductEntry<Rational>> e{{0, 0, 1, Rational(1)},
                                        {1, 0, 2, Rational(1)},
                                        {0, 1, 3, Rational(1)}};
  e.insert(e.end(), extra.begin(), extra.end());
  return PreLieAlgebra<Rational>::unchecked(Q, 4, e);
}

}  // namespace

TEST(PreLie, F4SatisfiesTheIdentity) {
  EXPECT_FALSE(check_prelie_identity(f4_unchecked()));
  EXPECT_EQ(f4_unchecked().validated().nilpotency_class(), 4);
}

TEST(PreLie, TamperedF4ReportsTripleAndResidual) {
  // With e1.e3 = e4 added: (e1 e2) e1 - e1 (e2 e1) = -e4 while
  // (e2 e1) e1 - e2 (e1 e1) = 0.
  const auto bad = f4_unchecked({{0, 2, 3, Rational(1)}});
  const auto v = check_prelie_identity(bad);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->i, 0);
  EXPECT_EQ(v->j, 1);
  EXPECT_EQ(v->k, 0);
  EXPECT_EQ(v->residual, vec<Rational>(Q, {q(0), q(0), q(0), q(-1)}));
  EXPECT_THROW(bad.validated(), InvalidAlgebra);
}

TEST(PreLie, DoubledE2E1StillSatisfiesTheIdentity) {
  // Rescaling one structure constant of F4 only changes the basis, so it
  // cannot be used as a corrupted fixture.
  auto alg = f4_unchecked();
  alg = alg.with_product(1, 0, vec<Rational>(Q, {q(0), q(0), q(2), q(0)}));
  EXPECT_FALSE(check_prelie_identity(alg));
}

TEST(PreLie, NilpotencyClasses) {
  EXPECT_EQ(PreLieAlgebra<Rational>::zero(Q, 3).nilpotency_class(), 2);
  for (const auto& [name, s] : std::vector<std::pair<std::string, int>>{
           {"zero1", 2}, {"N2", 3}, {"H3", 3}, {"F4", 4}, {"F5", 5}}) {
    EXPECT_EQ(test::algebra<Rational>(name).nilpotency_class(), s) << name;
  }
}

TEST(PreLie, IdempotentIsNotNilpotent) {
  const auto alg = PreLieAlgebra<Rational>::unchecked(Q, 1, {{0, 0, 0, Rational(1)}});
  EXPECT_FALSE(check_prelie_identity(alg));
  EXPECT_FALSE(nilpotency_index(alg));
  EXPECT_THROW(alg.validated(), InvalidAlgebra);
}

TEST(PreLie, ClassMustFitTheCharacteristic) {
  auto f = test::prelie_file("F5");
  f.field = ScalarField::prime(5);
  EXPECT_THROW(algebra_from_file<ModP>(f).validated(), CharacteristicTooSmall);
}

TEST(PreLie, ProductChainOfF4) {
  const auto chain = product_chain(test::algebra<Rational>("F4"));
  std::vector<int> dims;
  for (const auto& c : chain) dims.push_back(c.dim());
  EXPECT_EQ(dims, (std::vector<int>{4, 3, 2, 0}));
}

TEST(PreLie, CommutatorSatisfiesJacobi) {
  for (const auto& name : test::members()) {
    const auto alg = test::algebra<Rational>(name);
    std::mt19937_64 rng(kDefaultSeed);
    for (int t = 0; t < 10; ++t) {
      const auto a = random_vector<Rational>(Q, alg.dim(), rng);
      const auto b = random_vector<Rational>(Q, alg.dim(), rng);
      const auto c = random_vector<Rational>(Q, alg.dim(), rng);
      const Vector<Rational> jac = lie_bracket(alg, a, lie_bracket(alg, b, c)) +
                                   lie_bracket(alg, b, lie_bracket(alg, c, a)) +
                                   lie_bracket(alg, c, lie_bracket(alg, a, b));
      EXPECT_TRUE(is_zero(jac)) << name;
      EXPECT_EQ(lie_bracket(alg, a, b), Vector<Rational>(-lie_bracket(alg, b, a)));
    }
  }
}

TEST(PreLie, DimensionChecks) {
  const auto alg = test::algebra<Rational>("H3");
  EXPECT_THROW(multiply(alg, Vector<Rational>(Vector<Rational>::Zero(2)), Vector<Rational>(Vector<Rational>::Zero(3))),
               DimensionMismatch);
}
