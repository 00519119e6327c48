#include <gtest/gtest.h>

#include <random>

#include "plb/brace.hpp"
#include "plb/linalg.hpp"
#include "support.hpp"

using namespace plb;
using plb::test::q;
using plb::test::vec;

namespace {
const ScalarField Q = ScalarField::rationals();
}

TEST(Linalg, SolveExactSystem) {
  Matrix<Rational> m(2, 2);
  m << 2, 1, 1, 3;
  const auto x = solve_linear<Rational>(m, vec<Rational>(Q, {q(1), q(2)}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec<Rational>(Q, {q(1, 5), q(3, 5)}));
}

TEST(Linalg, InconsistentSystemHasNoSolution) {
  Matrix<Rational> m(2, 2);
  m << 1, 1, 2, 2;
  EXPECT_FALSE(solve_linear<Rational>(m, vec<Rational>(Q, {q(1), q(3)})));
}

TEST(Linalg, InverseOfSingularIsEmpty) {
  Matrix<Rational> m(2, 2);
  m << 1, 2, 2, 4;
  EXPECT_FALSE(inverse(m));
  Matrix<Rational> h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = Rational(1, i + j + 1);
  const auto inv = inverse(h);
  ASSERT_TRUE(inv);
  EXPECT_EQ(Matrix<Rational>(h * *inv), Matrix<Rational>::Identity(3, 3));
  // Hilbert inverse has integer entries; the corner is 9.
  EXPECT_EQ((*inv)(0, 0), Rational(9));
}

TEST(Linalg, ModPInverse) {
  const auto f = ScalarField::prime(7);
  Matrix<ModP> m(2, 2);
  m << ModP(1, 7), ModP(2, 7), ModP(3, 7), ModP(4, 7);
  const auto inv = inverse(m);
  ASSERT_TRUE(inv);
  Matrix<ModP> id = Matrix<ModP>::Identity(2, 2);
  EXPECT_EQ(Matrix<ModP>(m * *inv), id);
  (void)f;
}

TEST(Subspace, CanonicalFormIgnoresGenerators) {
  const auto a = span<Rational>({vec<Rational>(Q, {q(1), q(1), q(0)}),
                                 vec<Rational>(Q, {q(0), q(1), q(1)})},
                                3);
  const auto b = span<Rational>({vec<Rational>(Q, {q(1), q(2), q(1)}),
                                 vec<Rational>(Q, {q(1), q(0), q(-1)}),
                                 vec<Rational>(Q, {q(2), q(2), q(0)})},
                                3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(a.contains(vec<Rational>(Q, {q(1), q(0), q(-1)})));
  EXPECT_FALSE(a.contains(vec<Rational>(Q, {q(1), q(0), q(0)})));
  EXPECT_TRUE(Subspace<Rational>::full(3).contains(a));
}

TEST(Subspace, SpanIsIdempotentOnRandomSamples) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vector<Rational>> vs;
    for (int i = 0; i < 3; ++i) vs.push_back(random_vector<Rational>(Q, 4, rng));
    const auto s = span(vs, 4);
    std::vector<Vector<Rational>> again;
    for (int i = 0; i < s.dim(); ++i) again.push_back(s.basis_vector(i));
    EXPECT_EQ(span(again, 4), s);
    for (const auto& v : vs) EXPECT_TRUE(s.contains(v));
  }
}

TEST(Interpolation, RecoversRandomPolynomials) {
  std::mt19937_64 rng(11);
  for (auto f : {ScalarField::rationals(), ScalarField::prime(11)}) {
    for (int deg = 0; deg <= 5; ++deg) {
      if (f.is_rationals()) {
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.push_back(random_scalar<Rational>(f, rng));
        auto got = polynomial_coefficients<Rational>(f, deg, [&](const Rational& t) {
          Rational acc(0), p(1);
          for (const auto& ck : c) acc += ck * p, p *= t;
          return acc;
        });
        EXPECT_EQ(got, c);
      } else {
        std::vector<ModP> c;
        for (int k = 0; k <= deg; ++k) c.push_back(random_scalar<ModP>(f, rng));
        auto got = polynomial_coefficients<ModP>(f, deg, [&](const ModP& t) {
          ModP acc(0, 11), p(1, 11);
          for (const auto& ck : c) acc += ck * p, p *= t;
          return acc;
        });
        EXPECT_EQ(got, c);
      }
    }
  }
}

TEST(Interpolation, RejectsDuplicateNodes) {
  std::vector<std::pair<Rational, Rational>> pts{{Rational(1), Rational(2)},
                                                 {Rational(1), Rational(3)}};
  EXPECT_THROW(interpolate_coefficients(pts, 1), DuplicateNode);
}

TEST(Interpolation, NodesNeedRoomInTheField) {
  EXPECT_THROW(interpolation_nodes<ModP>(ScalarField::prime(5), 5), CharacteristicTooSmall);
  const auto nodes = interpolation_nodes<Rational>(Q, 3);
  EXPECT_EQ(nodes, (std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4)}));
}
