#include <gtest/gtest.h>

#include <random>

#include "plb/bch.hpp"
#include "support.hpp"

using namespace plb;

namespace {

const ScalarField Q = ScalarField::rationals();
using TS = TruncatedSeries<Rational>;

TS word(const std::string& w, Rational c = Rational(1), int bound = 3) {
  return TS::word(Q, bound, w, c);
}

TS bracket(const std::string& w, int bound = 3) { return expand_bracket<Rational>(Q, bound, w); }

TS random_series(std::mt19937_64& rng, int bound) {
  TS out(Q, bound);
  std::uniform_int_distribution<int> len(1, bound), letter(0, 1);
  for (int i = 0; i < 6; ++i) {
    std::string w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w += letter(rng) ? 'X' : 'Y';
    out.add(w, random_scalar<Rational>(Q, rng));
  }
  return out;
}

TS swap_letters(const TS& u) {
  TS out(u.field(), u.degree_bound());
  for (const auto& [w, c] : u.terms()) {
    std::string swapped = w;
    for (auto& ch : swapped) ch = ch == 'X' ? 'Y' : 'X';
    out.add(swapped, c);
  }
  return out;
}

}  // namespace

TEST(TruncatedSeries, Products) {
  const auto one = TS::one(Q, 3);
  const auto x = word("X"), y = word("Y");
  EXPECT_EQ(ts_mul(one, x), x);
  EXPECT_EQ(ts_mul(x, y), word("XY"));
  const auto s = x + y;
  EXPECT_EQ(ts_mul(s, s), word("XX") + word("XY") + word("YX") + word("YY"));
  EXPECT_TRUE(ts_mul(word("XY"), word("YX")).terms().empty());
}

TEST(TruncatedSeries, ExpOfASingleGenerator) {
  EXPECT_EQ(ts_exp(TS(Q, 3)), TS::one(Q, 3));
  EXPECT_EQ(ts_exp(word("X")), TS::one(Q, 3) + word("X") + word("XX", Rational(1, 2)) +
                                   word("XXX", Rational(1, 6)));
}

TEST(TruncatedSeries, Preconditions) {
  EXPECT_THROW(ts_exp(TS::one(Q, 3)), PreconditionViolated);
  EXPECT_THROW(ts_log(word("X")), PreconditionViolated);
  const auto f5 = ScalarField::prime(5);
  EXPECT_THROW(ts_exp(TruncatedSeries<ModP>::word(f5, 5, "X")), CharacteristicTooSmall);
}

TEST(TruncatedSeries, LogInvertsExp) {
  std::mt19937_64 rng(kDefaultSeed);
  for (int bound = 1; bound <= 5; ++bound) {
    for (int t = 0; t < 20; ++t) {
      const auto u = random_series(rng, bound);
      EXPECT_EQ(ts_log(ts_exp(u)), u) << bound;
    }
  }
  EXPECT_EQ(ts_log(ts_exp(word("X") + word("Y"))), word("X") + word("Y"));
}

TEST(Bch, LowDegreeTerms) {
  const auto c = bch_series<Rational>(Q, 3);
  const auto expected = word("X") + word("Y") + Rational(1, 2) * bracket("XY") +
                        Rational(1, 12) * (bracket("YXX") + bracket("XYY"));
  EXPECT_EQ(c, expected);
  EXPECT_EQ(c.homogeneous(2), word("XY", Rational(1, 2)) - word("YX", Rational(1, 2)));
  EXPECT_EQ(bch_series<Rational>(Q, 1), TS::word(Q, 1, "X") + TS::word(Q, 1, "Y"));
}

TEST(Bch, IsALieElementUpToDegreeSix) {
  for (int s = 1; s <= 6; ++s) EXPECT_NO_THROW(dsw_project(bch_series<Rational>(Q, s))) << s;
}

TEST(Bch, DegreeFourIsTheMixedBracket) {
  // The classical degree-4 term is -1/24 [Y,[X,[X,Y]]].
  const auto x = TS::word(Q, 4, "X"), y = TS::word(Q, 4, "Y");
  const auto xy = ts_mul(x, y) - ts_mul(y, x);
  const auto xxy = ts_mul(x, xy) - ts_mul(xy, x);
  const auto yxxy = ts_mul(y, xxy) - ts_mul(xxy, y);
  EXPECT_EQ(bch_series<Rational>(Q, 4).homogeneous(4), Rational(-1, 24) * yxxy);
}

TEST(Bch, SwapNegatesEvenDegreeParts) {
  const auto c = bch_series<Rational>(Q, 5);
  const auto swapped = swap_letters(c);
  for (int k = 1; k <= 5; ++k) {
    const auto lhs = swapped.homogeneous(k);
    const auto rhs = c.homogeneous(k);
    if (k % 2 == 0) {
      EXPECT_EQ(lhs, Rational(-1) * rhs) << k;
    } else {
      EXPECT_EQ(lhs, rhs) << k;
    }
  }
}

TEST(Dsw, ProjectsBrackets) {
  const auto terms = dsw_project(word("X"));
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].word, "X");
  const auto half = Rational(1, 2) * bracket("XY");
  EXPECT_EQ(expand_brackets<Rational>(Q, 3, dsw_project(half)), half);
  EXPECT_THROW(dsw_project(word("XY")), NotLieElement);
  EXPECT_THROW(dsw_project(TS::one(Q, 3)), PreconditionViolated);
}

TEST(VerifyFlowsBch, CorpusAlgebras) {
  for (const auto& name : test::members()) {
    EXPECT_FALSE(verify_flows_bch(test::algebra<Rational>(name), 5)) << name;
  }
  EXPECT_FALSE(verify_flows_bch(test::algebra<ModP>("F5_p7"), 5));
}

TEST(VerifyFlowsBch, H3ReducesToHalfBracket) {
  const auto h3 = test::algebra<Rational>("H3");
  std::mt19937_64 rng(1);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_vector<Rational>(Q, 3, rng);
    const auto b = random_vector<Rational>(Q, 3, rng);
    const Vector<Rational> c = a + b + Rational(1, 2) * lie_bracket(h3, a, b);
    EXPECT_EQ(circ(h3, W(h3, a), W(h3, b)), W(h3, c));
  }
}

TEST(VerifyFlowsBch, WrongTruncationFails) {
  // Dropping the bracket term breaks the identity in H3.
  const auto h3 = test::algebra<Rational>("H3");
  const auto a = unit_vector<Rational>(3, 0), b = unit_vector<Rational>(3, 1);
  EXPECT_NE(circ(h3, W(h3, a), W(h3, b)), W(h3, Vector<Rational>(a + b)));
}
