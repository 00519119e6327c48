#include <gtest/gtest.h>

#include <random>

#include "plb/brace.hpp"
#include "plb/flows.hpp"
#include "support.hpp"

using namespace plb;
using plb::test::q;
using plb::test::vec;

namespace {

const ScalarField Q = ScalarField::rationals();

std::vector<int> dims(const std::vector<Subspace<Rational>>& chain) {
  std::vector<int> out;
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

}  // namespace

TEST(ToBrace, F4SecondComponentIsHalfDifference) {
  const auto br = to_brace(test::algebra<Rational>("F4"));
  ASSERT_EQ(br.class_bound(), 4);
  const std::vector<int> e1e1{0, 0};
  // Lambda_2(e1, e1; e1) = -1/2 (e1 e1) e1 + 1/2 e1 (e1 e1) = -1/2 e3 + 1/2 e4.
  EXPECT_EQ(Vector<Rational>(br.component(2, e1e1).col(0)),
            vec<Rational>(Q, {q(0), q(0), q(-1, 2), q(1, 2)}));
  // Lambda_3 vanishes in F4: every surviving triple product is already in Lambda_2.
  for (const auto& m : br.lambda(3)) EXPECT_TRUE(is_zero(m));
}

TEST(ToBrace, FirstComponentIsLeftMultiplication) {
  for (const auto& name : test::members()) {
    const auto alg = test::algebra<Rational>(name);
    const auto br = to_brace(alg);
    for (int i = 0; i < alg.dim(); ++i) {
      const std::vector<int> idx{i};
      EXPECT_EQ(br.component(1, idx), alg.left_basis_operator(i)) << name;
    }
  }
}

TEST(ToBrace, StarMatchesFlows) {
  for (const auto& name : test::members()) {
    const auto alg = test::algebra<Rational>(name);
    const auto br = to_brace(alg);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
      const auto a = random_vector<Rational>(Q, alg.dim(), rng);
      const auto b = random_vector<Rational>(Q, alg.dim(), rng);
      EXPECT_EQ(circ(br, a, b), circ(alg, a, b)) << name;
    }
  }
}

TEST(ToBrace, MatchesCorpusFiles) {
  for (unsigned p : {0u, 7u, 11u}) {
    for (const auto& m : test::members()) {
      const auto name = test::twin(m, p);
      if (p == 0) {
        EXPECT_EQ(to_brace(test::algebra<Rational>(name)), test::brace<Rational>(name)) << name;
      } else {
        EXPECT_EQ(to_brace(test::algebra<ModP>(name)), test::brace<ModP>(name)) << name;
      }
    }
  }
}

TEST(BraceLaws, CorpusBracesAreStronglyNilpotentFBraces) {
  for (const auto& name : test::members()) {
    const auto br = test::brace<Rational>(name);
    EXPECT_FALSE(check_left_brace(br, 10)) << name;
    EXPECT_FALSE(check_group(br, 10)) << name;
    EXPECT_FALSE(check_fbrace(br, 10)) << name;
    EXPECT_FALSE(first_asymmetry(br)) << name;
    const auto chains = radical_chains(br);
    EXPECT_TRUE(chains.strongly_nilpotent()) << name;
    EXPECT_EQ(chains.strongly_nilpotent(), chains.left_nilpotent() && chains.right_nilpotent());
  }
}

TEST(BraceLaws, TamperedBraceFailsAtFirstBasisTriple) {
  const auto br = brace_from_file<Rational>(
      load_algebra_file(test::corpus_path("fixtures/F4_brace_tampered.json")));
  const auto v = check_left_brace(br, 10);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->site, "basis triple (1, 1, 1)");
  EXPECT_TRUE(check_group(br, 10));
}

TEST(BraceLaws, AsymmetricTensorIsReported) {
  auto br = test::brace<Rational>("H3");
  const std::vector<int> e12{0, 1};
  br.component(2, e12)(2, 0) = Rational(1);
  EXPECT_EQ(first_asymmetry(br), std::optional<std::string>("Lambda_2(2,1)"));
}

TEST(BraceLaws, InverseIsTwoSided) {
  const auto br = test::brace<Rational>("F5");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_vector<Rational>(Q, br.dim(), rng);
    const auto inv = circ_inverse(br, a);
    EXPECT_TRUE(is_zero(circ(br, a, inv)));
    EXPECT_TRUE(is_zero(circ(br, inv, a)));
  }
}

TEST(Chains, N2) {
  const auto r = radical_chains(test::brace<Rational>("N2"));
  EXPECT_EQ(dims(r.left), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(dims(r.right), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(dims(r.strong), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(r.strong_index, 3);
}

TEST(Chains, TrivialBraceCollapsesAtOnce) {
  const auto r = radical_chains(test::brace<Rational>("zero2"));
  EXPECT_EQ(dims(r.left), (std::vector<int>{2, 0}));
  EXPECT_EQ(dims(r.right), (std::vector<int>{2, 0}));
  EXPECT_EQ(dims(r.strong), (std::vector<int>{2, 0}));
}

TEST(Chains, F4StrongChainEndsAtFour) {
  const auto r = radical_chains(test::brace<Rational>("F4"));
  EXPECT_EQ(dims(r.strong), (std::vector<int>{4, 3, 2, 0}));
  EXPECT_EQ(r.strong_index, 4);
}

TEST(Chains, ChainsAreDescending) {
  for (const auto& name : test::members()) {
    const auto r = radical_chains(test::brace<Rational>(name));
    for (const auto* chain : {&r.left, &r.right, &r.strong}) {
      for (std::size_t i = 1; i < chain->size(); ++i) {
        EXPECT_TRUE((*chain)[i - 1].contains((*chain)[i])) << name;
      }
    }
  }
}

TEST(Chains, PrimeTwinsAgree) {
  for (const auto& name : test::members()) {
    const auto rq = radical_chains(test::brace<Rational>(name));
    const auto rp = radical_chains(test::brace<ModP>(test::twin(name, 7)));
    EXPECT_EQ(rq.strong_index, rp.strong_index) << name;
    EXPECT_EQ(rq.left_index, rp.left_index) << name;
  }
}
