#include <gtest/gtest.h>

#include "chikit/hopf/character.hpp"
#include "support.hpp"

using namespace chikit;
using namespace chikit::testing;

namespace {

// Left side of the shuffle relation at the oracle point, from chi_at alone.
BigRat shuffle_sum_at_oracle(unsigned m, unsigned n) {
  auto pt = oracle_point(m + n);
  BigRat s = 0;
  for (const auto& tau : shuffles(m, n).elements) s += chi_at(word_vars(tau.inverse().word()), pt);
  return s;
}

}  // namespace

TEST(Chi, SmallArities) {
  EXPECT_EQ(chi(0, {}).value, RatFunc(1));
  EXPECT_EQ(chi(1, {x_var(1)}).value, RatFunc(1) / (X(1) * (RatFunc(1) - X(1))));
  RatFunc expected = RatFunc(1) / (X(2) * (X(1) - X(2)) * (RatFunc(1) - X(1)));
  EXPECT_EQ(chi(2, {x_var(2), x_var(1)}).value, expected);
}

TEST(Chi, ArgumentErrors) {
  EXPECT_THROW(chi(2, {x_var(1), x_var(1)}), std::invalid_argument);
  EXPECT_THROW(chi(2, {x_var(1)}), std::invalid_argument);
}

TEST(Chi, OraclePointAvoidsPoles) {
  auto pt = oracle_point(8);
  ASSERT_EQ(pt.size(), 8u);
  EXPECT_EQ(pt.at(x_var(1)), rat(1, 3));
  EXPECT_EQ(pt.at(x_var(8)), rat(1, 23));
  std::vector<Var> all;
  for (unsigned i = 1; i <= 8; ++i) all.push_back(x_var(i));
  EXPECT_NO_THROW(chi_at(all, pt));
}

TEST(Character, EvaluatesOnBasisElements) {
  EXPECT_EQ(character_eval(FBasisElement{Permutation::identity(0)}).value, RatFunc(1));
  EXPECT_EQ(character_eval(FBasisElement{Permutation({2, 1})}).value, chi(2, {x_var(2), x_var(1)}).value);
  EXPECT_EQ(character_eval(FBasisElement{Permutation::identity(3)}).value,
            chi(3, {x_var(1), x_var(2), x_var(3)}).value);
}

TEST(MrProduct, EmptyPermutationIsTheUnit) {
  Permutation s({2, 3, 1});
  auto p = mr_product(Permutation::identity(0), s);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms().begin()->first, s);
  EXPECT_EQ(mr_product(s, Permutation::identity(0)).terms().begin()->first, s);
}

TEST(MrProduct, OneTimesOne) {
  auto p = mr_product(Permutation({1}), Permutation({1}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.terms().at(Permutation({1, 2})), 1);
  EXPECT_EQ(p.terms().at(Permutation({2, 1})), 1);
}

TEST(MrProduct, TermCountIsBinomial) {
  EXPECT_EQ(mr_product(Permutation({2, 1}), Permutation({1, 2})).size(), 6u);
  EXPECT_EQ(mr_product(Permutation({1, 3, 2}), Permutation({2, 1})).size(), 10u);
  auto p = mr_product(Permutation({2, 1}), Permutation({1, 2}));
  EXPECT_EQ(p.terms().count(Permutation({2, 1, 3, 4})), 1u);
  EXPECT_EQ(p.terms().count(Permutation({3, 2, 4, 1})), 1u);
}

TEST(ShuffleRelation, OneOneMatchesHandComputation) {
  RatFunc lhs = chi(2, {x_var(1), x_var(2)}).value + chi(2, {x_var(2), x_var(1)}).value;
  RatFunc hand = RatFunc(1) / (X(1) * X(2) * (RatFunc(1) - X(1)) * (RatFunc(1) - X(2)));
  EXPECT_EQ(lhs, hand);
  EXPECT_TRUE(verify_shuffle_relation(1, 1).pass);
}

TEST(ShuffleRelation, FrozenOracleValues) {
  // independent evaluation with exact fractions at x_i = 1/3, 1/5, 1/7, 1/11
  EXPECT_EQ(shuffle_sum_at_oracle(1, 1), rat(225, 8));
  EXPECT_EQ(shuffle_sum_at_oracle(2, 1), rat(-3675, 16));
  EXPECT_EQ(shuffle_sum_at_oracle(2, 2), rat(266805, 64));
  EXPECT_EQ(shuffle_sum_at_oracle(1, 3), rat(266805, 32));
}

TEST(ShuffleRelation, TrivialSide) {
  for (unsigned m = 0; m <= 4; ++m) {
    EXPECT_TRUE(verify_shuffle_relation(m, 0).pass) << m;
    EXPECT_TRUE(verify_shuffle_relation(0, m).pass) << m;
  }
}

TEST(ShuffleRelation, AllSizesUpToEight) {
  for (unsigned N = 0; N <= 8; ++N)
    for (unsigned m = 0; m <= N; ++m) {
      auto rep = verify_shuffle_relation(m, N - m);
      EXPECT_TRUE(rep.pass) << rep.to_json().dump();
    }
}

TEST(ShuffleRelation, InjectedSignFlipIsDetected) {
  VerifyOptions opt;
  opt.inject_sign_flip = true;
  for (unsigned m = 1; m <= 3; ++m) EXPECT_FALSE(verify_shuffle_relation(m, 1, opt).pass);
}

TEST(ShuffleRelation, ReportCounts) {
  auto rep = verify_shuffle_relation(4, 4);
  EXPECT_EQ(rep.details["lhs_term_count"], 70);
  EXPECT_EQ(rep.statement, "hopf.shuffle");
}

TEST(Multiplicativity, ExhaustiveUpToFive) {
  unsigned count = 0;
  for (unsigned N = 0; N <= 5; ++N)
    for (unsigned m = 0; m <= N; ++m)
      for (const auto& s : Permutation::all(m))
        for (const auto& t : Permutation::all(N - m)) {
          ASSERT_TRUE(verify_multiplicativity(s, t).pass) << s.to_string() << " " << t.to_string();
          ++count;
        }
  // sum over N of sum_m m! (N-m)!
  EXPECT_EQ(count, 1u + 2 + 5 + 16 + 64 + 312);
}

TEST(Multiplicativity, ProductIsSymmetricUnderBlockRelabel) {
  // chi(sigma) chi(tau shifted) is invariant when the blocks trade places and variables
  Permutation s({2, 1}), t({1, 3, 2});
  RatFunc a = character_eval(mr_product(s, t));
  RatFunc b = character_eval(mr_product(t, s));
  std::map<Var, Var> swap;
  for (unsigned i = 1; i <= 3; ++i) swap[x_var(i)] = x_var(i + 2);
  for (unsigned i = 1; i <= 2; ++i) swap[x_var(i + 3)] = x_var(i);
  EXPECT_EQ(rf_substitute(b, swap), a);
}

TEST(Multiplicativity, AdjacentTranspositionChangesThreeFactors) {
  auto f = chi_denominator_factors({x_var(1), x_var(2), x_var(3)});
  auto g = chi_denominator_factors({x_var(1), x_var(3), x_var(2)});
  ASSERT_EQ(f.size(), g.size());
  unsigned differ = 0;
  for (std::size_t i = 0; i < f.size(); ++i) differ += !(f[i] == g[i]);
  EXPECT_EQ(differ, 3u);  // x3-x2 flips sign, plus its two neighbours
}
