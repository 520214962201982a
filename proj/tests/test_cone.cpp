#include <gtest/gtest.h>

#include <sstream>

#include "chikit/cone/cone_transforms.hpp"
#include "chikit/hopf/character.hpp"
#include "support.hpp"

using namespace chikit;
using namespace chikit::testing;

TEST(ConeTransform, ClosedFormsInLowDimension) {
  EXPECT_EQ(transform_closed_form(PrefixCone(0)), RatFunc(1));
  EXPECT_EQ(transform_closed_form(PrefixCone(1)), RatFunc(1) / (RatFunc(1) - X(1)));
  RatFunc two = X(2) / ((X(2) - X(1)) * (RatFunc(1) - X(2)));
  EXPECT_EQ(transform_closed_form(PrefixCone(2)), two);
  EXPECT_EQ(cone_transform(PrefixCone(2)).closed_form, two);
}

TEST(ConeTransform, PermutedConeReordersVariables) {
  // C^tau with tau = 21: prefix sums over t_2, t_1
  RatFunc c = transform_closed_form(PrefixCone(2, Permutation({2, 1})));
  EXPECT_EQ(c, X(1) / ((X(1) - X(2)) * (RatFunc(1) - X(1))));
  EXPECT_THROW(PrefixCone(3, Permutation({2, 1})), std::invalid_argument);
}

TEST(ConeTransform, Membership) {
  PrefixCone c(3);
  EXPECT_TRUE(c.contains({0, 0, 0}));
  EXPECT_TRUE(c.contains({2, -1, -1}));
  EXPECT_FALSE(c.contains({-1, 2, 0}));
  EXPECT_FALSE(c.contains({1, 0, -2}));
  PrefixCone p(2, Permutation({2, 1}));
  EXPECT_TRUE(p.contains({-1, 1}));
  EXPECT_FALSE(p.contains({1, -1}));
  EXPECT_THROW(c.contains({1, 1}), std::invalid_argument);
}

TEST(LatticeOracle, OneDimensionalSeries) {
  auto res = enumerate_oracle(1, 3);
  ASSERT_EQ(res.points.size(), 4u);
  EXPECT_EQ(res.sum.to_ratfunc(), RatFunc(1) + X(1) + X(1) * X(1) + X(1) * X(1) * X(1));
  EXPECT_TRUE(res.all_in_cone && res.sum_matches_product && res.matches_closed_form);
}

TEST(LatticeOracle, TwoDimensionalBoxOfSideOne) {
  auto res = enumerate_oracle(2, 1);
  ASSERT_EQ(res.points.size(), 4u);
  std::set<std::vector<long>> is;
  for (const auto& p : res.points) is.insert(p.I);
  std::set<std::vector<long>> expected{{0, 0}, {1, -1}, {0, 1}, {1, 0}};
  EXPECT_EQ(is, expected);
  EXPECT_TRUE(res.all_in_cone);
}

TEST(LatticeOracle, AllInstancesUpToFourByFive) {
  for (unsigned N = 0; N <= 4; ++N)
    for (long B = 0; B <= 5; ++B) {
      auto res = enumerate_oracle(N, B);
      std::size_t want = 1;
      for (unsigned k = 0; k < N; ++k) want *= static_cast<std::size_t>(B + 1);
      EXPECT_EQ(res.points.size(), want);
      EXPECT_TRUE(res.all_in_cone) << N << "," << B;
      EXPECT_TRUE(res.sum_matches_product) << N << "," << B;
      EXPECT_TRUE(res.matches_closed_form) << N << "," << B;
      EXPECT_TRUE(verify_lattice(N, B).pass);
    }
}

TEST(LatticeOracle, NegativeBoundThrows) { EXPECT_THROW(enumerate_oracle(2, -1), std::invalid_argument); }

TEST(LatticeOracle, CsvRows) {
  std::ostringstream os;
  write_lattice_csv(os, enumerate_oracle(2, 1));
  EXPECT_EQ(os.str(), "2,1,0;0,0;0\n2,1,1;0,1;-1\n2,1,0;1,0;1\n2,1,1;1,1;0\n");
}

TEST(Brion, SmallCases) {
  EXPECT_TRUE(verify_brion(1, 1).pass);
  RatFunc lhs = transform_closed_form(PrefixCone(1)) * transform_closed_form(PrefixCone(1), 1);
  RatFunc rhs = transform_closed_form(PrefixCone(2)) + transform_closed_form(PrefixCone(2, Permutation({2, 1})));
  EXPECT_EQ(lhs, rhs);
  for (unsigned m = 0; m <= 4; ++m) EXPECT_TRUE(verify_brion(m, 0).pass);
}

TEST(Brion, AllSizesUpToEight) {
  for (unsigned N = 0; N <= 8; ++N)
    for (unsigned m = 0; m <= N; ++m) EXPECT_TRUE(verify_brion(m, N - m).pass) << m << "," << N - m;
}

TEST(Bridge, AllSizesUpToEight) {
  for (unsigned N = 0; N <= 8; ++N) EXPECT_TRUE(verify_bridge(N).pass) << N;
}

TEST(Bridge, BrionAndShuffleRelationAgree) {
  // Phi(C^tau) is x-monomial times chi of the tau^-1 word, so the two identities match term by term
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 1; n + m <= 4; ++n)
      for (const auto& tau : shuffles(m, n).elements) {
        auto w = tau.inverse().word();
        MultiPoly mono(1);
        for (unsigned i = 1; i <= m + n; ++i) mono *= x(i);
        EXPECT_EQ(transform_closed_form(PrefixCone(m + n, tau)), RatFunc(mono) * chi(m + n, word_vars(w)).value);
      }
}
