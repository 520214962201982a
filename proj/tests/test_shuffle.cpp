#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chikit/shuffle/ez.hpp"

using namespace chikit;

namespace {

MultiPoly z(unsigned i) { return MultiPoly::variable(CoordMap::coord(i)); }

Permutation perm(std::vector<unsigned> w) { return Permutation(std::move(w)); }

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(perm({1, 1}), std::invalid_argument);
  EXPECT_THROW(perm({0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(perm({}));
}

TEST(Permutation, SignIsMultiplicative) {
  auto all = Permutation::all(4);
  for (const auto& a : all)
    for (const auto& b : all) ASSERT_EQ(a.sign() * b.sign(), (a * b).sign());
}

TEST(Permutation, InverseAndComposition) {
  Permutation p = perm({3, 1, 4, 2});
  EXPECT_EQ(p * p.inverse(), Permutation::identity(4));
  EXPECT_EQ(p(1), 3u);
  EXPECT_EQ(p.inverse().word(), (std::vector<unsigned>{2, 4, 1, 3}));
}

TEST(Shuffles, OneOne) {
  auto s = shuffles(1, 1);
  ASSERT_EQ(s.elements.size(), 2u);
  EXPECT_EQ(s.elements[0], perm({1, 2}));
  EXPECT_EQ(s.elements[0].sign(), 1);
  EXPECT_EQ(s.elements[1], perm({2, 1}));
  EXPECT_EQ(s.elements[1].sign(), -1);
}

TEST(Shuffles, SmallCounts) {
  EXPECT_EQ(shuffles(2, 1).elements.size(), 3u);
  for (unsigned n = 0; n < 5; ++n) {
    auto s = shuffles(0, n);
    ASSERT_EQ(s.elements.size(), 1u);
    EXPECT_EQ(s.elements[0], Permutation::identity(n));
  }
}

TEST(Shuffles, CountsAndShapeUpToTen) {
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; m + n <= 10; ++n) {
      auto s = shuffles(m, n);
      ASSERT_EQ(s.elements.size(), binomial(m + n, m));
      std::set<Permutation> distinct(s.elements.begin(), s.elements.end());
      ASSERT_EQ(distinct.size(), s.elements.size());
      for (const auto& t : s.elements) ASSERT_TRUE(is_shuffle(t, m, n));
    }
}

TEST(Shuffles, SignPatternTwoTwo) {
  std::vector<int> signs;
  for (const auto& t : shuffles(2, 2).elements) signs.push_back(t.sign());
  EXPECT_EQ(signs, (std::vector<int>{1, -1, 1, 1, -1, 1}));
}

TEST(CoordMap, FaceMapInsertsZero) {
  CoordMap f = face_map(1, 2);
  CoordMap expected(Space::simplex(1), Space::simplex(2), {z(0), MultiPoly{}, z(1)});
  EXPECT_EQ(f, expected);
  EXPECT_EQ(f.apply({rat(1, 3), rat(2, 3)}), (std::vector<BigRat>{rat(1, 3), 0, rat(2, 3)}));
}

TEST(CoordMap, DegeneracyAddsNeighbours) {
  CoordMap s = degeneracy(0, 2);
  CoordMap expected(Space::simplex(2), Space::simplex(1), {z(0) + z(1), z(2)});
  EXPECT_EQ(s, expected);
}

TEST(CoordMap, DegeneracyAfterFaceIsIdentity) {
  for (unsigned N = 2; N <= 5; ++N)
    for (unsigned k = 0; k + 1 <= N - 1; ++k)
      EXPECT_EQ(compose(degeneracy(k, N), face_map(k, N)), CoordMap::identity(Space::simplex(N - 1)));
}

TEST(CoordMap, RangeErrors) {
  EXPECT_THROW(face_map(3, 2), std::out_of_range);
  EXPECT_THROW(degeneracy(2, 2), std::out_of_range);
  EXPECT_THROW(CoordMap(Space::simplex(1), Space::simplex(1), {z(0), z(0)}), std::invalid_argument);
}

TEST(Lambda, TrivialCases) {
  EXPECT_EQ(lambda_map(Permutation::identity(0), 0).target(), Space::simplex(0) * Space::simplex(0));
  EXPECT_EQ(lambda_map(Permutation::identity(1), 1), CoordMap(Space::simplex(1), Space::simplex(1) * Space::simplex(0),
                                                               {z(0), z(1), MultiPoly(1)}));
  EXPECT_THROW(lambda_map(perm({2, 1, 3}), 2), std::invalid_argument);
}

TEST(Lambda, LandsInProductOfSimplices) {
  for (const auto& tau : shuffles(1, 1).elements) {
    auto p = lambda_map(tau, 1).apply({rat(1, 3), rat(1, 3), rat(1, 3)});
    ASSERT_EQ(p.size(), 4u);
    EXPECT_EQ(p[0] + p[1], 1);
    EXPECT_EQ(p[2] + p[3], 1);
    for (const auto& c : p) EXPECT_GE(c, 0);
  }
}

TEST(Lambda, ComponentsAreNonNegativeAndSumToTheSimplexForm) {
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; m + n <= 4; ++n)
      for (const auto& tau : shuffles(m, n).elements) {
        auto [a, b] = lambda_components(tau, m);
        MultiPoly total;
        for (unsigned i = 0; i <= m + n; ++i) total += z(i);
        for (const auto* side : {&a, &b}) {
          MultiPoly s;
          for (const auto& c : *side) {
            s += c;
            for (const auto& t : c.terms()) {
              EXPECT_GT(t.coef, 0);
              EXPECT_EQ(t.mono.degree(), 1u);
            }
          }
          EXPECT_EQ(s, total);
        }
      }
}

TEST(Lambda, EqualsCompositeOfDegeneracies) {
  // tau = 213 in Sh(1,2): first factor s_{0} s_{2}, second factor s_{1}
  Permutation tau = perm({2, 1, 3});
  ASSERT_TRUE(is_shuffle(tau, 1, 2));
  CoordMap first = compose(degeneracy(0, 2), degeneracy(2, 3));
  CoordMap second = degeneracy(1, 3);
  std::vector<MultiPoly> comps = first.components();
  for (const auto& c : second.components()) comps.push_back(c);
  CoordMap joined(Space::simplex(3), Space::simplex(1) * Space::simplex(2), comps);
  EXPECT_EQ(lambda_map(tau, 1), joined);
}

TEST(PhiDif, NOne) {
  EXPECT_EQ(phi_map(1), CoordMap(Space::simplex(1), Space::cube(1), {z(0)}));
  EXPECT_EQ(dif_map(1), CoordMap(Space::cube(1), Space::simplex(1), {z(0), MultiPoly(1) - z(0)}));
}

TEST(PhiDif, MutuallyInverse) {
  for (unsigned N = 0; N <= 6; ++N) {
    EXPECT_EQ(compose(dif_map(N), phi_map(N)), CoordMap::identity(Space::simplex(N)));
    EXPECT_EQ(compose(phi_map(N), dif_map(N)), CoordMap::identity(Space::cube(N)));
  }
}

TEST(EzSums, Shapes) {
  // the point factor Delta^0 has the single coordinate 1
  EXPECT_EQ(ez_simplicial(1, 0),
            FormalMapSum::single(CoordMap(Space::simplex(1), Space::simplex(1) * Space::simplex(0), {z(0), z(1), MultiPoly(1)})));
  for (unsigned k = 0; k <= 4; ++k) {
    auto a = ez_simplicial(k, 0), b = ez_simplicial(0, k);
    ASSERT_EQ(a.size(), 1u);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(a.terms().begin()->second, 1);
    EXPECT_EQ(b.terms().begin()->second, 1);
  }
  EXPECT_EQ(ez_simplicial(2, 2).size(), 6u);
}

TEST(EzSums, CubicalOneOne) {
  auto s = ez_cubical(1, 1);
  FormalMapSum expected(Space::cube(2), Space::cube(1) * Space::cube(1));
  expected.add(CoordMap(Space::cube(2), Space::cube(1) * Space::cube(1), {z(0), z(1)}), 1);
  expected.add(CoordMap(Space::cube(2), Space::cube(1) * Space::cube(1), {z(1), z(0)}), -1);
  EXPECT_EQ(s, expected);
}

TEST(FormalMapSum, IdentityAndBilinearity) {
  auto f = ez_simplicial(1, 1);
  EXPECT_EQ(compose_sums(FormalMapSum::identity(f.target()), f), f);
  EXPECT_EQ(compose_sums(f, FormalMapSum::identity(f.source())), f);
  auto g = 2 * f;
  auto h = simplex_boundary(2);
  EXPECT_EQ(compose_sums(f + g, h), compose_sums(f, h) + compose_sums(g, h));
  EXPECT_THROW(compose_sums(f, f), std::invalid_argument);
}

TEST(FormalMapSum, CompositionIsAssociative) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    unsigned m = rng() % 3, n = rng() % 3;
    if (m + n == 0) continue;
    auto a = product_sums(simplex_boundary(m + 1), FormalMapSum::identity(Space::simplex(n)));
    auto b = ez_simplicial(m, n);
    auto c = simplex_boundary(m + n);
    EXPECT_EQ(compose_sums(compose_sums(a, b), c), compose_sums(a, compose_sums(b, c)));
  }
}

TEST(FormalMapSum, BoundarySquaresToZero) {
  for (unsigned b = 2; b <= 6; ++b) EXPECT_TRUE(compose_sums(simplex_boundary(b), simplex_boundary(b - 1)).is_zero());
}

TEST(EzDiagram, SmallCasesByHand) {
  EXPECT_TRUE(verify_ez_diagram(1, 0).pass);
  auto r = verify_ez_diagram(1, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.details["lhs_term_count"], 2);
}

TEST(EzDiagram, AllUpToSix) {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; m + n <= 6; ++n) EXPECT_TRUE(verify_ez_diagram(m, n).pass) << m << "," << n;
}

TEST(EzDiagram, InverseCubeActionFails) {
  // reading tau* as t -> (t_{tau^-1(1)}, ...) breaks the diagram once tau^-1 != tau
  auto diagram_with_inverse = [](unsigned m, unsigned n) {
    FormalMapSum cubical(Space::cube(m + n), Space::cube(m) * Space::cube(n));
    for (const auto& tau : shuffles(m, n).elements) cubical.add(cube_action(tau.inverse(), m), tau.sign());
    auto lhs = compose_sums(FormalMapSum::single(product(phi_map(m), phi_map(n))), ez_simplicial(m, n));
    return lhs == compose_sums(cubical, FormalMapSum::single(phi_map(m + n)));
  };
  EXPECT_TRUE(diagram_with_inverse(1, 1));
  EXPECT_FALSE(diagram_with_inverse(1, 2));
  EXPECT_FALSE(diagram_with_inverse(2, 1));
  EXPECT_FALSE(diagram_with_inverse(2, 2));
}

TEST(CoLeibniz, SmallCases) {
  EXPECT_TRUE(verify_co_leibniz(1, 0).pass);
  EXPECT_TRUE(verify_co_leibniz(1, 1).pass);
  EXPECT_THROW(verify_co_leibniz(0, 0), std::invalid_argument);
}

TEST(CoLeibniz, AllUpToSix) {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; m + n <= 6; ++n)
      if (m + n) {
        EXPECT_TRUE(verify_co_leibniz(m, n).pass) << m << "," << n;
      }
}

TEST(Coassoc, SmallCases) {
  EXPECT_TRUE(verify_coassoc(1, 0, 0).pass);
  auto r = verify_coassoc(1, 1, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.details["lhs_term_count"], 6);
  EXPECT_EQ(r.details["rhs_term_count"], 6);
}

TEST(Coassoc, AllUpToSix) {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; m + n <= 6; ++n)
      for (unsigned r = 0; m + n + r <= 6; ++r) EXPECT_TRUE(verify_coassoc(m, n, r).pass) << m << n << r;
}
