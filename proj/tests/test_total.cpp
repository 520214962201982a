#include <gtest/gtest.h>

#include <random>

#include "chikit/total/constants.hpp"
#include "chikit/total/e1_page.hpp"
#include "chikit/total/free_dga.hpp"

using namespace chikit;

namespace {

// g -> h under delta^1, nothing else: a two-generator model with k = 1.
FreeModel arrow_model() {
  return FreeModel(1, {{"g", 0, {0}}, {"h", 0, {1}}}, {{}, {}}, {{{{1, BigRat(1)}}, {}}});
}

// A single generator in degree (1, 0).
FreeModel point_model() { return FreeModel(1, {{"e", 1, {0}}}, {{}}, {{{}}}); }

XPoly xpoly(std::initializer_list<long> cs) {
  XPoly p;
  for (long c : cs) p.push_back(c);
  return p;
}

std::vector<BigRat> row(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.push_back(c);
  return v;
}

using Letters = std::vector<Letter>;
Letter a(int i, bool d = false) { return {Letter::Alpha, i, d}; }
Letter b(int i, bool d = false) { return {Letter::Beta, i, d}; }

}  // namespace

TEST(FreeModel, TotalDifferentialSignOnDelta) {
  FreeModel m = arrow_model();
  BigradedElement<FreeModel> g(0);
  g.add(m, 0, 1);
  auto Dg = total_D(g, m);
  EXPECT_EQ(Dg.degree(), 1);
  EXPECT_EQ(Dg.coefficient(1), -1);
  EXPECT_EQ(Dg.terms().size(), 1u);
}

TEST(FreeModel, DegreeCheckOnAdd) {
  FreeModel m = arrow_model();
  BigradedElement<FreeModel> g(0);
  EXPECT_THROW(g.add(m, 1, 1), std::invalid_argument);
}

TEST(FreeModel, InvalidModelsAreRejected) {
  // delta lands in the wrong b-degree
  EXPECT_THROW(FreeModel(1, {{"g", 0, {0}}, {"h", 0, {2}}}, {{}, {}}, {{{{1, BigRat(1)}}, {}}}),
               std::invalid_argument);
  // d^2 != 0
  EXPECT_THROW(FreeModel(1, {{"u", 0, {0}}, {"v", 1, {0}}, {"w", 2, {0}}},
                         {{{1, BigRat(1)}}, {{2, BigRat(1)}}, {}}, {{{}, {}, {}}}),
               std::invalid_argument);
  // index length differs from k
  EXPECT_THROW(FreeModel(2, {{"g", 0, {0}}}, {{}}, {{{}}, {{}}}), std::invalid_argument);
}

TEST(BoxProduct, SignFromDegreeAndBIndex) {
  FreeModel m = point_model(), n = arrow_model();
  BigradedElement<FreeModel> e(1), h(1), g(0);
  e.add(m, 0, 1);
  h.add(n, 1, 1);
  g.add(n, 0, 1);
  EXPECT_EQ(box_product(e, m, h, n).coefficient(1), -1);
  EXPECT_EQ(box_product(e, m, g, n).coefficient(0), 1);
  // r = 0 carries no sign
  BigradedElement<FreeModel> g0(0);
  g0.add(n, 0, 1);
  EXPECT_EQ(box_product(g0, n, h, n).coefficient(0 * 2 + 1), 1);
}

TEST(FreeModel, TensorIndexingAndLeibniz) {
  FreeModel m = point_model(), n = arrow_model();
  FreeModel mn = tensor(m, n);
  ASSERT_EQ(mn.size(), 2u);
  EXPECT_EQ(mn.k(), 2u);
  EXPECT_EQ(mn.generator(1).name, "e*h");
  BigradedElement<FreeModel> e(1), g(0);
  e.add(m, 0, 1);
  g.add(n, 0, 1);
  EXPECT_TRUE(verify_leibniz(e, m, g, n, mn).pass);
}

TEST(RandomModels, AreValidAndVaried) {
  std::mt19937_64 rng(5);
  std::size_t total = 0;
  for (int i = 0; i < 20; ++i) {
    RandomModelOptions o;
    o.k = 1 + i % 3;
    FreeModel m = random_free_model(rng, o);  // construction validates
    EXPECT_EQ(m.k(), o.k);
    total += m.size();
  }
  EXPECT_GT(total, 40u);
}

TEST(RandomSuites, DSquaredVanishes) {
  RandomSuiteOptions o;
  auto rep = verify_dsq_random(o);
  EXPECT_TRUE(rep.pass);
  EXPECT_GE(rep.details["elements"].get<long>(), 200);
}

TEST(RandomSuites, LeibnizAndAssociativity) {
  RandomSuiteOptions o;
  auto l = verify_product_random(o, false);
  EXPECT_TRUE(l.pass);
  EXPECT_GE(l.details["pairs"].get<long>(), 200);
  EXPECT_EQ(l.details["parities_seen"], 4);
  auto a = verify_product_random(o, true);
  EXPECT_TRUE(a.pass);
  EXPECT_GE(a.details["triples"].get<long>(), 200);
}

TEST(RandomSuites, InjectedSignFlipsFail) {
  RandomSuiteOptions o;
  o.inject_sign_flip = true;
  EXPECT_FALSE(verify_dsq_random(o).pass);
  EXPECT_FALSE(verify_product_random(o, false).pass);
  EXPECT_FALSE(verify_product_random(o, true).pass);
}

TEST(RandomSuites, OtherSeeds) {
  for (std::uint64_t seed : {2u, 3u, 4u}) {
    RandomSuiteOptions o;
    o.seed = seed;
    o.samples = 60;
    EXPECT_TRUE(verify_dsq_random(o).pass) << seed;
    EXPECT_TRUE(verify_product_random(o, false).pass) << seed;
    EXPECT_TRUE(verify_cone_dsq_random(o).pass) << seed;
  }
}

TEST(Cone, DHatSquaredOnRandomTriples) {
  RandomSuiteOptions o;
  EXPECT_TRUE(verify_cone_dsq_random(o).pass);
}

TEST(Cone, XiInterpolates) {
  EXPECT_EQ(xi(BigRat(1), BigRat(3), BigRat(7)), 3);
  EXPECT_EQ(xi(BigRat(0), BigRat(3), BigRat(7)), 7);
  EXPECT_EQ(xi(rat(1, 2), BigRat(3), BigRat(7)), 5);
  DgaElement p = DgaElement::letter(Letter::Alpha, 1), q = DgaElement::letter(Letter::Alpha, 2);
  DgaElement mix = xi(param_t(), p, q);
  EXPECT_EQ(mix.coefficient({a(1)}), param_t());
  EXPECT_EQ(mix.coefficient({a(2)}), RatFunc(1) - param_t());
}

TEST(FreeDga, DegreesAndDifferential) {
  FreeDga dga(2, 3);
  EXPECT_EQ(dga.degree(a(1)), 2);
  EXPECT_EQ(dga.degree(a(3)), 1);
  EXPECT_EQ(dga.degree(a(3, true)), 2);
  EXPECT_EQ(dga.degree(Word{a(3), b(3)}), 3);
  // D(a3 x b1) = (-1)^3 Da3 x b1 + a3 x Db1
  DgaElement d = dga.D(DgaElement::word({a(3), b(1)}));
  EXPECT_EQ(d.coefficient({a(3, true), b(1)}), RatFunc(-1));
  EXPECT_EQ(d.coefficient({a(3), b(1, true)}), RatFunc(1));
  EXPECT_TRUE(dga.D(dga.D(DgaElement::word({a(1), b(3), a(2)}))).is_zero());
}

TEST(FreeDga, ClosedNormalForm) {
  FreeDga dga(1, 1, true);
  DgaElement n = dga.normalize(DgaElement::letter(Letter::Alpha, 2));
  EXPECT_EQ(n, DgaElement::letter(Letter::Alpha, 1) + DgaElement::letter(Letter::Alpha, 3, true));
  EXPECT_TRUE(dga.D(DgaElement::letter(Letter::Alpha, 1)).is_zero());
}

TEST(Pairing, WordsAndCoefficients) {
  for (int s : {0, 1}) {
    DgaTriple A = generic_triple(Letter::Alpha, 2), B = generic_triple(Letter::Beta, s);
    RatFunc t = param_t();
    DgaElement p = pairing_P(t, A, B);
    ASSERT_EQ(p.terms().size(), 4u);
    RatFunc sg(minus_one_pow(s));
    EXPECT_EQ(p.coefficient({a(3), b(1)}), sg * t);
    EXPECT_EQ(p.coefficient({a(3), b(2)}), sg * (RatFunc(1) - t));
    EXPECT_EQ(p.coefficient({a(1), b(3)}), RatFunc(1) - t);
    EXPECT_EQ(p.coefficient({a(2), b(3)}), t);
  }
  DgaTriple zero{{}, {}, {}, 0};
  EXPECT_TRUE(pairing_P(param_t(), generic_triple(Letter::Alpha, 1), zero).is_zero());
}

TEST(Pairing, ClaimHoldsForAllParities) {
  for (int r : {0, 1, 2, 3})
    for (int s : {0, 1, 2, 3}) {
      EXPECT_TRUE(cone_claim_defect(r, s, PairingVariant::Proof).is_zero()) << r << "," << s;
      EXPECT_TRUE(verify_cone_claim(r, s).pass);
    }
}

TEST(Pairing, AlternativeReadingsFail) {
  for (int r : {0, 1})
    for (int s : {0, 1}) {
      EXPECT_FALSE(cone_claim_defect(r, s, PairingVariant::NoSign).is_zero()) << r << "," << s;
      EXPECT_FALSE(cone_claim_defect(r, s, PairingVariant::Unsubscripted).is_zero()) << r << "," << s;
    }
  EXPECT_TRUE(verify_cone_claim_negative().pass);
}

TEST(Pairing, HatBoxIsAChainMap) {
  for (int r : {0, 1})
    for (int s : {0, 1}) EXPECT_TRUE(verify_hat_box_chain_map(r, s).pass) << r << "," << s;
}

TEST(Pairing, HomotopyBetweenParameters) {
  for (int r : {0, 1, 2})
    for (int s : {0, 1, 2}) {
      auto rep = verify_homotopy_t(r, s);
      EXPECT_TRUE(rep.pass) << rep.to_json().dump();
      EXPECT_EQ(rep.details["bounds"], true);
    }
}

TEST(E1Page, DifferentialExamples) {
  EXPECT_EQ(e1_delta(2, 1), xpoly({0, -1, 1, 0}));
  EXPECT_EQ(e1_delta(2, 0), xpoly({0, 0, 0, 0}));
  EXPECT_EQ(e1_delta(3, 0), xpoly({-1, 0, 0, 0, 0}));
  EXPECT_THROW(e1_delta(1, 2), std::invalid_argument);
}

TEST(E1Page, KernelsInLowDegree) {
  EXPECT_EQ(e1_row(2).kernel, (linalg::Matrix<BigRat>{row({1, 0, 0}), row({0, 0, 1})}));
  EXPECT_EQ(e1_row(3).kernel, (linalg::Matrix<BigRat>{row({0, 1, -1, 0})}));
  EXPECT_EQ(e1_row(4).kernel,
            (linalg::Matrix<BigRat>{row({1, 0, 0, 0, 0}), row({0, 0, 1, 0, 0}), row({0, 0, 0, 0, 1})}));
}

TEST(E1Page, DimensionsAndExactnessUpToTwenty) {
  for (unsigned p = 0; p <= 20; ++p) {
    PageRow r = e1_row(p);
    EXPECT_EQ(r.kernel.size(), p % 2 == 0 ? p / 2 + 1 : p / 2) << p;
    EXPECT_TRUE(row_ok(r)) << p;
    if (p >= 1) {
      EXPECT_EQ(r.image, r.kernel) << p;
    }
  }
  auto rep = e1_page(20);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.details["cohomology_dims"][0], 1);
  EXPECT_THROW(e1_page(0), std::invalid_argument);
}

TEST(E1Page, AgreesWithTotalDifferential) {
  for (unsigned p = 0; p <= 8; ++p) EXPECT_TRUE(e1_row(p).matches_total_D) << p;
}

TEST(Constants, SignsAndPowers) {
  EXPECT_EQ(c_const(3, 1), (PiConstant{1, 3}));
  EXPECT_EQ(c_const(0, 2), (PiConstant{-1, 0}));
  EXPECT_EQ(c_const(2, 2), (c_const(1, 1) * c_const(1, 1)).signed_by(-1));
  EXPECT_EQ(theta_normalization(1), (PiConstant{-1, -1}));
  EXPECT_EQ(c_const(2, 3).to_string(), "-(2pi i)^2");
}

TEST(Constants, RecursionsUpToTwelve) {
  auto rep = verify_constants(6, 12);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.details["failures"], 0);
}
