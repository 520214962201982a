/**
 * @file bigraded.hpp
 * @brief Elements of the total complex, D, the exterior product and cone triples.
 */
#pragma once

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chikit/report.hpp"
#include "chikit/total/constants.hpp"
#include "chikit/total/free_model.hpp"

namespace chikit {

/**
 * @brief Finite sum of model elements of total degree r.
 *
 * A generator g of bidegree (a, b) stands for the coefficient of x^b, so the
 * whole element is the truncated series sum_b alpha_b x^b.
 */
template <class Model>
class BigradedElement {
 public:
  using Gen = typename Model::Gen;

  explicit BigradedElement(int r = 0) : r_(r) {}

  int degree() const { return r_; }
  const ModelVector<Gen>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigRat coefficient(const Gen& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  /// Adds c*g; g must have total degree r in the model.
  void add(const Model& m, const Gen& g, const BigRat& c) {
    if (m.total_degree(g) != r_)
      throw std::invalid_argument("BigradedElement: generator of total degree " + std::to_string(m.total_degree(g)) +
                                  " in an element of degree " + std::to_string(r_));
    add_unchecked(g, c);
  }

  void add_unchecked(const Gen& g, const BigRat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(g, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  friend BigradedElement operator+(BigradedElement a, const BigradedElement& b) {
    if (a.r_ != b.r_ && !a.is_zero() && !b.is_zero()) throw std::invalid_argument("BigradedElement: degree mismatch");
    if (a.is_zero()) a.r_ = b.r_;
    for (const auto& [g, c] : b.terms_) a.add_unchecked(g, c);
    return a;
  }
  friend BigradedElement operator*(const BigRat& s, BigradedElement a) {
    if (s == 0) return BigradedElement(a.r_);
    for (auto& [g, c] : a.terms_) c *= s;
    return a;
  }
  friend BigradedElement operator-(const BigradedElement& a, const BigradedElement& b) {
    return a + (BigRat(-1) * b);
  }
  friend bool operator==(const BigradedElement& a, const BigradedElement& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BigradedElement& a, const BigradedElement& b) { return !(a == b); }

 private:
  int r_;
  ModelVector<Gen> terms_;
};

/// d alpha, componentwise.
template <class Model>
BigradedElement<Model> d_part(const BigradedElement<Model>& alpha, const Model& m) {
  BigradedElement<Model> out(alpha.degree() + 1);
  for (const auto& [g, c] : alpha.terms())
    for (const auto& [h, v] : m.d(g)) out.add_unchecked(h, c * v);
  return out;
}

/// delta-hat alpha: the component at b picks up (-1)^{b_j + ... + b_k} delta^j alpha_{b - e_j}.
template <class Model>
BigradedElement<Model> delta_hat(const BigradedElement<Model>& alpha, const Model& m) {
  BigradedElement<Model> out(alpha.degree() + 1);
  for (const auto& [g, c] : alpha.terms())
    for (unsigned j = 1; j <= m.k(); ++j)
      for (const auto& [h, v] : m.delta(j, g)) {
        BigRat s = tail_sum(m.b_degree(h), j) % 2 ? -1 : 1;
        out.add_unchecked(h, s * c * v);
      }
  return out;
}

/// D = d + (-1)^r delta-hat.
template <class Model>
BigradedElement<Model> total_D(const BigradedElement<Model>& alpha, const Model& m) {
  BigradedElement<Model> dh = delta_hat(alpha, m);
  return d_part(alpha, m) + BigRat(minus_one_pow(alpha.degree())) * dh;
}

/// alpha x beta over tensor(M, N): the (a, b) component gets (-1)^{r |b|}.
inline BigradedElement<FreeModel> box_product(const BigradedElement<FreeModel>& alpha, const FreeModel&,
                                              const BigradedElement<FreeModel>& beta, const FreeModel& n) {
  BigradedElement<FreeModel> out(alpha.degree() + beta.degree());
  for (const auto& [g, c] : alpha.terms())
    for (const auto& [h, v] : beta.terms()) {
      long e = static_cast<long>(alpha.degree()) * norm(n.b_degree(h));
      out.add_unchecked(g * n.size() + h, BigRat(minus_one_pow(e)) * c * v);
    }
  return out;
}

/// Generators of a given total degree.
template <class Model>
std::vector<typename Model::Gen> generators_of_degree(const Model& m, int r) {
  std::vector<typename Model::Gen> out;
  for (typename Model::Gen g = 0; g < m.size(); ++g)
    if (m.total_degree(g) == r) out.push_back(g);
  return out;
}

/// Random element with small integer coefficients in a degree that the model populates.
inline BigradedElement<FreeModel> random_element(std::mt19937_64& rng, const FreeModel& m) {
  std::set<int> degrees;
  for (FreeModel::Gen g = 0; g < m.size(); ++g) degrees.insert(m.total_degree(g));
  std::vector<int> ds(degrees.begin(), degrees.end());
  int r = ds.at(std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng));
  BigradedElement<FreeModel> a(r);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (auto g : generators_of_degree(m, r)) a.add(m, g, coef(rng));
  if (a.is_zero()) a.add(m, generators_of_degree(m, r).front(), 1);
  return a;
}

inline Json element_json(const BigradedElement<FreeModel>& a, const FreeModel& m) {
  Json terms = Json::array();
  for (const auto& [g, c] : a.terms()) terms.push_back({m.generator(g).name, to_string(c)});
  return Json{{"degree", a.degree()}, {"terms", terms}};
}

/// D(alpha x beta) = (-1)^s (D alpha) x beta + alpha x (D beta), s = deg beta.
inline VerificationReport verify_leibniz(const BigradedElement<FreeModel>& alpha, const FreeModel& m,
                                         const BigradedElement<FreeModel>& beta, const FreeModel& n,
                                         const FreeModel& mn) {
  VerificationReport rep("total.leibniz", Json{{"r", alpha.degree()}, {"s", beta.degree()}});
  ReportTimer timer(rep);
  auto lhs = total_D(box_product(alpha, m, beta, n), mn);
  auto rhs = BigRat(minus_one_pow(beta.degree())) * box_product(total_D(alpha, m), m, beta, n) +
             box_product(alpha, m, total_D(beta, n), n);
  rep.pass = lhs == rhs;
  rep.details = {{"lhs_term_count", lhs.terms().size()}, {"rhs_term_count", rhs.terms().size()}};
  return rep;
}

struct RandomSuiteOptions {
  std::uint64_t seed = 1;
  unsigned models = 20;
  unsigned samples = 200;
  bool inject_sign_flip = false;
};

inline RandomModelOptions small_model_options(std::mt19937_64& rng) {
  RandomModelOptions o;
  o.k = std::uniform_int_distribution<unsigned>(1, 2)(rng);
  o.max_cells = 3;
  o.max_b = 1;
  return o;
}

/// D^2 = 0, delta-hat^2 = 0 and d delta-hat = delta-hat d on random elements of random models.
inline VerificationReport verify_dsq_random(const RandomSuiteOptions& opt) {
  VerificationReport rep("total.dsq", Json{{"seed", opt.seed}, {"models", opt.models}, {"samples", opt.samples}});
  ReportTimer timer(rep);
  std::mt19937_64 rng(opt.seed);
  long failures = 0, checked = 0, generators = 0;
  unsigned per_model = (opt.samples + opt.models - 1) / std::max(1u, opt.models);
  for (unsigned mi = 0; mi < opt.models; ++mi) {
    RandomModelOptions mo;
    mo.k = 1 + mi % 3;
    FreeModel m = random_free_model(rng, mo);
    generators += static_cast<long>(m.size());
    for (unsigned s = 0; s < per_model; ++s, ++checked) {
      auto a = random_element(rng, m);
      auto dd = total_D(total_D(a, m), m);
      if (opt.inject_sign_flip) dd = total_D(d_part(a, m) - BigRat(minus_one_pow(a.degree())) * delta_hat(a, m), m);
      bool ok = dd.is_zero() && delta_hat(delta_hat(a, m), m).is_zero() &&
                d_part(delta_hat(a, m), m) == delta_hat(d_part(a, m), m);
      if (!ok) ++failures;
    }
  }
  rep.pass = failures == 0;
  rep.details = {{"elements", checked}, {"failures", failures}, {"total_generators", generators}};
  return rep;
}

/// Leibniz and associativity of the exterior product over random model pairs and triples.
inline VerificationReport verify_product_random(const RandomSuiteOptions& opt, bool assoc) {
  VerificationReport rep(assoc ? "total.assoc" : "total.leibniz",
                         Json{{"seed", opt.seed}, {"models", opt.models}, {"samples", opt.samples}});
  ReportTimer timer(rep);
  std::mt19937_64 rng(opt.seed + (assoc ? 7 : 3));
  long failures = 0, checked = 0;
  std::set<std::pair<int, int>> parities;
  unsigned per_model = (opt.samples + opt.models - 1) / std::max(1u, opt.models);
  for (unsigned mi = 0; mi < opt.models; ++mi) {
    FreeModel m = random_free_model(rng, small_model_options(rng));
    FreeModel n = random_free_model(rng, small_model_options(rng));
    FreeModel mn = tensor(m, n);
    if (!assoc) {
      for (unsigned s = 0; s < per_model; ++s, ++checked) {
        auto a = random_element(rng, m);
        auto b = random_element(rng, n);
        parities.insert({(a.degree() % 2 + 2) % 2, (b.degree() % 2 + 2) % 2});
        auto lhs = total_D(box_product(a, m, b, n), mn);
        BigRat sign = minus_one_pow(opt.inject_sign_flip ? b.degree() + 1 : b.degree());
        auto rhs = sign * box_product(total_D(a, m), m, b, n) + box_product(a, m, total_D(b, n), n);
        if (lhs != rhs) ++failures;
      }
    } else {
      FreeModel l = random_free_model(rng, small_model_options(rng));
      FreeModel mn_l = tensor(mn, l);
      FreeModel n_l = tensor(n, l);
      for (unsigned s = 0; s < per_model; ++s, ++checked) {
        auto a = random_element(rng, m);
        auto b = random_element(rng, n);
        auto c = random_element(rng, l);
        auto left = box_product(box_product(a, m, b, n), mn, c, l);
        auto right = box_product(a, m, box_product(b, n, c, l), n_l);
        if (opt.inject_sign_flip) right = BigRat(-1) * right;
        if (left != right) ++failures;
      }
    }
  }
  rep.pass = failures == 0;
  rep.details = {{assoc ? "triples" : "pairs", checked}, {"failures", failures}};
  if (!assoc) rep.details["parities_seen"] = parities.size();
  return rep;
}

/// (alpha_1, alpha_2, alpha_3) with deg alpha_3 = deg alpha_1 - 1.
template <class E>
struct ConeTriple {
  E a1, a2, a3;
};

/// (D a1, D a2, a2 - a1 - D a3) for any element type with an applicable D.
template <class E, class DFn>
ConeTriple<E> cone_D(const ConeTriple<E>& A, DFn D) {
  return {D(A.a1), D(A.a2), A.a2 - A.a1 - D(A.a3)};
}

/// t a + (1 - t) a'.
template <class S, class E>
E xi(const S& t, const E& a, const E& a2) {
  return t * a + (S(1) - t) * a2;
}

/// Cone D-hat squared on random triples of random models.
inline VerificationReport verify_cone_dsq_random(const RandomSuiteOptions& opt) {
  VerificationReport rep("total.cone_dsq", Json{{"seed", opt.seed}, {"models", opt.models}, {"samples", opt.samples}});
  ReportTimer timer(rep);
  std::mt19937_64 rng(opt.seed + 11);
  long failures = 0, checked = 0, fundamental = 0;
  using E = BigradedElement<FreeModel>;
  unsigned per_model = (opt.samples + opt.models - 1) / std::max(1u, opt.models);
  for (unsigned mi = 0; mi < opt.models; ++mi) {
    FreeModel m = random_free_model(rng, small_model_options(rng));
    auto D = [&](const E& x) { return total_D(x, m); };
    for (unsigned s = 0; s < per_model; ++s, ++checked) {
      E a1 = random_element(rng, m);
      int r = a1.degree();
      auto pick = [&](int deg) {
        auto gens = generators_of_degree(m, deg);
        E e(deg);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (auto g : gens) e.add(m, g, coef(rng));
        return e;
      };
      ConeTriple<E> A{a1, pick(r), pick(r - 1)};
      auto DD = cone_D(cone_D(A, D), D);
      if (!(DD.a1.is_zero() && DD.a2.is_zero() && DD.a3.is_zero())) ++failures;
      // fundamental-triple shape: cycles a1, a2 with a2 - a1 = D a3
      E y = pick(r - 1);
      ConeTriple<E> F{D(A.a3), D(A.a3) + D(y), y};
      auto DF = cone_D(F, D);
      if (!(DF.a1.is_zero() && DF.a2.is_zero() && DF.a3.is_zero())) ++failures;
      ++fundamental;
    }
  }
  rep.pass = failures == 0;
  rep.details = {{"triples", checked}, {"fundamental_triples", fundamental}, {"failures", failures}};
  return rep;
}

}  // namespace chikit
