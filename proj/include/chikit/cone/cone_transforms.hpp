/**
 * @file cone_transforms.hpp
 * @brief Lattice-point transforms of prefix-sum cones, their shuffle subdivision and an enumeration oracle.
 */
#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "chikit/exact/ratfunc.hpp"
#include "chikit/hopf/character.hpp"
#include "chikit/report.hpp"
#include "chikit/shuffle/permutation.hpp"

namespace chikit {

/// {t : t_{p(1)} >= 0, t_{p(1)} + t_{p(2)} >= 0, ...} with p = perm^-1 (identity when perm is empty).
struct PrefixCone {
  unsigned N = 0;
  std::optional<Permutation> perm;

  PrefixCone() = default;
  explicit PrefixCone(unsigned n) : N(n) {}
  PrefixCone(unsigned n, Permutation tau) : N(n), perm(std::move(tau)) {
    if (perm->size() != N) throw std::invalid_argument("PrefixCone: permutation size differs from N");
  }

  /// p(1), ..., p(N).
  std::vector<unsigned> order() const {
    if (!perm) return Permutation::identity(N).word();
    return perm->inverse().word();
  }

  bool contains(const std::vector<long>& t) const {
    if (t.size() != N) throw std::invalid_argument("PrefixCone::contains: wrong dimension");
    long s = 0;
    for (unsigned k : order()) {
      s += t[k - 1];
      if (s < 0) return false;
    }
    return true;
  }
};

struct ConeTransform {
  PrefixCone cone;
  RatFunc closed_form;
};

/**
 * @brief Phi(C) from the geometric series over the prefix-sum coordinates.
 *
 * With a = p(1..N) the transform is prod_{k<N} 1/(1 - x_{a_k}/x_{a_{k+1}}) * 1/(1 - x_{a_N}),
 * x_i renamed to x_{i+shift}.
 */
inline RatFunc transform_closed_form(const PrefixCone& c, unsigned shift = 0) {
  auto a = c.order();
  RatFunc r(1);
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    MultiPoly next = MultiPoly::variable(x_var(a[k + 1] + shift));
    r *= RatFunc::fraction(next, next - MultiPoly::variable(x_var(a[k] + shift)));
  }
  if (!a.empty()) r *= RatFunc::fraction(1, MultiPoly(1) - MultiPoly::variable(x_var(a.back() + shift)));
  return r;
}

inline ConeTransform cone_transform(const PrefixCone& c) { return {c, transform_closed_form(c)}; }

/// Phi(C_N) = (x_1...x_N) chi_N(x_1..x_N).
inline VerificationReport verify_bridge(unsigned N) {
  VerificationReport rep("cone.bridge", Json{{"N", N}});
  ReportTimer timer(rep);
  MultiPoly mono(1);
  std::vector<Var> args;
  for (unsigned i = 1; i <= N; ++i) mono *= MultiPoly::variable(x_var(i)), args.push_back(x_var(i));
  RatFunc lhs = transform_closed_form(PrefixCone(N));
  RatFunc rhs = RatFunc(mono) * chi(N, args).value;
  rep.pass = lhs == rhs;
  rep.details = {{"closed_form", N <= 3 ? lhs.to_string() : std::string("omitted")}};
  return rep;
}

/// Phi(C_m)(x_1..x_m) Phi(C_n)(x_{m+1}..) = sum over Sh(m,n) of Phi(C^tau_{m+n}).
inline VerificationReport verify_brion(unsigned m, unsigned n) {
  VerificationReport rep("cone.brion", Json{{"m", m}, {"n", n}});
  ReportTimer timer(rep);
  RatFunc lhs = transform_closed_form(PrefixCone(m)) * transform_closed_form(PrefixCone(n), m);
  std::vector<std::pair<std::vector<unsigned>, Permutation>> cones;
  for (const auto& tau : shuffles(m, n).elements) cones.emplace_back(tau.inverse().word(), tau);
  std::sort(cones.begin(), cones.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  RatFunc rhs;
  for (const auto& [key, tau] : cones) rhs += transform_closed_form(PrefixCone(m + n, tau));
  rep.pass = lhs == rhs;
  rep.details = {{"lhs_term_count", 1}, {"rhs_term_count", cones.size()}};
  return rep;
}

/// Finite Laurent polynomial with integer coefficients, keyed by exponent vectors.
class LaurentPoly {
 public:
  using Exps = std::vector<long>;

  explicit LaurentPoly(unsigned nvars = 0) : nvars_(nvars) {}

  static LaurentPoly monomial(const Exps& e, const BigInt& c = 1) {
    LaurentPoly p(static_cast<unsigned>(e.size()));
    p.add(e, c);
    return p;
  }

  void add(const Exps& e, const BigInt& c) {
    if (e.size() != nvars_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
    auto [it, fresh] = terms_.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        p.add(e, ca * cb);
      }
    return p;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  const std::map<Exps, BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// As a rational function in x_1..x_n: polynomial over a monomial.
  RatFunc to_ratfunc() const {
    if (terms_.empty()) return {};
    Exps lo(nvars_, 0);
    for (const auto& [e, c] : terms_)
      for (unsigned i = 0; i < nvars_; ++i) lo[i] = std::min(lo[i], e[i]);
    std::vector<MultiPoly::Term> ts;
    for (const auto& [e, c] : terms_) {
      std::vector<std::pair<Var, Exp>> pw;
      for (unsigned i = 0; i < nvars_; ++i) pw.emplace_back(x_var(i + 1), static_cast<Exp>(e[i] - lo[i]));
      ts.push_back({Monomial::from_pairs(std::move(pw)), BigRat(c)});
    }
    std::vector<std::pair<Var, Exp>> dp;
    for (unsigned i = 0; i < nvars_; ++i) dp.emplace_back(x_var(i + 1), static_cast<Exp>(-lo[i]));
    return RatFunc::fraction(MultiPoly::from_terms(std::move(ts)), MultiPoly::term(Monomial::from_pairs(dp), 1));
  }

 private:
  unsigned nvars_;
  std::map<Exps, BigInt> terms_;
};

struct LatticePoint {
  std::vector<long> J;
  std::vector<long> I;
};

struct LatticeOracleResult {
  unsigned N = 0;
  long B = 0;
  std::vector<LatticePoint> points;
  bool all_in_cone = false;
  bool sum_matches_product = false;
  bool matches_closed_form = false;
  LaurentPoly sum;
};

/**
 * @brief Enumerates J in [0,B]^N, maps to I_k = J_k - J_{k-1} and compares sums.
 *
 * The enumerated sum of x^I must equal prod_k sum_{j<=B} y_k^j with
 * y_k = x_k/x_{k+1} (k < N) and y_N = x_N, and must equal the closed form
 * times prod_k (1 - y_k^{B+1}).
 */
inline LatticeOracleResult enumerate_oracle(unsigned N, long B) {
  if (B < 0) throw std::invalid_argument("enumerate_oracle: B must be >= 0");
  LatticeOracleResult res;
  res.N = N;
  res.B = B;
  res.sum = LaurentPoly(N);
  PrefixCone cone(N);
  res.all_in_cone = true;
  std::vector<long> J(N, 0);
  while (true) {
    std::vector<long> I(N);
    for (unsigned k = 0; k < N; ++k) I[k] = J[k] - (k ? J[k - 1] : 0);
    if (!cone.contains(I)) res.all_in_cone = false;
    res.sum.add(I, 1);
    res.points.push_back({J, I});
    unsigned k = 0;
    while (k < N && J[k] == B) J[k++] = 0;
    if (k == N) break;
    ++J[k];
  }
  auto y = [&](unsigned k) {
    std::vector<long> e(N, 0);
    e[k] = 1;
    if (k + 1 < N) e[k + 1] = -1;
    return e;
  };
  LaurentPoly prod = LaurentPoly::monomial(std::vector<long>(N, 0));
  RatFunc factor_correction(1);
  for (unsigned k = 0; k < N; ++k) {
    LaurentPoly geo(N);
    std::vector<long> e(N, 0), yk = y(k);
    for (long j = 0; j <= B; ++j) {
      geo.add(e, 1);
      for (unsigned i = 0; i < N; ++i) e[i] += yk[i];
    }
    prod = prod * geo;
    LaurentPoly one_minus = LaurentPoly::monomial(std::vector<long>(N, 0));
    one_minus.add(e, -1);  // e = (B+1) y_k here
    factor_correction *= one_minus.to_ratfunc();
  }
  res.sum_matches_product = res.sum == prod;
  res.matches_closed_form = res.sum.to_ratfunc() == transform_closed_form(cone) * factor_correction;
  return res;
}

inline VerificationReport verify_lattice(unsigned N, long B) {
  VerificationReport rep("cone.lattice", Json{{"N", N}, {"B", B}});
  ReportTimer timer(rep);
  auto res = enumerate_oracle(N, B);
  rep.pass = res.all_in_cone && res.sum_matches_product && res.matches_closed_form;
  rep.details = {{"points", res.points.size()},
                 {"all_in_cone", res.all_in_cone},
                 {"sum_matches_product", res.sum_matches_product},
                 {"matches_closed_form", res.matches_closed_form}};
  return rep;
}

inline void write_lattice_csv(std::ostream& os, const LatticeOracleResult& res) {
  auto join = [](const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
  };
  for (const auto& p : res.points) os << res.N << ',' << res.B << ',' << join(p.J) << ',' << join(p.I) << '\n';
}

}  // namespace chikit
