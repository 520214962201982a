/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over the rationals.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chikit/exact/bigrat.hpp"
#include "chikit/exact/monomial.hpp"

namespace chikit {

using VarNamer = std::function<std::string(Var)>;

/**
 * @brief Polynomial as a vector of terms sorted by descending graded-lex monomial.
 *
 * Zero coefficients are never stored, so structural equality is value equality.
 */
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigRat coef;
  };

  MultiPoly() = default;
  MultiPoly(const BigRat& c) {  // NOLINT: implicit constant embedding is intended
    if (c != 0) terms_.push_back({Monomial{}, c});
  }
  MultiPoly(long c) : MultiPoly(BigRat(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(BigRat(c)) {}   // NOLINT

  static MultiPoly variable(Var v) { return term(Monomial::variable(v), 1); }

  static MultiPoly term(Monomial m, const BigRat& c) {
    MultiPoly p;
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Sorts and merges arbitrary terms.
  static MultiPoly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
    MultiPoly p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coef += t.coef;
      else
        p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }

  BigRat constant_value() const {
    if (!is_constant()) throw std::logic_error("MultiPoly::constant_value on non-constant");
    return terms_.empty() ? BigRat(0) : terms_[0].coef;
  }
  BigRat constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return 0;
  }

  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly::leading on zero");
    return terms_.front();
  }

  Exp total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  Exp degree_in(Var v) const {
    Exp d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
  }

  std::vector<Var> variables() const {
    std::set<Var> vs;
    for (const auto& t : terms_)
      for (const auto& pw : t.mono.powers()) vs.insert(pw.first);
    return {vs.begin(), vs.end()};
  }

  bool is_linear() const { return !terms_.empty() && total_degree() == 1; }

  MultiPoly operator-() const {
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_[0].coef);
    if (b.is_constant()) return a.scaled(b.terms_[0].coef);
    if (a.size() == 1 || b.size() == 1) {
      const MultiPoly& one = a.size() == 1 ? a : b;
      const MultiPoly& other = a.size() == 1 ? b : a;
      MultiPoly p;
      p.terms_.reserve(other.size());
      // multiplying by a monomial preserves the order
      for (const auto& t : other.terms_)
        p.terms_.push_back({t.mono * one.terms_[0].mono, t.coef * one.terms_[0].coef});
      return p;
    }
    std::unordered_map<Monomial, BigRat, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto [it, fresh] = acc.try_emplace(s.mono * t.mono);
        it->second += s.coef * t.coef;
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) ts.push_back({m, std::move(c)});
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return compare(x.mono, y.mono) > 0; });
    MultiPoly p;
    p.terms_ = std::move(ts);
    return p;
  }

  MultiPoly scaled(const BigRat& c) const {
    if (c == 0) return {};
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const {
    MultiPoly r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Total order for use as a map key (not an algebraic order).
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare(a.terms_[i].mono, b.terms_[i].mono);
      if (c != 0) return c < 0;
      if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef < b.terms_[i].coef;
    }
    return a.size() < b.size();
  }

  MultiPoly derivative(Var v) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      Exp e = t.mono.exponent(v);
      if (e == 0) continue;
      std::vector<std::pair<Var, Exp>> pw;
      for (const auto& p : t.mono.powers())
        pw.emplace_back(p.first, p.first == v ? p.second - 1 : p.second);
      ts.push_back({Monomial::from_pairs(std::move(pw)), t.coef * e});
    }
    return from_terms(std::move(ts));
  }

  /// Replaces each mapped variable by a polynomial; unmapped variables stay.
  MultiPoly substitute(const std::map<Var, MultiPoly>& s) const {
    MultiPoly result;
    std::map<std::pair<Var, Exp>, MultiPoly> powers;
    auto power_of = [&](Var v, Exp e) -> const MultiPoly& {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, s.at(v).pow(e)).first;
      return it->second;
    };
    std::vector<Term> kept;
    for (const auto& t : terms_) {
      std::vector<std::pair<Var, Exp>> stay;
      MultiPoly factor(t.coef);
      for (const auto& [v, e] : t.mono.powers()) {
        if (s.count(v))
          factor *= power_of(v, e);
        else
          stay.emplace_back(v, e);
      }
      result += factor * term(Monomial::from_pairs(std::move(stay)), 1);
    }
    return result;
  }

  /// Variable renaming; must be injective on the occurring variables.
  MultiPoly relabel(const std::map<Var, Var>& r) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<std::pair<Var, Exp>> pw;
      for (const auto& [v, e] : t.mono.powers()) {
        auto it = r.find(v);
        pw.emplace_back(it == r.end() ? v : it->second, e);
      }
      ts.push_back({Monomial::from_pairs(std::move(pw)), t.coef});
    }
    return from_terms(std::move(ts));
  }

  /// Substitutes rational values; unassigned variables stay symbolic.
  MultiPoly evaluate(const std::map<Var, BigRat>& point) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      BigRat c = t.coef;
      std::vector<std::pair<Var, Exp>> stay;
      for (const auto& [v, e] : t.mono.powers()) {
        auto it = point.find(v);
        if (it == point.end()) {
          stay.emplace_back(v, e);
        } else {
          BigRat pw = 1;
          for (Exp k = 0; k < e; ++k) pw *= it->second;
          c *= pw;
        }
      }
      ts.push_back({Monomial::from_pairs(std::move(stay)), c});
    }
    return from_terms(std::move(ts));
  }

  /// Coefficients with respect to v: p = sum_k c_k v^k with c_k free of v.
  std::map<Exp, MultiPoly> coefficients_in(Var v) const {
    std::map<Exp, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coef});
    std::map<Exp, MultiPoly> out;
    for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
    return out;
  }

  std::string to_string(const VarNamer& name = default_var_name) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      BigRat c = t.coef;
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      c = abs(c);
      if (t.mono.is_one()) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += t.mono.to_string(name);
      }
      first = false;
    }
    return s;
  }

 private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly p;
    p.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      int c = (i == a.terms_.end()) ? -1 : (j == b.terms_.end()) ? 1 : compare(i->mono, j->mono);
      if (c > 0) {
        p.terms_.push_back(*i++);
      } else if (c < 0) {
        p.terms_.push_back({j->mono, subtract ? BigRat(-j->coef) : j->coef});
        ++j;
      } else {
        BigRat s = subtract ? BigRat(i->coef - j->coef) : BigRat(i->coef + j->coef);
        if (s != 0) p.terms_.push_back({i->mono, std::move(s)});
        ++i, ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

/**
 * @brief Exact quotient p / g, or nullopt when g does not divide p.
 *
 * Uses the division algorithm under the graded-lex order: if g | p then every
 * intermediate leading term is divisible by lt(g).
 */
inline std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& g) {
  if (g.is_zero()) throw DivisionByZero("divide_exact: zero divisor");
  if (p.is_zero()) return MultiPoly{};
  if (g.is_constant()) return p.scaled(1 / g.constant_value());
  const auto& lt = g.leading();
  if (p.total_degree() < g.total_degree()) return std::nullopt;
  std::map<Monomial, BigRat, DescendingOrder> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coef);
  std::vector<MultiPoly::Term> quot;
  BigRat inv_lc = 1 / lt.coef;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lt.mono.divides(top->first)) return std::nullopt;
    Monomial qm = lt.mono.cofactor_in(top->first);
    BigRat qc = top->second * inv_lc;
    rem.erase(top);
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      const auto& gt = g.terms()[k];
      Monomial m = qm * gt.mono;
      auto [it, fresh] = rem.try_emplace(std::move(m), 0);
      it->second -= qc * gt.coef;
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back({std::move(qm), std::move(qc)});
  }
  return MultiPoly::from_terms(std::move(quot));
}

}  // namespace chikit
