/**
 * @file diff_form.hpp
 * @brief Homogeneous differential forms with rational-function coefficients.
 */
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chikit/exact/ratfunc.hpp"

namespace chikit {

/// Affine change of coordinates: variable -> polynomial in the source variables.
struct Substitution {
  std::map<Var, MultiPoly> map;
};

/**
 * @brief sum_I c_I dv_{i1} ^ ... ^ dv_{ik} with I strictly increasing.
 */
class DiffForm {
 public:
  using Key = std::vector<Var>;

  explicit DiffForm(unsigned degree = 0) : degree_(degree) {}

  static DiffForm scalar(const RatFunc& c) {
    DiffForm f(0);
    f.add({}, c);
    return f;
  }

  static DiffForm differential(Var v) {
    DiffForm f(1);
    f.add({v}, RatFunc(1));
    return f;
  }

  /// c dv_{i1} ^ ... ^ dv_{ik} for any index order; repeated indices give 0.
  static DiffForm monomial(const RatFunc& c, const std::vector<Var>& idx) {
    DiffForm f = scalar(c);
    for (Var v : idx) f = wedge(f, differential(v));
    return f;
  }

  unsigned degree() const { return degree_; }
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  RatFunc coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc{} : it->second;
  }

  void add(const Key& k, const RatFunc& c) {
    if (k.size() != degree_) throw std::invalid_argument("DiffForm: term degree differs from form degree");
    for (std::size_t i = 1; i < k.size(); ++i)
      if (k[i - 1] >= k[i]) throw std::invalid_argument("DiffForm: key must be strictly increasing");
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend DiffForm operator+(DiffForm a, const DiffForm& b) {
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero()) throw std::invalid_argument("DiffForm: degree mismatch");
    if (a.is_zero()) a.degree_ = b.degree_;
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (RatFunc(-1) * b); }

  friend DiffForm operator*(const RatFunc& s, DiffForm f) {
    if (s.is_zero()) return DiffForm(f.degree_);
    for (auto& [k, c] : f.terms_) c = s * c;
    return f;
  }

  friend DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    DiffForm out(a.degree_ + b.degree_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        std::set<Var> joined(ka.begin(), ka.end());
        bool overlap = false;
        for (Var v : kb) overlap |= !joined.insert(v).second;
        if (overlap) continue;
        // sign of sorting ka ++ kb: one transposition per pair (i in ka, j in kb) with i > j
        long inversions = 0;
        for (Var i : ka)
          for (Var j : kb)
            if (i > j) ++inversions;
        RatFunc c = ca * cb;
        out.add(Key(joined.begin(), joined.end()), inversions % 2 ? -c : c);
      }
    return out;
  }

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

  std::string to_string(const VarNamer& name = default_var_name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + c.to_string(name) + "]";
      for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "^d" : " d") + name(k[i]);
    }
    return s;
  }

 private:
  unsigned degree_;
  std::map<Key, RatFunc> terms_;
};

/// d p = sum_v dp/dv dv for a polynomial p.
inline DiffForm exterior_derivative(const MultiPoly& p) {
  DiffForm out(1);
  for (Var v : p.variables()) out.add({v}, RatFunc(p.derivative(v)));
  return out;
}

/**
 * @brief s^* omega: coefficients substituted, each dv replaced by d(s(v)).
 *
 * Every variable of omega must be mapped by s. A denominator factor that
 * becomes identically zero raises DivisionByZero naming the factor.
 */
inline DiffForm pullback(const DiffForm& omega, const Substitution& s, const VarNamer& name = default_var_name) {
  std::map<Var, DiffForm> dcache;
  DiffForm out(omega.degree());
  for (const auto& [k, c] : omega.terms()) {
    for (Var v : c.variables())
      if (!s.map.count(v)) throw std::invalid_argument("pullback: substitution misses variable " + name(v));
    DiffForm term = DiffForm::scalar(c.substitute(s.map, name));
    for (Var v : k) {
      auto it = s.map.find(v);
      if (it == s.map.end()) throw std::invalid_argument("pullback: substitution misses variable " + name(v));
      auto dit = dcache.find(v);
      if (dit == dcache.end()) dit = dcache.emplace(v, exterior_derivative(it->second)).first;
      term = wedge(term, dit->second);
    }
    out = out + term;
  }
  return out;
}

}  // namespace chikit
