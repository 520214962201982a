/**
 * @file monomial.hpp
 * @brief Sparse monomials with a graded-lex order by variable index.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chikit/exact/variables.hpp"

namespace chikit {

using Exp = std::uint32_t;

/**
 * @brief Product of variable powers, stored as (var, exp) pairs sorted by var.
 *
 * Zero exponents are never stored. The order is graded-lex: higher total
 * degree first, ties broken by the exponent of the smallest variable index.
 */
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(Var v, Exp e = 1) {
    Monomial m;
    if (e > 0) {
      m.powers_.emplace_back(v, e);
      m.degree_ = e;
    }
    return m;
  }

  /// Accepts unsorted pairs; merges duplicates and drops zero exponents.
  static Monomial from_pairs(std::vector<std::pair<Var, Exp>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [v, e] : pairs) {
      if (e == 0) continue;
      if (!m.powers_.empty() && m.powers_.back().first == v)
        m.powers_.back().second += e;
      else
        m.powers_.emplace_back(v, e);
      m.degree_ += e;
    }
    return m;
  }

  Exp degree() const { return degree_; }
  bool is_one() const { return powers_.empty(); }
  const std::vector<std::pair<Var, Exp>>& powers() const { return powers_; }

  Exp exponent(Var v) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), std::make_pair(v, Exp{0}));
    return (it != powers_.end() && it->first == v) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
      if (i->first == j->first) {
        m.powers_.emplace_back(i->first, i->second + j->second);
        ++i, ++j;
      } else if (i->first < j->first) {
        m.powers_.push_back(*i++);
      } else {
        m.powers_.push_back(*j++);
      }
    }
    m.powers_.insert(m.powers_.end(), i, a.powers_.end());
    m.powers_.insert(m.powers_.end(), j, b.powers_.end());
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto j = other.powers_.begin();
    for (const auto& [v, e] : powers_) {
      while (j != other.powers_.end() && j->first < v) ++j;
      if (j == other.powers_.end() || j->first != v || j->second < e) return false;
    }
    return true;
  }

  /// other / *this; precondition: divides(other).
  Monomial cofactor_in(const Monomial& other) const {
    Monomial m;
    auto i = powers_.begin();
    for (const auto& [v, e] : other.powers_) {
      while (i != powers_.end() && i->first < v) ++i;
      Exp sub = (i != powers_.end() && i->first == v) ? i->second : 0;
      if (sub > e) throw std::logic_error("Monomial::cofactor_in: not divisible");
      if (e > sub) m.powers_.emplace_back(v, e - sub);
    }
    m.degree_ = other.degree_ - degree_;
    return m;
  }

  /// Drops variable v entirely.
  Monomial without(Var v) const {
    Monomial m;
    for (const auto& p : powers_) {
      if (p.first == v) continue;
      m.powers_.push_back(p);
      m.degree_ += p.second;
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.powers_ == b.powers_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// -1, 0, 1 under graded-lex.
  friend int compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
      if (i->first != j->first) return i->first < j->first ? 1 : -1;
      if (i->second != j->second) return i->second < j->second ? -1 : 1;
      ++i, ++j;
    }
    if (i != a.powers_.end()) return 1;
    if (j != b.powers_.end()) return -1;
    return 0;
  }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (const auto& [v, e] : powers_) h = h * 1000003u ^ (std::size_t(v) * 31u + e);
    return h;
  }

  std::string to_string(const std::function<std::string(Var)>& name) const {
    std::string s;
    for (const auto& [v, e] : powers_) {
      if (!s.empty()) s += "*";
      s += name(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<std::pair<Var, Exp>> powers_;
  Exp degree_ = 0;
};

/// Strict weak order placing larger monomials first.
struct DescendingOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace chikit
