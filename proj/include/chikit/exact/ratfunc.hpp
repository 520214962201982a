/**
 * @file ratfunc.hpp
 * @brief Rational functions in lowest terms with a factored denominator.
 */
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chikit/exact/gcd.hpp"
#include "chikit/exact/multipoly.hpp"

namespace chikit {

/**
 * @brief num / (f_1^e_1 ... f_k^e_k) over Q.
 *
 * Each f_i is integral, primitive, non-constant, has positive leading
 * coefficient and is coprime to the others and to num. The expanded pair
 * (num, den()) is therefore the unique reduced fraction with normalized
 * denominator. Keeping the denominator factored lets sums of many terms with
 * linear denominators (the chi functions) cancel by trial division instead of
 * full GCDs.
 */
class RatFunc {
 public:
  struct Factor {
    MultiPoly poly;
    unsigned exp;
    friend bool operator==(const Factor& a, const Factor& b) { return a.exp == b.exp && a.poly == b.poly; }
  };

  RatFunc() = default;
  RatFunc(const MultiPoly& p) : num_(p) {}  // NOLINT
  RatFunc(const BigRat& c) : num_(c) {}     // NOLINT
  RatFunc(long c) : num_(c) {}              // NOLINT
  RatFunc(int c) : num_(c) {}               // NOLINT

  static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

  /// num / den, reduced; throws DivisionByZero if den = 0.
  static RatFunc fraction(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num) / RatFunc(den); }

  /// num / prod(p_i^e_i) for arbitrary nonzero p_i, reduced.
  static RatFunc from_factors(const MultiPoly& num, const std::vector<std::pair<MultiPoly, unsigned>>& dens) {
    MultiPoly n = num;
    std::vector<Tagged<unsigned>> list;
    for (const auto& [p, e] : dens) {
      if (p.is_zero()) throw DivisionByZero("RatFunc: zero denominator factor");
      auto [scale, prim] = normalize_associate(p);
      for (unsigned k = 0; k < e; ++k) n = n.scaled(1 / scale);
      if (!prim.is_constant() && e > 0) insert_factor(list, std::move(prim), e);
    }
    if (n.is_zero()) return {};
    cancel(n, list);
    return assemble(std::move(n), list);
  }

  const MultiPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }

  MultiPoly den() const {
    MultiPoly d(1);
    for (const auto& f : den_) d *= f.poly.pow(f.exp);
    return d;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  std::vector<Var> variables() const {
    std::set<Var> vs;
    for (Var v : num_.variables()) vs.insert(v);
    for (const auto& f : den_)
      for (Var v : f.poly.variables()) vs.insert(v);
    return {vs.begin(), vs.end()};
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, -b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return mul(a, b); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return mul(a, b.inverse()); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("RatFunc: division by zero");
    auto [scale, prim] = normalize_associate(num_);
    RatFunc r;
    r.num_ = den().scaled(1 / scale);
    if (!prim.is_constant()) r.den_.push_back({prim, 1});
    return r;
  }

  RatFunc pow(unsigned e) const {
    RatFunc r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return false;
    if (a.den_ == b.den_) return true;
    if (a.all_linear() && b.all_linear()) return false;  // unique factorization
    return a.den() == b.den();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Renames variables; throws std::invalid_argument if two occurring variables collide.
  RatFunc relabel(const std::map<Var, Var>& r) const {
    auto vars = variables();
    std::set<Var> images;
    for (Var v : vars) {
      auto it = r.find(v);
      if (!images.insert(it == r.end() ? v : it->second).second)
        throw std::invalid_argument("relabel is not injective on variable " + default_var_name(v));
    }
    RatFunc out;
    out.num_ = num_.relabel(r);
    for (const auto& f : den_) {
      MultiPoly p = f.poly.relabel(r);
      if (p.leading().coef < 0) {
        p = -p;
        if (f.exp % 2) out.num_ = -out.num_;
      }
      out.den_.push_back({std::move(p), f.exp});
    }
    out.sort_factors();
    return out;
  }

  /// Polynomial substitution; throws DivisionByZero naming a denominator factor that vanishes.
  RatFunc substitute(const std::map<Var, MultiPoly>& s, const VarNamer& name = default_var_name) const {
    RatFunc out(num_.substitute(s));
    for (const auto& f : den_) {
      MultiPoly p = f.poly.substitute(s);
      if (p.is_zero())
        throw DivisionByZero("substitution annihilates denominator factor " + f.poly.to_string(name));
      RatFunc fp(p);
      for (unsigned k = 0; k < f.exp; ++k) out /= fp;
    }
    return out;
  }

  /// Value at a rational point covering all variables.
  BigRat evaluate(const std::map<Var, BigRat>& point) const {
    BigRat d = 1;
    for (const auto& f : den_) {
      MultiPoly v = f.poly.evaluate(point);
      if (!v.is_constant()) throw std::invalid_argument("evaluate: point misses a variable");
      BigRat fv = v.constant_value();
      if (fv == 0) throw DivisionByZero("evaluate: denominator vanishes at point");
      for (unsigned k = 0; k < f.exp; ++k) d *= fv;
    }
    MultiPoly n = num_.evaluate(point);
    if (!n.is_constant()) throw std::invalid_argument("evaluate: point misses a variable");
    return n.constant_value() / d;
  }

  std::string to_string(const VarNamer& name = default_var_name) const {
    if (den_.empty()) return num_.to_string(name);
    return "(" + num_.to_string(name) + ")/(" + den().to_string(name) + ")";
  }

  /// Denominator as a product of its stored factors, e.g. "(x1)*(1 - x2)^2".
  std::string factored_den_string(const VarNamer& name = default_var_name) const {
    std::string s;
    for (const auto& f : den_) {
      if (!s.empty()) s += "*";
      s += "(" + f.poly.to_string(name) + ")";
      if (f.exp > 1) s += "^" + std::to_string(f.exp);
    }
    return s.empty() ? "1" : s;
  }

 private:
  template <class E>
  struct Tagged {
    MultiPoly poly;
    E exp;
  };

  static unsigned add_exp(unsigned a, unsigned b) { return a + b; }
  static std::array<unsigned, 2> add_exp(std::array<unsigned, 2> a, std::array<unsigned, 2> b) {
    return {a[0] + b[0], a[1] + b[1]};
  }

  /// Inserts p^e into a pairwise coprime list, splitting on common divisors.
  template <class E>
  static void insert_factor(std::vector<Tagged<E>>& list, MultiPoly p, E e) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const MultiPoly& q = list[i].poly;
      if (q == p) {
        list[i].exp = add_exp(list[i].exp, e);
        return;
      }
      if (p.is_linear() && q.is_linear()) continue;
      MultiPoly g = poly_gcd(p, q);
      if (g.is_one()) continue;
      E eq = list[i].exp;
      MultiPoly qr = normalized(*divide_exact(q, g));
      MultiPoly pr = normalized(*divide_exact(p, g));
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
      insert_factor(list, g, add_exp(e, eq));
      if (!pr.is_constant()) insert_factor(list, std::move(pr), e);
      if (!qr.is_constant()) insert_factor(list, std::move(qr), eq);
      return;
    }
    list.push_back({std::move(p), e});
  }

  /// Removes from num every common divisor with the listed factors.
  static void cancel(MultiPoly& num, std::vector<Tagged<unsigned>>& list) {
    std::size_t i = 0;
    while (i < list.size()) {
      bool restart = false;
      while (list[i].exp > 0 && !num.is_zero()) {
        const MultiPoly& f = list[i].poly;
        if (f.is_linear()) {
          auto q = divide_exact(num, f);
          if (!q) break;
          num = std::move(*q);
          --list[i].exp;
          continue;
        }
        MultiPoly g = poly_gcd(num, f);
        if (g.is_one()) break;
        if (g == f) {
          num = *divide_exact(num, f);
          --list[i].exp;
          continue;
        }
        MultiPoly rest = normalized(*divide_exact(f, g));
        unsigned e = list[i].exp;
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
        insert_factor(list, std::move(g), e);
        insert_factor(list, std::move(rest), e);
        restart = true;
        break;
      }
      if (restart) {
        i = 0;
        continue;
      }
      ++i;
    }
    std::erase_if(list, [](const Tagged<unsigned>& t) { return t.exp == 0; });
  }

  static std::vector<Tagged<unsigned>> tagged(const std::vector<Factor>& fs) {
    std::vector<Tagged<unsigned>> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back({f.poly, f.exp});
    return out;
  }

  static RatFunc assemble(MultiPoly num, const std::vector<Tagged<unsigned>>& list) {
    RatFunc r;
    r.num_ = std::move(num);
    if (r.num_.is_zero()) return r;
    for (const auto& t : list)
      if (t.exp > 0) r.den_.push_back({t.poly, t.exp});
    r.sort_factors();
    return r;
  }

  static RatFunc mul(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.empty() && b.den_.empty()) return RatFunc(a.num_ * b.num_);
    MultiPoly na = a.num_, nb = b.num_;
    auto fa = tagged(a.den_), fb = tagged(b.den_);
    cancel(na, fb);
    cancel(nb, fa);
    for (auto& f : fb) insert_factor(fa, std::move(f.poly), f.exp);
    return assemble(na * nb, fa);
  }

  static RatFunc add(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.empty() && b.den_.empty()) return RatFunc(a.num_ + b.num_);
    using E2 = std::array<unsigned, 2>;
    std::vector<Tagged<E2>> base;
    for (const auto& f : a.den_) insert_factor(base, f.poly, E2{f.exp, 0});
    for (const auto& f : b.den_) insert_factor(base, f.poly, E2{0, f.exp});
    MultiPoly cof_a(1), cof_b(1);
    std::vector<Tagged<unsigned>> shared, other;
    for (const auto& t : base) {
      unsigned ea = t.exp[0], eb = t.exp[1];
      if (ea > eb) cof_b *= t.poly.pow(ea - eb);
      if (eb > ea) cof_a *= t.poly.pow(eb - ea);
      // only factors with equal exponents on both sides can divide the new numerator
      (ea == eb ? shared : other).push_back({t.poly, std::max(ea, eb)});
    }
    MultiPoly num = a.num_ * cof_a + b.num_ * cof_b;
    if (num.is_zero()) return {};
    cancel(num, shared);
    for (auto& t : other) shared.push_back(std::move(t));
    return assemble(std::move(num), shared);
  }

  bool all_linear() const {
    return std::all_of(den_.begin(), den_.end(), [](const Factor& f) { return f.poly.is_linear(); });
  }

  void sort_factors() {
    std::sort(den_.begin(), den_.end(), [](const Factor& x, const Factor& y) { return x.poly < y.poly; });
  }

  MultiPoly num_;
  std::vector<Factor> den_;
};

/// Canonical-form equality.
inline bool rf_equal(const RatFunc& a, const RatFunc& b) { return a == b; }

/// Independent oracle: a.num * b.den == b.num * a.den on expanded polynomials.
inline bool rf_cross_equal(const RatFunc& a, const RatFunc& b) {
  return a.num() * b.den() == b.num() * a.den();
}

enum class ArithOp { Add, Sub, Mul, Div };

inline RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("rf_arith: unknown op");
}

inline RatFunc rf_substitute(const RatFunc& a, const std::map<Var, Var>& relabel) { return a.relabel(relabel); }

}  // namespace chikit
