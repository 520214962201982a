/**
 * @file coord_map.hpp
 * @brief Polynomial coordinate maps between products of simplices and cubes.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chikit/exact/multipoly.hpp"

namespace chikit {

/// simplex(a) has coordinates z_0..z_a with sum 1; cube(a) has t_1..t_a.
struct SpaceFactor {
  enum class Kind { Simplex, Cube };
  Kind kind;
  unsigned dim;

  unsigned coord_count() const { return kind == Kind::Simplex ? dim + 1 : dim; }
  friend bool operator==(const SpaceFactor& a, const SpaceFactor& b) { return a.kind == b.kind && a.dim == b.dim; }
  friend bool operator<(const SpaceFactor& a, const SpaceFactor& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.dim < b.dim;
  }
};

struct Space {
  std::vector<SpaceFactor> factors;

  static Space simplex(unsigned a) { return {{{SpaceFactor::Kind::Simplex, a}}}; }
  static Space cube(unsigned a) { return {{{SpaceFactor::Kind::Cube, a}}}; }

  friend Space operator*(const Space& a, const Space& b) {
    Space s = a;
    s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
    return s;
  }

  unsigned coord_count() const {
    unsigned c = 0;
    for (const auto& f : factors) c += f.coord_count();
    return c;
  }

  friend bool operator==(const Space& a, const Space& b) { return a.factors == b.factors; }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
  friend bool operator<(const Space& a, const Space& b) { return a.factors < b.factors; }

  std::string to_string() const {
    std::string s;
    for (const auto& f : factors) {
      if (!s.empty()) s += "x";
      s += (f.kind == SpaceFactor::Kind::Simplex ? "D" : "C") + std::to_string(f.dim);
    }
    return s.empty() ? "pt" : s;
  }

  /// Names the flat coordinates: z<j> for simplices, t<j> for cubes, suffixed by factor when needed.
  VarNamer namer(Var base) const {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& f = factors[k];
      std::string suffix = factors.size() > 1 ? "_" + std::to_string(k + 1) : "";
      for (unsigned j = 0; j < f.coord_count(); ++j) {
        if (f.kind == SpaceFactor::Kind::Simplex)
          names.push_back("z" + std::to_string(j) + suffix);
        else
          names.push_back("t" + std::to_string(j + 1) + suffix);
      }
    }
    return [names, base](Var v) {
      return v >= base && v - base < names.size() ? names[v - base] : default_var_name(v);
    };
  }
};

/**
 * @brief A map source -> target given by polynomial components in the source coordinates.
 *
 * The flat source coordinate i is the variable coord(i). Components are kept
 * modulo the simplex relations of the source: each z_0 of a simplex factor is
 * replaced by 1 minus the other coordinates of that factor, so two maps of
 * simplices that agree pointwise have identical components.
 */
class CoordMap {
 public:
  static constexpr Var coord(unsigned i) { return kZBase + i; }

  CoordMap(Space source, Space target, std::vector<MultiPoly> components)
      : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
    if (comps_.size() != target_.coord_count())
      throw std::invalid_argument("CoordMap: component count does not match target " + target_.to_string());
    unsigned n = source_.coord_count();
    for (const auto& c : comps_)
      for (Var v : c.variables())
        if (v < kZBase || v - kZBase >= n) throw std::invalid_argument("CoordMap: component uses a non-source variable");
    auto rel = relations(source_);
    if (!rel.empty())
      for (auto& c : comps_) c = c.substitute(rel);
    unsigned off = 0;
    for (const auto& f : target_.factors) {
      if (f.kind == SpaceFactor::Kind::Simplex) {
        MultiPoly s;
        for (unsigned j = 0; j < f.coord_count(); ++j) s += comps_[off + j];
        if (!s.is_one()) throw std::invalid_argument("CoordMap: components do not sum to 1 on a simplex factor of the target");
      }
      off += f.coord_count();
    }
  }

  static CoordMap identity(const Space& s) {
    std::vector<MultiPoly> comps;
    for (unsigned i = 0; i < s.coord_count(); ++i) comps.push_back(MultiPoly::variable(coord(i)));
    return CoordMap(s, s, std::move(comps));
  }

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::vector<MultiPoly>& components() const { return comps_; }

  /// f o g.
  friend CoordMap compose(const CoordMap& f, const CoordMap& g) {
    if (f.source_ != g.target_)
      throw std::invalid_argument("compose: source " + f.source_.to_string() + " does not match target " +
                                  g.target_.to_string());
    std::map<Var, MultiPoly> s;
    for (unsigned i = 0; i < g.comps_.size(); ++i) s.emplace(coord(i), g.comps_[i]);
    std::vector<MultiPoly> comps;
    comps.reserve(f.comps_.size());
    for (const auto& c : f.comps_) comps.push_back(c.substitute(s));
    return CoordMap(g.source_, f.target_, std::move(comps));
  }

  /// f x g acting on the product of the sources.
  friend CoordMap product(const CoordMap& f, const CoordMap& g) {
    unsigned shift = f.source_.coord_count();
    std::map<Var, Var> r;
    for (unsigned i = 0; i < g.source_.coord_count(); ++i) r.emplace(coord(i), coord(i + shift));
    std::vector<MultiPoly> comps = f.comps_;
    for (const auto& c : g.comps_) comps.push_back(c.relabel(r));
    return CoordMap(f.source_ * g.source_, f.target_ * g.target_, std::move(comps));
  }

  std::vector<BigRat> apply(const std::vector<BigRat>& point) const {
    if (point.size() != source_.coord_count()) throw std::invalid_argument("CoordMap::apply: wrong point size");
    std::map<Var, BigRat> p;
    for (unsigned i = 0; i < point.size(); ++i) p.emplace(coord(i), point[i]);
    std::vector<BigRat> out;
    for (const auto& c : comps_) out.push_back(c.evaluate(p).constant_value());
    return out;
  }

  friend bool operator==(const CoordMap& a, const CoordMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.comps_ == b.comps_;
  }
  friend bool operator<(const CoordMap& a, const CoordMap& b) {
    if (a.source_ != b.source_) return a.source_ < b.source_;
    if (a.target_ != b.target_) return a.target_ < b.target_;
    return a.comps_ < b.comps_;
  }

  std::string to_string() const {
    auto name = source_.namer(kZBase);
    std::string s = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? ", " : "") + comps_[i].to_string(name);
    return s + ")";
  }

 private:
  static std::map<Var, MultiPoly> relations(const Space& s) {
    std::map<Var, MultiPoly> rel;
    unsigned off = 0;
    for (const auto& f : s.factors) {
      if (f.kind == SpaceFactor::Kind::Simplex) {
        MultiPoly z0(1);
        for (unsigned j = 1; j <= f.dim; ++j) z0 -= MultiPoly::variable(coord(off + j));
        rel.emplace(coord(off), z0);
      }
      off += f.coord_count();
    }
    return rel;
  }

  Space source_, target_;
  std::vector<MultiPoly> comps_;
};

}  // namespace chikit
