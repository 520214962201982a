/**
 * @file formal_map_sum.hpp
 * @brief Integer linear combinations of coordinate maps with a common source and target.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "chikit/shuffle/coord_map.hpp"

namespace chikit {

class FormalMapSum {
 public:
  FormalMapSum(Space source, Space target) : source_(std::move(source)), target_(std::move(target)) {}

  static FormalMapSum single(const CoordMap& f, std::int64_t coef = 1) {
    FormalMapSum s(f.source(), f.target());
    s.add(f, coef);
    return s;
  }

  static FormalMapSum identity(const Space& s) { return single(CoordMap::identity(s)); }

  void add(const CoordMap& f, std::int64_t coef) {
    if (f.source() != source_ || f.target() != target_)
      throw std::invalid_argument("FormalMapSum: term " + f.source().to_string() + "->" + f.target().to_string() +
                                  " does not fit " + source_.to_string() + "->" + target_.to_string());
    if (coef == 0) return;
    auto [it, fresh] = terms_.try_emplace(f, 0);
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::map<CoordMap, std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend FormalMapSum operator+(FormalMapSum a, const FormalMapSum& b) {
    for (const auto& [f, c] : b.terms_) a.add(f, c);
    return a;
  }
  friend FormalMapSum operator-(FormalMapSum a, const FormalMapSum& b) {
    for (const auto& [f, c] : b.terms_) a.add(f, -c);
    return a;
  }
  friend FormalMapSum operator*(std::int64_t k, FormalMapSum a) {
    if (k == 0) return FormalMapSum(a.source_, a.target_);
    for (auto& [f, c] : a.terms_) c *= k;
    return a;
  }

  friend bool operator==(const FormalMapSum& a, const FormalMapSum& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalMapSum& a, const FormalMapSum& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [f, c] : terms_) {
      s += (c < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + "));
      std::int64_t a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += f.to_string();
    }
    return s;
  }

 private:
  Space source_, target_;
  std::map<CoordMap, std::int64_t> terms_;
};

/// Bilinear composition f o g.
inline FormalMapSum compose_sums(const FormalMapSum& f, const FormalMapSum& g) {
  if (f.source() != g.target())
    throw std::invalid_argument("compose_sums: incompatible kinds " + f.source().to_string() + " vs " +
                                g.target().to_string());
  FormalMapSum out(g.source(), f.target());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add(compose(a, b), ca * cb);
  return out;
}

/// Bilinear cartesian product f x g.
inline FormalMapSum product_sums(const FormalMapSum& f, const FormalMapSum& g) {
  FormalMapSum out(f.source() * g.source(), f.target() * g.target());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add(product(a, b), ca * cb);
  return out;
}

}  // namespace chikit
