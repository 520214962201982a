/**
 * @file gcd.hpp
 * @brief Content, normalization and multivariate GCD (recursive primitive PRS).
 */
#pragma once

#include <algorithm>
#include <utility>

#include "chikit/exact/multipoly.hpp"

namespace chikit {

/// p = scale * prim with prim integral, content 1 and positive leading coefficient.
struct Associate {
  BigRat scale;
  MultiPoly prim;
};

inline Associate normalize_associate(const MultiPoly& p) {
  if (p.is_zero()) return {0, {}};
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  BigRat scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (p.leading().coef < 0) scale = -scale;
  return {scale, p.scaled(1 / scale)};
}

inline MultiPoly normalized(const MultiPoly& p) { return normalize_associate(p).prim; }

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

namespace detail {

/// GCD of the coefficients of p viewed as a polynomial in v.
inline MultiPoly content_in(const MultiPoly& p, Var v) {
  MultiPoly g;
  for (const auto& [e, c] : p.coefficients_in(v)) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, Var v) {
  auto bc = b.coefficients_in(v);
  Exp db = bc.rbegin()->first;
  const MultiPoly& lb = bc.rbegin()->second;
  while (!a.is_zero()) {
    Exp da = a.degree_in(v);
    if (da < db) break;
    MultiPoly la = a.coefficients_in(v).rbegin()->second;
    a = lb * a - la * MultiPoly::term(Monomial::variable(v, da - db), 1) * b;
  }
  return a;
}

/// GCD of a and b, both primitive with respect to v.
inline MultiPoly primitive_prs(MultiPoly a, MultiPoly b, Var v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return 1;
    a = std::move(b);
    b = normalized(*divide_exact(r, content_in(r, v)));
  }
}

}  // namespace detail

/**
 * @brief Normalized GCD (integral, content 1, positive leading coefficient).
 *
 * gcd(0,0) = 0; any nonzero constant argument gives 1.
 */
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return 1;
  MultiPoly na = normalized(a), nb = normalized(b);
  if (na == nb) return na;
  auto va = a.variables(), vb = b.variables();
  Var v = std::min(va.front(), vb.front());
  bool a_has = std::binary_search(va.begin(), va.end(), v);
  bool b_has = std::binary_search(vb.begin(), vb.end(), v);
  if (!a_has) return poly_gcd(na, detail::content_in(nb, v));
  if (!b_has) return poly_gcd(detail::content_in(na, v), nb);
  MultiPoly ca = detail::content_in(na, v), cb = detail::content_in(nb, v);
  MultiPoly pa = *divide_exact(na, ca), pb = *divide_exact(nb, cb);
  MultiPoly c = poly_gcd(ca, cb);
  MultiPoly g = detail::primitive_prs(normalized(pa), normalized(pb), v);
  return normalized(c * g);
}

}  // namespace chikit
