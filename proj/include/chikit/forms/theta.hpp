/**
 * @file theta.hpp
 * @brief The logarithmic forms theta_N, their pullback to the cube and the product identity.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "chikit/forms/diff_form.hpp"
#include "chikit/hopf/character.hpp"
#include "chikit/report.hpp"
#include "chikit/shuffle/ez.hpp"
#include "chikit/total/constants.hpp"

namespace chikit {

/// sum_r (-1)^r dz_0/z_0 ^ ... (omit r) ... ^ dz_N/z_N; theta_0 = 1.
inline DiffForm theta_form(unsigned N) {
  if (N == 0) return DiffForm::scalar(RatFunc(1));
  DiffForm out(N);
  for (unsigned r = 0; r <= N; ++r) {
    DiffForm::Key key;
    std::vector<std::pair<MultiPoly, unsigned>> den;
    for (unsigned i = 0; i <= N; ++i) {
      if (i == r) continue;
      key.push_back(z_var(i));
      den.emplace_back(MultiPoly::variable(z_var(i)), 1);
    }
    out.add(key, RatFunc::from_factors(r % 2 ? -1 : 1, den));
  }
  return out;
}

/// z_0 = t_1, z_i = t_{i+1} - t_i, z_N = 1 - t_N.
inline Substitution dif_substitution(unsigned N, unsigned t_shift = 0) {
  Substitution s;
  MultiPoly prev;
  for (unsigned i = 0; i < N; ++i) {
    MultiPoly t = MultiPoly::variable(t_var(i + 1 + t_shift));
    s.map.emplace(z_var(i), t - prev);
    prev = t;
  }
  s.map.emplace(z_var(N), MultiPoly(1) - prev);
  return s;
}

inline std::vector<Var> t_vars(unsigned from, unsigned to) {
  std::vector<Var> v;
  for (unsigned i = from; i <= to; ++i) v.push_back(t_var(i));
  return v;
}

/// d_N^* theta_N, a top form on the N-cube in t_1..t_N.
inline DiffForm theta_on_cube(unsigned N, unsigned t_shift = 0) {
  return pullback(theta_form(N), dif_substitution(N, t_shift));
}

inline VerificationReport verify_theta_pullback(unsigned N) {
  if (N == 0) throw std::invalid_argument("verify_theta_pullback: need N >= 1");
  VerificationReport rep("forms.theta_pullback", Json{{"N", N}});
  ReportTimer timer(rep);
  DiffForm lhs = theta_on_cube(N);
  RatFunc c = chi(N, t_vars(1, N)).value;
  DiffForm rhs = DiffForm::monomial(N % 2 ? -c : c, t_vars(1, N));
  rep.pass = lhs == rhs;
  rep.details = {{"lhs_term_count", lhs.size()}, {"rhs_term_count", rhs.size()}};
  if (N <= 2) rep.details["pullback"] = lhs.to_string();
  return rep;
}

/**
 * @brief Pushforward along a coordinate permutation of the cube.
 *
 * f(t)_k = t_{pi(k)}; f_# is pullback along f^-1, i.e. t_{pi(k)} -> t_k. The
 * orientation sign eps(pi) comes out of reordering the differentials.
 */
inline DiffForm push_forward_permutation(const DiffForm& omega, const CoordMap& f) {
  Substitution inv;
  const auto& comps = f.components();
  for (unsigned k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    if (c.size() != 1 || c.leading().coef != 1 || c.leading().mono.degree() != 1)
      throw std::invalid_argument("push_forward_permutation: map is not a coordinate permutation");
    Var src = c.leading().mono.powers()[0].first - CoordMap::coord(0);
    if (!inv.map.emplace(t_var(src + 1), MultiPoly::variable(t_var(k + 1))).second)
      throw std::invalid_argument("push_forward_permutation: repeated coordinate");
  }
  return pullback(omega, inv);
}

/**
 * @brief Both sides of the product identity for theta on the (m+n)-cube.
 *
 * Shuffle side: sum over the terms of psi^cube_{m,n} of the pushforward of
 * d^*theta_{m+n}. Product side: (-1)^{mn} p^* d^*theta_m ^ q^* d^*theta_n, the
 * sign coming from the exterior product. Each side carries its theta
 * normalization sign; the (2 pi i) powers agree and cancel.
 */
inline VerificationReport verify_theta_ez(unsigned m, unsigned n) {
  VerificationReport rep("forms.theta_ez", Json{{"m", m}, {"n", n}});
  ReportTimer timer(rep);
  unsigned N = m + n;
  DiffForm omega = theta_on_cube(N);
  DiffForm shuffle_side(N);
  auto psi = ez_cubical(m, n);
  for (const auto& [f, coef] : psi.terms())
    shuffle_side = shuffle_side + RatFunc(static_cast<long>(coef)) * push_forward_permutation(omega, f);
  DiffForm product_side = wedge(theta_on_cube(m), theta_on_cube(n, m));
  if ((m * n) % 2) product_side = RatFunc(-1) * product_side;
  PiConstant k_total = theta_normalization(static_cast<int>(N));
  PiConstant k_parts = theta_normalization(static_cast<int>(m)) * theta_normalization(static_cast<int>(n));
  bool powers_match = k_total.power == k_parts.power;
  DiffForm lhs = RatFunc(k_total.sign) * shuffle_side;
  DiffForm rhs = RatFunc(k_parts.sign) * product_side;
  rep.pass = powers_match && lhs == rhs;
  rep.details = {{"lhs_term_count", psi.size()},
                 {"rhs_term_count", 1},
                 {"normalization_total", k_total.to_string()},
                 {"normalization_parts", k_parts.to_string()}};
  if (N <= 2) rep.details["shuffle_side"] = shuffle_side.to_string();
  return rep;
}

}  // namespace chikit
