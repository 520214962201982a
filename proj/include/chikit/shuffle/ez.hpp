/**
 * @file ez.hpp
 * @brief Faces, degeneracies, prism triangulation maps and the EZ relations.
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "chikit/report.hpp"
#include "chikit/shuffle/formal_map_sum.hpp"
#include "chikit/shuffle/permutation.hpp"

namespace chikit {

namespace detail {

inline std::vector<MultiPoly> source_coords(unsigned count, unsigned offset = 0) {
  std::vector<MultiPoly> v;
  for (unsigned i = 0; i < count; ++i) v.push_back(MultiPoly::variable(CoordMap::coord(offset + i)));
  return v;
}

/// s_k on a coordinate vector: (z_0..z_{k-1}, z_k + z_{k+1}, z_{k+2}, ...).
inline std::vector<MultiPoly> degenerate(unsigned k, const std::vector<MultiPoly>& z) {
  if (k + 1 >= z.size()) throw std::out_of_range("degeneracy index out of range");
  std::vector<MultiPoly> out;
  for (unsigned j = 0; j < z.size(); ++j) {
    if (j == k)
      out.push_back(z[j] + z[j + 1]);
    else if (j != k + 1)
      out.push_back(z[j]);
  }
  return out;
}

}  // namespace detail

/// iota_r: simplex(b-1) -> simplex(b), inserting 0 at position r.
inline CoordMap face_map(unsigned r, unsigned b) {
  if (b == 0 || r > b) throw std::out_of_range("face_map: need 0 <= r <= b, b >= 1");
  auto z = detail::source_coords(b);
  z.insert(z.begin() + r, MultiPoly{});
  return CoordMap(Space::simplex(b - 1), Space::simplex(b), std::move(z));
}

/// s_k: simplex(N) -> simplex(N-1).
inline CoordMap degeneracy(unsigned k, unsigned N) {
  if (N == 0 || k > N - 1) throw std::out_of_range("degeneracy: need 0 <= k <= N-1");
  return CoordMap(Space::simplex(N), Space::simplex(N - 1), detail::degenerate(k, detail::source_coords(N + 1)));
}

/**
 * @brief Raw components of lambda_tau before reduction modulo the simplex relation.
 *
 * With sigma(i) = tau(i) - 1 the first factor is s_{sigma(m+1)} o ... o s_{sigma(m+n)}
 * and the second is s_{sigma(1)} o ... o s_{sigma(m)}, rightmost applied first.
 */
inline std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> lambda_components(const Permutation& tau,
                                                                                      unsigned m) {
  if (m > tau.size()) throw std::invalid_argument("lambda_map: m exceeds the permutation size");
  unsigned n = tau.size() - m;
  if (!is_shuffle(tau, m, n)) throw std::invalid_argument("lambda_map: " + tau.to_string() + " is not a shuffle");
  auto first = detail::source_coords(m + n + 1), second = first;
  for (unsigned i = m + n; i > m; --i) first = detail::degenerate(tau(i) - 1, first);
  for (unsigned i = m; i > 0; --i) second = detail::degenerate(tau(i) - 1, second);
  return {first, second};
}

inline CoordMap lambda_map(const Permutation& tau, unsigned m) {
  unsigned n = tau.size() - m;
  auto [a, b] = lambda_components(tau, m);
  a.insert(a.end(), b.begin(), b.end());
  return CoordMap(Space::simplex(m + n), Space::simplex(m) * Space::simplex(n), std::move(a));
}

/// phi_N: simplex(N) -> cube(N), the prefix sums z_0, z_0+z_1, ..., z_0+...+z_{N-1}.
inline CoordMap phi_map(unsigned N) {
  std::vector<MultiPoly> comps;
  MultiPoly acc;
  for (unsigned i = 0; i < N; ++i) comps.push_back(acc += MultiPoly::variable(CoordMap::coord(i)));
  return CoordMap(Space::simplex(N), Space::cube(N), std::move(comps));
}

/// d_N: cube(N) -> simplex(N), t -> (t_1, t_2 - t_1, ..., 1 - t_N).
inline CoordMap dif_map(unsigned N) {
  std::vector<MultiPoly> comps;
  MultiPoly prev;
  for (unsigned i = 0; i < N; ++i) {
    MultiPoly t = MultiPoly::variable(CoordMap::coord(i));
    comps.push_back(t - prev);
    prev = t;
  }
  comps.push_back(MultiPoly(1) - prev);
  return CoordMap(Space::cube(N), Space::simplex(N), std::move(comps));
}

/// tau*: cube(m+n) -> cube(m) x cube(n), t -> (t_{tau(1)}, ..., t_{tau(m+n)}).
inline CoordMap cube_action(const Permutation& tau, unsigned m) {
  unsigned n = tau.size() - m;
  std::vector<MultiPoly> comps;
  for (unsigned k = 1; k <= tau.size(); ++k) comps.push_back(MultiPoly::variable(CoordMap::coord(tau(k) - 1)));
  return CoordMap(Space::cube(m + n), Space::cube(m) * Space::cube(n), std::move(comps));
}

/// delta = sum_r (-1)^r iota_r : simplex(b-1) -> simplex(b).
inline FormalMapSum simplex_boundary(unsigned b) {
  FormalMapSum s(Space::simplex(b - 1), Space::simplex(b));
  for (unsigned r = 0; r <= b; ++r) s.add(face_map(r, b), r % 2 ? -1 : 1);
  return s;
}

inline FormalMapSum ez_simplicial(unsigned m, unsigned n) {
  FormalMapSum s(Space::simplex(m + n), Space::simplex(m) * Space::simplex(n));
  for (const auto& tau : shuffles(m, n).elements) s.add(lambda_map(tau, m), tau.sign());
  return s;
}

inline FormalMapSum ez_cubical(unsigned m, unsigned n) {
  FormalMapSum s(Space::cube(m + n), Space::cube(m) * Space::cube(n));
  for (const auto& tau : shuffles(m, n).elements) s.add(cube_action(tau, m), tau.sign());
  return s;
}

inline VerificationReport verify_ez_diagram(unsigned m, unsigned n) {
  VerificationReport rep("ez.diagram", Json{{"m", m}, {"n", n}});
  ReportTimer timer(rep);
  auto lhs = compose_sums(FormalMapSum::single(product(phi_map(m), phi_map(n))), ez_simplicial(m, n));
  auto rhs = compose_sums(ez_cubical(m, n), FormalMapSum::single(phi_map(m + n)));
  rep.pass = lhs == rhs;
  rep.details = {{"lhs_term_count", lhs.size()}, {"rhs_term_count", rhs.size()}};
  return rep;
}

/// Relation 1; psi with a negative index is the zero sum.
inline VerificationReport verify_co_leibniz(unsigned m, unsigned n) {
  if (m + n == 0) throw std::invalid_argument("verify_co_leibniz: need m+n >= 1");
  VerificationReport rep("ez.co_leibniz", Json{{"m", m}, {"n", n}});
  ReportTimer timer(rep);
  Space src = Space::simplex(m + n - 1), tgt = Space::simplex(m) * Space::simplex(n);
  auto lhs = compose_sums(ez_simplicial(m, n), simplex_boundary(m + n));
  FormalMapSum rhs(src, tgt);
  if (m >= 1)
    rhs = rhs + compose_sums(product_sums(simplex_boundary(m), FormalMapSum::identity(Space::simplex(n))),
                             ez_simplicial(m - 1, n));
  if (n >= 1)
    rhs = rhs + (m % 2 ? -1 : 1) *
                    compose_sums(product_sums(FormalMapSum::identity(Space::simplex(m)), simplex_boundary(n)),
                                 ez_simplicial(m, n - 1));
  rep.pass = lhs == rhs;
  rep.details = {{"lhs_term_count", lhs.size()}, {"rhs_term_count", rhs.size()}};
  return rep;
}

/// Relation 2: (psi_{m,n} x 1_r) psi_{m+n,r} = (1_m x psi_{n,r}) psi_{m,n+r}.
inline VerificationReport verify_coassoc(unsigned m, unsigned n, unsigned r) {
  VerificationReport rep("ez.coassoc", Json{{"m", m}, {"n", n}, {"r", r}});
  ReportTimer timer(rep);
  auto lhs = compose_sums(product_sums(ez_simplicial(m, n), FormalMapSum::identity(Space::simplex(r))),
                          ez_simplicial(m + n, r));
  auto rhs = compose_sums(product_sums(FormalMapSum::identity(Space::simplex(m)), ez_simplicial(n, r)),
                          ez_simplicial(m, n + r));
  rep.pass = lhs == rhs;
  rep.details = {{"lhs_term_count", lhs.size()}, {"rhs_term_count", rhs.size()}};
  return rep;
}

}  // namespace chikit
