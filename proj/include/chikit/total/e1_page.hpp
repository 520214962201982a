/**
 * @file e1_page.hpp
 * @brief The E1 page for k = 2: polynomials in x with the parity differential.
 */
#pragma once

#include <chrono>
#include <map>
#include <vector>

#include "chikit/exact/linalg.hpp"
#include "chikit/report.hpp"
#include "chikit/total/bigraded.hpp"

namespace chikit {

/// Coefficients of x^0 .. x^n.
using XPoly = std::vector<BigRat>;

/// delta-hat(x^a) in degree p: (-1)^p tau(a) x^{a+1} + (-1)^{p-a} tau(p-a) x^a.
inline XPoly e1_delta(unsigned p, unsigned a) {
  if (a > p) throw std::invalid_argument("e1_delta: need a <= p");
  XPoly out(p + 2, 0);
  out[a + 1] += minus_one_pow(p) * parity_flag(a);
  out[a] += minus_one_pow(p - a) * parity_flag(p - a);
  return out;
}

/// Matrix of delta-hat^p: rows x^0..x^{p+1}, columns x^0..x^p.
inline linalg::Matrix<BigRat> e1_matrix(unsigned p) {
  linalg::Matrix<BigRat> m(p + 2, std::vector<BigRat>(p + 1, 0));
  for (unsigned a = 0; a <= p; ++a) {
    XPoly col = e1_delta(p, a);
    for (unsigned i = 0; i < col.size(); ++i) m[i][a] = col[i];
  }
  return m;
}

/// Canonical basis of a span: the nonzero rows of its RREF.
inline linalg::Matrix<BigRat> canonical_span(linalg::Matrix<BigRat> rows) {
  auto piv = linalg::rref(rows);
  rows.resize(piv.size());
  return rows;
}

struct PageRow {
  unsigned p = 0;
  linalg::Matrix<BigRat> kernel;  // canonical basis of ker delta-hat^p
  linalg::Matrix<BigRat> image;   // canonical basis of im delta-hat^{p-1} (empty for p = 0)
  bool kernel_dim_ok = false;
  bool even_basis_ok = true;
  bool exact = false;             // im = ker
  bool squares_to_zero = true;
  bool matches_total_D = true;
};

/// delta-hat^p as computed by total_D on the E1 model, with y set to 1.
inline XPoly e1_delta_via_total_D(unsigned p, unsigned a) {
  E1Model m;
  BigradedElement<E1Model> x(static_cast<int>(p));
  x.add(m, MultiIndex{a, p - a}, 1);
  XPoly out(p + 2, 0);
  auto dx = total_D(x, m);
  for (const auto& [g, c] : dx.terms()) out.at(g[0]) += c;
  return out;
}

inline PageRow e1_row(unsigned p) {
  PageRow row;
  row.p = p;
  auto m = e1_matrix(p);
  row.kernel = canonical_span(linalg::kernel_basis(m, p + 1));
  unsigned r = p / 2;
  row.kernel_dim_ok = row.kernel.size() == (p % 2 == 0 ? r + 1 : r);
  if (p % 2 == 0) {
    linalg::Matrix<BigRat> evens;
    for (unsigned a = 0; a <= p; a += 2) {
      std::vector<BigRat> v(p + 1, 0);
      v[a] = 1;
      evens.push_back(v);
    }
    row.even_basis_ok = canonical_span(evens) == row.kernel;
  }
  if (p >= 1) {
    auto prev = e1_matrix(p - 1);
    linalg::Matrix<BigRat> cols;
    for (unsigned a = 0; a < p; ++a) {
      std::vector<BigRat> v(p + 1);
      for (unsigned i = 0; i <= p; ++i) v[i] = prev[i][a];
      cols.push_back(v);
    }
    row.image = canonical_span(cols);
    row.exact = row.image == row.kernel;
    for (const auto& v : row.image)
      for (unsigned i = 0; i < p + 2; ++i) {
        BigRat s = 0;
        for (unsigned a = 0; a <= p; ++a) s += m[i][a] * v[a];
        if (s != 0) row.squares_to_zero = false;
      }
  } else {
    row.exact = row.kernel.size() == 1;  // H^0 = Q
  }
  for (unsigned a = 0; a <= p; ++a) {
    XPoly direct = e1_delta(p, a), via = e1_delta_via_total_D(p, a);
    for (auto& c : direct) c *= minus_one_pow(p + 1);
    if (direct != via) row.matches_total_D = false;
  }
  return row;
}

inline Json basis_json(const linalg::Matrix<BigRat>& basis) {
  Json out = Json::array();
  for (const auto& v : basis) {
    Json terms = Json::array();
    for (unsigned i = 0; i < v.size(); ++i)
      if (v[i] != 0) terms.push_back({i, to_string(v[i])});
    out.push_back(terms);
  }
  return out;
}

inline Json row_json(const PageRow& row) {
  return Json{{"p", row.p},
              {"kernel_dim", row.kernel.size()},
              {"image_dim", row.image.size()},
              {"kernel_basis", basis_json(row.kernel)},
              {"image_basis", basis_json(row.image)},
              {"kernel_dim_ok", row.kernel_dim_ok},
              {"even_basis_ok", row.even_basis_ok},
              {"exact", row.exact},
              {"squares_to_zero", row.squares_to_zero},
              {"matches_total_D", row.matches_total_D}};
}

inline bool row_ok(const PageRow& row) {
  return row.kernel_dim_ok && row.even_basis_ok && row.exact && row.squares_to_zero && row.matches_total_D;
}

/// Rows p = 0..p_max; the cohomology is Q at p = 0 and zero above.
inline VerificationReport e1_report(const std::vector<PageRow>& rows, unsigned p_max) {
  VerificationReport rep("total.e1_page", Json{{"p_max", p_max}});
  bool ok = !rows.empty();
  Json per = Json::array();
  Json cohomology = Json::array();
  for (const auto& row : rows) {
    ok &= row_ok(row);
    per.push_back(row_json(row));
    cohomology.push_back(row.kernel.size() - row.image.size());
  }
  ok &= !cohomology.empty() && cohomology[0] == 1;
  for (std::size_t i = 1; i < cohomology.size(); ++i) ok &= cohomology[i] == 0;
  rep.pass = ok;
  rep.details = {{"cohomology_dims", cohomology}, {"rows", per}};
  return rep;
}

inline VerificationReport e1_page(unsigned p_max) {
  if (p_max < 1) throw std::invalid_argument("e1_page: need p_max >= 1");
  auto start = std::chrono::steady_clock::now();
  std::vector<PageRow> rows;
  for (unsigned p = 0; p <= p_max; ++p) rows.push_back(e1_row(p));
  VerificationReport rep = e1_report(rows, p_max);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace chikit
