#pragma once

#include <random>

#include "chikit/exact/ratfunc.hpp"

namespace chikit::testing {

inline MultiPoly x(unsigned i) { return MultiPoly::variable(x_var(i)); }
inline RatFunc X(unsigned i) { return RatFunc::variable(x_var(i)); }

/// Small random polynomial in x1..x_vars.
inline MultiPoly random_poly(std::mt19937_64& rng, unsigned vars = 3, unsigned max_terms = 3, unsigned max_exp = 2) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms), var(1, vars), ex(0, max_exp);
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
  std::vector<MultiPoly::Term> ts;
  unsigned k = nterms(rng);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::pair<Var, Exp>> pw;
    for (unsigned v = 1; v <= vars; ++v) {
      Exp e = ex(rng);
      if (e && var(rng) <= 2) pw.emplace_back(x_var(v), e);
    }
    ts.push_back({Monomial::from_pairs(pw), rat(coef(rng), den(rng))});
  }
  return MultiPoly::from_terms(ts);
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, unsigned vars = 3) {
  for (;;) {
    MultiPoly p = random_poly(rng, vars);
    if (!p.is_zero()) return p;
  }
}

/// Quotient of products of random linear and quadratic factors.
inline RatFunc random_ratfunc(std::mt19937_64& rng, unsigned vars = 3) {
  RatFunc r(random_poly(rng, vars, 2, 1));
  std::uniform_int_distribution<int> nf(0, 2);
  int k = nf(rng);
  for (int i = 0; i < k; ++i) r /= RatFunc(random_nonzero_poly(rng, vars));
  return r;
}

}  // namespace chikit::testing
