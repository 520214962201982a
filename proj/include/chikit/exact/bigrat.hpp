/**
 * @file bigrat.hpp
 * @brief Arbitrary-precision integers and rationals (GMP backed).
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chikit {

using BigInt = mpz_class;
/// Always canonical: mpq_class keeps gcd(num, den) = 1 and den > 0.
using BigRat = mpq_class;

/// Thrown for division by an exact zero (scalar, polynomial or rational function).
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

inline std::string to_string(const BigRat& q) { return q.get_str(); }

inline BigRat rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const BigRat& q) { return sgn(q); }

}  // namespace chikit
