/**
 * @file constants.hpp
 * @brief Signed powers of 2*pi*i, tracked exactly as (sign, exponent).
 */
#pragma once

#include <string>

#include "chikit/report.hpp"

namespace chikit {

/// sign * (2 pi i)^power.
struct PiConstant {
  int sign = 1;
  int power = 0;

  friend PiConstant operator*(PiConstant a, PiConstant b) { return {a.sign * b.sign, a.power + b.power}; }
  friend bool operator==(PiConstant a, PiConstant b) { return a.sign == b.sign && a.power == b.power; }
  friend bool operator!=(PiConstant a, PiConstant b) { return !(a == b); }
  PiConstant signed_by(int s) const { return {sign * s, power}; }

  std::string to_string() const {
    return std::string(sign < 0 ? "-" : "+") + "(2pi i)^" + std::to_string(power);
  }
};

inline int minus_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// c_{d,N} = (-1)^{N(N-1)/2} (2 pi i)^d.
inline PiConstant c_const(int d, int N) { return {minus_one_pow(static_cast<long>(N) * (N - 1) / 2), d}; }

/// Normalization of theta_N: (-1)^{N(N+1)/2} / (2 pi i)^N.
inline PiConstant theta_normalization(int N) { return {minus_one_pow(static_cast<long>(N) * (N + 1) / 2), -N}; }

inline VerificationReport verify_constants(int p_max, int n_max) {
  VerificationReport rep("total.constants", Json{{"p_max", p_max}, {"n_max", n_max}});
  ReportTimer timer(rep);
  long checked = 0, failed = 0;
  for (int d = 0; d <= p_max; ++d)
    for (int N = 1; N <= n_max; ++N, ++checked)
      if (c_const(d, N) != c_const(d, N - 1).signed_by(minus_one_pow(N - 1))) ++failed;
  for (int p = 0; p <= p_max; ++p)
    for (int q = 0; p + q <= p_max; ++q)
      for (int m = 0; m <= n_max; ++m)
        for (int n = 0; n <= n_max; ++n, ++checked)
          if (c_const(p + q, m + n) != (c_const(p, m) * c_const(q, n)).signed_by(minus_one_pow(m * n))) ++failed;
  // the theta normalizations obey the same product rule
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n, ++checked)
      if (theta_normalization(m + n) != (theta_normalization(m) * theta_normalization(n)).signed_by(minus_one_pow(m * n)))
        ++failed;
  rep.pass = failed == 0;
  rep.details = {{"instances", checked}, {"failures", failed}};
  return rep;
}

}  // namespace chikit
