/**
 * @file variables.hpp
 * @brief Variable index layout shared by all modules, and default rendering.
 */
#pragma once

#include <cstdint>
#include <string>

namespace chikit {

using Var = std::uint32_t;

// x_i live at i, simplex coordinates z_i at 1000+i, cube coordinates t_i at
// 2000+i, the scalar parameters of the cone pairing at 3000 and 3001.
inline constexpr Var kZBase = 1000;
inline constexpr Var kTBase = 2000;
inline constexpr Var kParamT = 3000;
inline constexpr Var kParamT2 = 3001;

inline constexpr Var x_var(unsigned i) { return i; }
inline constexpr Var z_var(unsigned i) { return kZBase + i; }
inline constexpr Var t_var(unsigned i) { return kTBase + i; }

inline std::string default_var_name(Var v) {
  if (v == kParamT) return "t";
  if (v == kParamT2) return "t'";
  if (v >= kTBase && v < kParamT) return "t" + std::to_string(v - kTBase);
  if (v >= kZBase && v < kTBase) return "z" + std::to_string(v - kZBase);
  if (v < kZBase) return "x" + std::to_string(v);
  return "v" + std::to_string(v);
}

}  // namespace chikit
