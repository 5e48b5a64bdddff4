#pragma once

// Brute-force oracles that avoid the class tables and power maps used by the
// library: conjugacy is decided by searching for a conjugating element and
// powers are formed by repeated multiplication.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/groups.hpp"

namespace cyclo::testing {

inline bool brute_conjugate(const Group& g, ElemId a, ElemId b) {
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const ElemId x{h};
    if (g.mul(g.mul(x, a), g.inv(x)) == b) return true;
  }
  return false;
}

inline ElemId brute_power(const Group& g, ElemId a, std::uint64_t e) {
  ElemId out = g.identity();
  for (std::uint64_t i = 0; i < e; ++i) out = g.mul(out, a);
  return out;
}

/// g^(s^m) with s^m reduced modulo the order of g by repeated multiplication.
inline ElemId brute_iterated_power(const Group& g, ElemId a, std::uint64_t s, std::uint64_t m) {
  std::uint64_t ord = 1;
  for (ElemId x = a; x != g.identity(); x = g.mul(x, a)) ++ord;
  std::uint64_t e = 1 % ord;
  for (std::uint64_t i = 0; i < m; ++i) e = (e * (s % ord)) % ord;
  return brute_power(g, a, e);
}

/// Elements g (one per class is not assumed) satisfying the Linnell condition
/// with m, s <= exponent.
inline std::vector<ElemId> brute_linnell_elements(const Group& g) {
  std::uint64_t exponent = 1;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    std::uint64_t ord = 1;
    for (ElemId x{i}; x != g.identity(); x = g.mul(x, ElemId{i})) ++ord;
    exponent = std::lcm(exponent, ord);
  }
  std::vector<ElemId> out;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const ElemId a{i};
    for (std::uint64_t m = 1; m <= exponent; ++m) {
      bool all = true;
      for (std::uint64_t s = 1; s <= exponent && all; ++s) all = brute_conjugate(g, brute_iterated_power(g, a, s, m), a);
      if (all) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

/// Rationals p/q with |p| <= height, 1 <= q <= height, without repeats.
inline std::vector<Rational> small_rationals(int height) {
  std::vector<Rational> out;
  for (int q = 1; q <= height; ++q)
    for (int p = -height; p <= height; ++p) {
      const Rational r(p, q);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  return out;
}

/// Searches h = [[a,b],[c,d]] in SL(2,Q) with small-height entries and
/// h [[1,1],[0,1]] = [[1,k],[0,1]] h.
inline std::optional<RatMatrix2> brute_sl2_conjugator(const Rational& k, int height) {
  const auto values = small_rationals(height);
  const RatMatrix2 g(1, 1, 0, 1), gk(1, k, 0, 1);
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values)
        for (const auto& d : values) {
          if (a * d - b * c != 1) continue;
          const RatMatrix2 h(a, b, c, d);
          if (h * g == gk * h) return h;
        }
  return std::nullopt;
}

}  // namespace cyclo::testing
