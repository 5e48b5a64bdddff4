#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclo/error.hpp"

namespace cyclo {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses an optionally signed decimal integer. The whole string must be consumed.
inline Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorCode::ParseError, "expected integer, got '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "expected integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

/// Parses `p/q` or an integer into a reduced fraction with positive denominator.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Parses a positive machine-size integer (levels, indices, dimensions).
inline std::uint64_t parse_positive(std::string_view text) {
  const Int v = parse_int(text);
  if (v <= 0 || v > Int(std::numeric_limits<std::uint64_t>::max() / 4))
    throw Error(ErrorCode::ParseError, "expected positive integer, got '" + std::string(text) + "'");
  return v.convert_to<std::uint64_t>();
}

/// Exact integer square root; nullopt unless `x` is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& x) {
  if (x < 0) return std::nullopt;
  const Int root = boost::multiprecision::sqrt(x);
  if (root * root != x) return std::nullopt;
  return root;
}

inline Int ipow(Int base, std::uint64_t exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

/// Non-negative residue of `x` modulo `m > 0`.
inline std::uint64_t mod_u64(const Int& x, std::uint64_t m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factors with multiplicity, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/// Divisors of `n` in ascending order, by trial division.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

struct ExtendedGcd {
  Int gcd;
  Int x;
  Int y;  // a*x + b*y == gcd
};

inline ExtendedGcd extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

}  // namespace cyclo
