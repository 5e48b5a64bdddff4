#pragma once

// Big Witt vectors W_S(Z) over finite divisor-closed truncation sets S.
//
// Ring operations are transported through the ghost map
//     w_n = sum_{d | n} d * a_d^(n/d),
// which is injective on W_S(Z). Inverting it recovers a_n from w_n one index
// at a time; the division by n is exact for every ghost vector that comes
// from a Witt vector, and a remainder raises IntegralityViolation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/integer.hpp"

namespace cyclo {

inline constexpr std::uint64_t kMaxTruncationElement = 1'000'000;
inline constexpr std::size_t kMaxTruncationSize = 256;

/// Finite, nonempty, divisor-closed set of positive integers.
class TruncationSet {
 public:
  TruncationSet() : elems_{1} {}

  /// Validates divisor closure and, unless disabled, the size caps.
  static TruncationSet from_elements(std::vector<std::uint64_t> elems, bool enforce_caps = true) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw Error(ErrorCode::ParseError, "truncation set must be nonempty");
    if (elems.front() == 0) throw Error(ErrorCode::ParseError, "truncation set entries must be positive");
    if (enforce_caps && (elems.back() > kMaxTruncationElement || elems.size() > kMaxTruncationSize))
      throw Error(ErrorCode::ParseError, "truncation set exceeds the size caps");
    TruncationSet s;
    s.elems_ = std::move(elems);
    for (auto n : s.elems_)
      for (auto d : divisors(n))
        if (!s.contains(d))
          throw Error(ErrorCode::ParseError, std::to_string(n) + " in truncation set but its divisor " + std::to_string(d) + " is not");
    return s;
  }

  /// <r>: the divisors of r.
  static TruncationSet divisors_of(std::uint64_t r) { return from_elements(divisors(r)); }

  /// {1, ..., n}.
  static TruncationSet up_to(std::uint64_t n) {
    std::vector<std::uint64_t> e(n);
    std::iota(e.begin(), e.end(), 1U);
    return from_elements(std::move(e));
  }

  const std::vector<std::uint64_t>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  std::uint64_t max() const { return elems_.back(); }

  bool contains(std::uint64_t n) const { return std::binary_search(elems_.begin(), elems_.end(), n); }

  std::size_t index_of(std::uint64_t n) const {
    const auto it = std::lower_bound(elems_.begin(), elems_.end(), n);
    if (it == elems_.end() || *it != n)
      throw Error(ErrorCode::IndexNotInTruncation, std::to_string(n) + " is not in " + to_string());
    return static_cast<std::size_t>(it - elems_.begin());
  }

  bool is_subset_of(const TruncationSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  /// S/s = {n : s*n in S}. Empty when s is not in S.
  std::vector<std::uint64_t> quotient_elements(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    for (auto n : elems_)
      if (n % s == 0) out.push_back(n / s);
    return out;
  }

  /// S/s as a truncation set; requires s in S.
  TruncationSet quotient(std::uint64_t s) const {
    if (!contains(s)) throw Error(ErrorCode::IndexNotInTruncation, std::to_string(s) + " is not in " + to_string());
    TruncationSet out;
    out.elems_ = quotient_elements(s);
    return out;
  }

  /// The smallest divisor-closed set containing s*n for all n in S. Internal
  /// working sets are exempt from the input caps.
  TruncationSet scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    for (auto n : elems_)
      for (auto d : divisors(s * n)) out.push_back(d);
    return from_elements(std::move(out), false);
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) out += (i ? "," : "") + std::to_string(elems_[i]);
    return out + "}";
  }

  bool operator==(const TruncationSet&) const = default;

 private:
  std::vector<std::uint64_t> elems_;
};

/// Parses `divisors-of:<r>` or `{1,2,3,...}`.
inline TruncationSet parse_truncation_set(std::string_view text) {
  constexpr std::string_view prefix = "divisors-of:";
  if (text.substr(0, prefix.size()) == prefix) return TruncationSet::divisors_of(parse_positive(text.substr(prefix.size())));
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error(ErrorCode::ParseError, "truncation set must be 'divisors-of:<r>' or '{1,2,...}'");
  std::vector<std::uint64_t> elems;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    elems.push_back(parse_positive(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return TruncationSet::from_elements(std::move(elems));
}

struct GhostVector {
  TruncationSet set;
  std::vector<Int> values;  // aligned with set.elements()

  Int at(std::uint64_t n) const { return values[set.index_of(n)]; }
  bool operator==(const GhostVector&) const = default;
};

class WittVector {
 public:
  explicit WittVector(TruncationSet set) : set_(std::move(set)), coords_(set_.size()) {}
  WittVector(TruncationSet set, std::vector<Int> coords) : set_(std::move(set)), coords_(std::move(coords)) {
    if (coords_.size() != set_.size()) throw Error(ErrorCode::TruncationMismatch, "coordinate count differs from |S|");
  }

  static WittVector zero(const TruncationSet& s) { return WittVector(s); }
  static WittVector one(const TruncationSet& s) {
    WittVector out(s);
    out.coords_[0] = 1;
    return out;
  }

  const TruncationSet& set() const { return set_; }
  const std::vector<Int>& coords() const { return coords_; }
  Int coord(std::uint64_t n) const { return coords_[set_.index_of(n)]; }
  void set_coord(std::uint64_t n, Int value) { coords_[set_.index_of(n)] = std::move(value); }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& a) { return a == 0; });
  }

  bool operator==(const WittVector&) const = default;

 private:
  TruncationSet set_;
  std::vector<Int> coords_;
};

inline GhostVector ghost(const WittVector& x) {
  const auto& elems = x.set().elements();
  GhostVector out{x.set(), std::vector<Int>(elems.size())};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto n = elems[i];
    Int w = 0;
    for (auto d : divisors(n)) {
      const Int& a = x.coord(d);
      if (a != 0) w += Int(d) * ipow(a, n / d);
    }
    out.values[i] = std::move(w);
  }
  return out;
}

/// Inverse of the ghost map. Throws IntegralityViolation if `w` is not the
/// ghost vector of an integral Witt vector.
inline WittVector from_ghost(const GhostVector& w) {
  const auto& elems = w.set.elements();
  WittVector out(w.set);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto n = elems[i];
    Int rest = w.values[i];
    for (auto d : divisors(n)) {
      if (d == n) break;
      const Int& a = out.coord(d);
      if (a != 0) rest -= Int(d) * ipow(a, n / d);
    }
    if (rest % n != 0)
      throw Error(ErrorCode::IntegralityViolation, "ghost component " + std::to_string(n) + " not divisible by " + std::to_string(n));
    out.set_coord(n, rest / n);
  }
  return out;
}

namespace detail {

inline void require_same_set(const WittVector& x, const WittVector& y) {
  if (!(x.set() == y.set()))
    throw Error(ErrorCode::TruncationMismatch, x.set().to_string() + " vs " + y.set().to_string());
}

template <typename Op>
WittVector ghostwise(const WittVector& x, const WittVector& y, Op op) {
  require_same_set(x, y);
  GhostVector gx = ghost(x);
  const GhostVector gy = ghost(y);
  for (std::size_t i = 0; i < gx.values.size(); ++i) gx.values[i] = op(gx.values[i], gy.values[i]);
  return from_ghost(gx);
}

}  // namespace detail

inline WittVector w_add(const WittVector& x, const WittVector& y) {
  return detail::ghostwise(x, y, [](const Int& a, const Int& b) { return Int(a + b); });
}

inline WittVector w_mul(const WittVector& x, const WittVector& y) {
  return detail::ghostwise(x, y, [](const Int& a, const Int& b) { return Int(a * b); });
}

inline WittVector w_neg(const WittVector& x) {
  GhostVector g = ghost(x);
  for (auto& v : g.values) v = -v;
  return from_ghost(g);
}

/// The image of the integer k under Z -> W_S(Z): ghost (k, k, ..., k).
inline WittVector witt_integer(const Int& k, const TruncationSet& s) {
  return from_ghost(GhostVector{s, std::vector<Int>(s.size(), k)});
}

/// F_s : W_S -> W_{S/s}, characterised by ghost_n(F_s x) = ghost_{sn}(x).
inline WittVector w_frobenius(std::uint64_t s, const WittVector& x) {
  const TruncationSet target = x.set().quotient(s);
  const GhostVector gx = ghost(x);
  GhostVector out{target, {}};
  for (auto n : target.elements()) out.values.push_back(gx.at(s * n));
  return from_ghost(out);
}

/// V_s : W_{S/s} -> W_S, (V_s x)_n = x_{n/s} if s | n and 0 otherwise.
inline WittVector w_verschiebung(std::uint64_t s, const WittVector& x, const TruncationSet& target) {
  if (!target.contains(s))
    throw Error(ErrorCode::TruncationMismatch, std::to_string(s) + " is not in " + target.to_string());
  if (!(target.quotient(s) == x.set()))
    throw Error(ErrorCode::TruncationMismatch, "V_" + std::to_string(s) + " expects a vector over " +
                                                   target.quotient(s).to_string() + ", got " + x.set().to_string());
  WittVector out(target);
  for (auto n : x.set().elements()) out.set_coord(s * n, x.coord(n));
  return out;
}

/// R^S_T : forgets coordinates outside T.
inline WittVector w_restrict(const WittVector& x, const TruncationSet& t) {
  if (!t.is_subset_of(x.set()))
    throw Error(ErrorCode::NotASubset, t.to_string() + " is not a subset of " + x.set().to_string());
  WittVector out(t);
  for (auto n : t.elements()) out.set_coord(n, x.coord(n));
  return out;
}

/// V_s(1): coordinate 1 at index s.
inline WittVector v_one(std::uint64_t s, const TruncationSet& set) {
  WittVector out(set);
  out.set_coord(s, 1);
  return out;
}

// Text format: "n1:a1,n2:a2,..." listing nonzero coordinates in index order;
// "0" for the zero vector.

inline std::string format_witt(const WittVector& x) {
  std::string out;
  const auto& elems = x.set().elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (x.coords()[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(elems[i]) + ":" + x.coords()[i].str();
  }
  return out.empty() ? "0" : out;
}

inline std::string format_ghost(const GhostVector& g) {
  std::string out;
  const auto& elems = g.set.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? "," : "") + std::to_string(elems[i]) + ":" + g.values[i].str();
  return out;
}

/// Parses "n1:a1,n2:a2,..." over `set`; unlisted coordinates are zero and
/// repeated indices are rejected.
inline WittVector parse_witt(std::string_view text, const TruncationSet& set) {
  WittVector out(set);
  if (text == "0") return out;
  std::vector<bool> seen(set.size(), false);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'n:a', got '" + std::string(item) + "'");
    const auto n = parse_positive(item.substr(0, colon));
    const auto idx = set.index_of(n);
    if (seen[idx]) throw Error(ErrorCode::ParseError, "index " + std::to_string(n) + " given twice");
    seen[idx] = true;
    out.set_coord(n, parse_int(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace cyclo
