#pragma once

// Finite groups by exhaustive enumeration: permutation groups, finite
// subgroups of SL(2,Q), and a small catalog. Elements are addressed by dense
// indices into a multiplication table; conjugacy classes and the power maps
// [g] -> [g^s] are computed once at construction.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <deque>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/integer.hpp"

namespace cyclo {

struct ElemId {
  std::uint32_t index = 0;
  auto operator<=>(const ElemId&) const = default;
};

struct ClassId {
  std::uint32_t value = 0;
  auto operator<=>(const ClassId&) const = default;
};

// ---------------------------------------------------------------------------
// Permutations on {1..k}

/// Permutation stored as its image tuple. Products compose right to left:
/// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  static Permutation identity(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 1U);
    return Permutation(std::move(images));
  }

  /// Parses cycle notation such as "(1 2)(3 4 5)", "(1,2,3)" or "()".
  static Permutation from_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_space();
    while (i < text.size()) {
      if (text[i] != '(') throw Error(ErrorCode::ParseError, "bad cycle notation '" + std::string(text) + "'");
      ++i;
      std::vector<std::uint32_t> cycle;
      for (;;) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
        if (i >= text.size()) throw Error(ErrorCode::ParseError, "unterminated cycle in '" + std::string(text) + "'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) throw Error(ErrorCode::ParseError, "bad cycle notation '" + std::string(text) + "'");
        cycle.push_back(static_cast<std::uint32_t>(parse_positive(text.substr(i, j - i))));
        i = j;
      }
      cycles.push_back(std::move(cycle));
      skip_space();
    }
    std::size_t needed = degree;
    for (const auto& c : cycles)
      for (auto p : c) needed = std::max<std::size_t>(needed, p);
    Permutation result = identity(needed);
    std::vector<bool> seen(needed + 1, false);
    for (const auto& c : cycles) {
      for (auto p : c) {
        if (seen[p]) throw Error(ErrorCode::ParseError, "point " + std::to_string(p) + " repeated in '" + std::string(text) + "'");
        seen[p] = true;
      }
      for (std::size_t k = 0; k < c.size(); ++k) result.images_[c[k] - 1] = c[(k + 1) % c.size()];
    }
    return result;
  }

  /// Parses the canonical image-tuple encoding "[2,1,3]".
  static Permutation from_encoding(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw Error(ErrorCode::ParseError, "bad permutation encoding '" + std::string(text) + "'");
    std::vector<std::uint32_t> images;
    const std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
      const auto comma = body.find(',', start);
      const auto piece = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
      images.push_back(static_cast<std::uint32_t>(parse_positive(piece)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    std::vector<bool> seen(images.size() + 1, false);
    for (auto p : images) {
      if (p > images.size() || seen[p])
        throw Error(ErrorCode::ParseError, "not a permutation: '" + std::string(text) + "'");
      seen[p] = true;
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point - 1]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Same permutation on a larger domain, fixing the added points.
  Permutation extended(std::size_t degree) const {
    Permutation out = *this;
    for (std::size_t p = images_.size() + 1; p <= degree; ++p) out.images_.push_back(static_cast<std::uint32_t>(p));
    return out;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return Permutation(std::move(inv));
  }

  std::string encoding() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(images_[i]);
    }
    return out + "]";
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    assert(a.degree() == b.degree());
    std::vector<std::uint32_t> out(b.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i] - 1];
    return Permutation(std::move(out));
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// ---------------------------------------------------------------------------
// Exact 2x2 rational matrices

class RatMatrix2 {
 public:
  RatMatrix2() : RatMatrix2(1, 0, 0, 1) {}
  RatMatrix2(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static RatMatrix2 identity() { return {}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational det() const { return a_ * d_ - b_ * c_; }
  bool in_sl2() const { return det() == 1; }

  friend RatMatrix2 operator*(const RatMatrix2& x, const RatMatrix2& y) {
    return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
            x.c_ * y.b_ + x.d_ * y.d_};
  }

  bool operator==(const RatMatrix2& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }

  /// Canonical encoding "[a,b;c,d]" with reduced fractions.
  std::string encoding() const {
    return "[" + to_string(a_) + "," + to_string(b_) + ";" + to_string(c_) + "," + to_string(d_) + "]";
  }

  static RatMatrix2 from_encoding(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw Error(ErrorCode::ParseError, "bad matrix encoding '" + std::string(text) + "'");
    const std::string_view body = text.substr(1, text.size() - 2);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad matrix encoding '" + std::string(text) + "'");
    auto split = [&](std::string_view row) {
      const auto comma = row.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad matrix encoding '" + std::string(text) + "'");
      return std::pair{parse_rational(row.substr(0, comma)), parse_rational(row.substr(comma + 1))};
    };
    auto [a, b] = split(body.substr(0, semi));
    auto [c, d] = split(body.substr(semi + 1));
    return {a, b, c, d};
  }

 private:
  Rational a_, b_, c_, d_;
};

inline RatMatrix2 sl2_mul(const RatMatrix2& x, const RatMatrix2& y) {
  if (!x.in_sl2() || !y.in_sl2()) throw Error(ErrorCode::NotInSL2, "operand has determinant != 1");
  return x * y;
}

inline RatMatrix2 sl2_inv(const RatMatrix2& m) {
  if (!m.in_sl2()) throw Error(ErrorCode::NotInSL2, m.encoding() + " has determinant " + to_string(m.det()));
  return {m.d(), -m.b(), -m.c(), m.a()};
}

/// m^k for any integer k, by repeated squaring.
inline RatMatrix2 sl2_pow(const RatMatrix2& m, const Int& k) {
  RatMatrix2 base = k < 0 ? sl2_inv(m) : m;
  if (!base.in_sl2()) throw Error(ErrorCode::NotInSL2, m.encoding() + " has determinant " + to_string(m.det()));
  Int e = k < 0 ? Int(-k) : k;
  RatMatrix2 result;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Breadth-first closure of `generators` under right multiplication. Throws
/// OrderCapExceeded once more than `cap` distinct elements are found.
template <typename T>
std::vector<T> enumerate_closure(const std::vector<T>& generators, const T& identity, std::size_t cap) {
  std::vector<T> elements{identity};
  std::unordered_map<std::string, std::size_t> seen{{identity.encoding(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const T current = elements[queue.front()];
    queue.pop_front();
    for (const T& gen : generators) {
      T next = current * gen;
      auto key = next.encoding();
      if (seen.contains(key)) continue;
      if (elements.size() >= cap)
        throw Error(ErrorCode::OrderCapExceeded, "group has more than " + std::to_string(cap) + " elements");
      seen.emplace(std::move(key), elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

enum class GroupKind { permutation, matrix2x2, catalog };

struct GroupSpec {
  GroupKind kind = GroupKind::permutation;
  std::vector<std::string> generators;  // cycle notation or "a b / c d"
  std::string catalog_name;
  std::size_t degree = 0;  // permutation domain size; 0 = infer from generators
};

inline constexpr std::size_t kDefaultOrderCap = 2000;

struct ConjClass {
  ClassId id;
  ElemId representative;
  std::size_t size = 0;
  std::vector<ElemId> members;  // sorted
};

/// The map [g] -> [g^s] on class IDs.
struct ClassPowerMap {
  std::uint64_t s = 1;
  std::vector<ClassId> mapping;

  ClassId operator()(ClassId c) const { return mapping[c.value]; }

  /// (this after other): c -> this(other(c)).
  ClassPowerMap after(const ClassPowerMap& other) const {
    ClassPowerMap out{s * other.s, {}};
    out.mapping.reserve(mapping.size());
    for (ClassId c : other.mapping) out.mapping.push_back(mapping[c.value]);
    return out;
  }

  bool operator==(const ClassPowerMap& o) const { return mapping == o.mapping; }
};

/// Fully enumerated finite group. Immutable after construction.
class Group {
 public:
  /// Element kind of the carrier; catalog groups are permutation groups.
  enum class Carrier { permutation, matrix2x2 };

  Carrier carrier() const { return carrier_; }
  std::size_t order() const { return encodings_.size(); }
  ElemId identity() const { return identity_; }

  ElemId mul(ElemId a, ElemId b) const { return ElemId{table_[a.index * order() + b.index]}; }
  ElemId inv(ElemId a) const { return inverses_[a.index]; }

  ElemId pow(ElemId a, std::uint64_t k) const {
    const std::uint64_t ord = element_order(a);
    return pow_reduced(a, k % ord);
  }

  /// a^k for arbitrary (possibly negative or huge) k, reduced modulo order(a).
  ElemId pow(ElemId a, const Int& k) const { return pow_reduced(a, mod_u64(k, element_order(a))); }

  ElemId conjugate(ElemId x, ElemId by) const { return mul(mul(by, x), inv(by)); }

  /// The commutator [x, y] = x y x^-1 y^-1.
  ElemId commutator(ElemId x, ElemId y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

  std::uint64_t element_order(ElemId a) const { return orders_[a.index]; }

  /// lcm of element orders.
  std::uint64_t exponent() const { return exponent_; }

  const std::string& encoding(ElemId a) const { return encodings_[a.index]; }

  std::size_t identity_degree() const {
    return carrier_ == Carrier::permutation ? Permutation::from_encoding(encoding(identity_)).degree() : 2;
  }

  std::optional<ElemId> find(std::string_view text) const {
    std::string canonical;
    try {
      if (carrier_ == Carrier::matrix2x2) {
        canonical = RatMatrix2::from_encoding(text).encoding();
      } else if (text.find('(') != std::string_view::npos) {
        canonical = Permutation::from_cycles(text, identity_degree()).encoding();
      } else {
        canonical = Permutation::from_encoding(text).encoding();
      }
    } catch (const Error&) {
      return std::nullopt;
    }
    const auto it = index_.find(canonical);
    if (it == index_.end()) return std::nullopt;
    return ElemId{it->second};
  }

  /// Looks up an element by encoding or, for permutations, cycle notation; throws UnknownElement.
  ElemId element(std::string_view text) const {
    if (auto e = find(text)) return *e;
    throw Error(ErrorCode::UnknownElement, "'" + std::string(text) + "' is not an element of the group");
  }

  const std::vector<ElemId>& generators() const { return generators_; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  const ConjClass& conj_class(ClassId c) const { return classes_[c.value]; }
  ClassId class_of(ElemId a) const { return class_of_[a.index]; }
  static constexpr ClassId identity_class() { return ClassId{0}; }
  const std::string& class_name(ClassId c) const { return encoding(classes_[c.value].representative); }

  /// Looks up an element encoding and returns its class; throws UnknownElement.
  ClassId class_of(std::string_view text) const { return class_of(element(text)); }

  bool are_conjugate(ElemId a, ElemId b) const { return class_of(a) == class_of(b); }

  ClassPowerMap power_map(std::uint64_t s) const {
    ClassPowerMap out{s, {}};
    out.mapping.reserve(classes_.size());
    for (const auto& cls : classes_) out.mapping.push_back(class_of(pow(cls.representative, s)));
    return out;
  }

  /// [g] -> [g^s] for an arbitrary-precision exponent (s itself is not recorded).
  ClassPowerMap power_map(const Int& s) const {
    ClassPowerMap out{0, {}};
    for (const auto& cls : classes_) out.mapping.push_back(class_of(pow(cls.representative, s)));
    return out;
  }

  template <typename T>
  static Group from_elements(Carrier carrier, const std::vector<T>& elements, const std::vector<T>& gens);

 private:
  ElemId pow_reduced(ElemId a, std::uint64_t k) const {
    ElemId result = identity_, base = a;
    while (k > 0) {
      if (k & 1U) result = mul(result, base);
      k >>= 1U;
      if (k > 0) base = mul(base, base);
    }
    return result;
  }

  void compute_classes();

  Carrier carrier_ = Carrier::permutation;
  std::vector<std::string> encodings_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<ElemId> inverses_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  ElemId identity_;
  std::vector<ElemId> generators_;
  std::vector<ConjClass> classes_;
  std::vector<ClassId> class_of_;
};

template <typename T>
Group Group::from_elements(Carrier carrier, const std::vector<T>& elements, const std::vector<T>& gens) {
  Group g;
  g.carrier_ = carrier;
  const std::size_t n = elements.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::string> enc(n);
  for (std::size_t i = 0; i < n; ++i) enc[i] = elements[i].encoding();
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return enc[x] < enc[y]; });
  std::vector<T> sorted;
  sorted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted.push_back(elements[perm[i]]);
    g.encodings_.push_back(enc[perm[i]]);
    g.index_.emplace(enc[perm[i]], static_cast<std::uint32_t>(i));
  }
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = g.index_.find((sorted[i] * sorted[j]).encoding());
      if (it == g.index_.end()) throw Error(ErrorCode::NotAGroup, "carrier not closed under multiplication");
      g.table_[i * n + j] = it->second;
    }
  // The identity is the unique idempotent.
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table_[i * n + i] == i) {
      g.identity_ = ElemId{static_cast<std::uint32_t>(i)};
      break;
    }
  }
  g.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.table_[i * n + j] == g.identity_.index) {
        g.inverses_[i] = ElemId{static_cast<std::uint32_t>(j)};
        break;
      }
  g.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t k = 1;
    std::uint32_t x = static_cast<std::uint32_t>(i);
    while (x != g.identity_.index) {
      x = g.table_[x * n + i];
      ++k;
    }
    g.orders_[i] = k;
    g.exponent_ = std::lcm(g.exponent_, k);
  }
  for (const T& gen : gens) g.generators_.push_back(ElemId{g.index_.at(gen.encoding())});
  g.compute_classes();
  return g;
}

inline void Group::compute_classes() {
  const std::size_t n = order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjClass> found;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    ConjClass cls;
    for (std::uint32_t h = 0; h < n; ++h) {
      const ElemId y = conjugate(ElemId{x}, ElemId{h});
      if (!assigned[y.index]) {
        assigned[y.index] = true;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.size = cls.members.size();
    cls.representative = cls.members.front();  // element indices follow encoding order
    found.push_back(std::move(cls));
  }
  std::sort(found.begin(), found.end(), [&](const ConjClass& a, const ConjClass& b) {
    const bool a_id = a.representative == identity_, b_id = b.representative == identity_;
    if (a_id != b_id) return a_id;
    if (a.size != b.size) return a.size < b.size;
    return encoding(a.representative) < encoding(b.representative);
  });
  class_of_.assign(n, ClassId{});
  for (std::uint32_t i = 0; i < found.size(); ++i) {
    found[i].id = ClassId{i};
    for (ElemId m : found[i].members) class_of_[m.index] = ClassId{i};
  }
  classes_ = std::move(found);
}

using GroupPtr = std::shared_ptr<const Group>;

// ---------------------------------------------------------------------------
// Construction from specs

namespace detail {

inline RatMatrix2 parse_matrix_generator(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() != 5 || tokens[2] != "/")
    throw Error(ErrorCode::ParseError, "matrix generator must read 'a b / c d', got '" + std::string(text) + "'");
  return {parse_rational(tokens[0]), parse_rational(tokens[1]), parse_rational(tokens[3]), parse_rational(tokens[4])};
}

inline std::vector<std::string> catalog_generators(std::string_view name, std::size_t& degree) {
  std::string key(name);
  std::erase(key, '_');
  auto number = [&](std::size_t from) -> std::size_t {
    if (key.size() <= from) throw Error(ErrorCode::ParseError, "unknown catalog group '" + std::string(name) + "'");
    return static_cast<std::size_t>(parse_positive(std::string_view(key).substr(from)));
  };
  auto cycle = [](std::size_t from, std::size_t to) {
    std::string out = "(";
    for (std::size_t i = from; i <= to; ++i) out += (i > from ? " " : "") + std::to_string(i);
    return out + ")";
  };
  if (key == "trivial" || key == "1") {
    degree = 1;
    return {};
  }
  if (key == "Q8") {
    // Regular representation of the quaternion group on 8 points.
    degree = 8;
    return {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"};
  }
  if (key.front() == 'C') {
    const std::size_t n = number(1);
    degree = n;
    if (n == 1) return {};
    return {cycle(1, n)};
  }
  if (key.front() == 'S') {
    const std::size_t n = number(1);
    degree = n;
    if (n == 1) return {};
    if (n == 2) return {"(1 2)"};
    return {"(1 2)", cycle(1, n)};
  }
  if (key.front() == 'A') {
    const std::size_t n = number(1);
    degree = n;
    std::vector<std::string> gens;
    for (std::size_t i = 3; i <= n; ++i) gens.push_back("(1 2 " + std::to_string(i) + ")");
    return gens;
  }
  if (key.front() == 'D') {
    // Dihedral group of order 2n acting on the vertices of an n-gon.
    const std::size_t n = number(1);
    if (n < 3) throw Error(ErrorCode::ParseError, "dihedral catalog groups need n >= 3");
    degree = n;
    std::string reflection;
    for (std::size_t i = 1; i < n + 1 - i; ++i) reflection += "(" + std::to_string(i) + " " + std::to_string(n + 1 - i) + ")";
    return {cycle(1, n), reflection};
  }
  throw Error(ErrorCode::ParseError, "unknown catalog group '" + std::string(name) + "'");
}

inline Group build_permutation_group(const std::vector<std::string>& generators, std::size_t degree, std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& text : generators) gens.push_back(Permutation::from_cycles(text, degree));
  std::size_t k = std::max<std::size_t>(degree, 1);
  for (const auto& p : gens) k = std::max(k, p.degree());
  for (auto& p : gens) p = p.extended(k);
  const auto elements = enumerate_closure(gens, Permutation::identity(k), cap);
  return Group::from_elements(Group::Carrier::permutation, elements, gens);
}

}  // namespace detail

/// Enumerates the group described by `spec`.
inline Group build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap) {
  switch (spec.kind) {
    case GroupKind::permutation:
      return detail::build_permutation_group(spec.generators, spec.degree, order_cap);
    case GroupKind::catalog: {
      std::size_t degree = 0;
      const auto gens = detail::catalog_generators(spec.catalog_name, degree);
      return detail::build_permutation_group(gens, degree, order_cap);
    }
    case GroupKind::matrix2x2: {
      std::vector<RatMatrix2> gens;
      for (const auto& text : spec.generators) {
        RatMatrix2 m = detail::parse_matrix_generator(text);
        if (!m.in_sl2())
          throw Error(ErrorCode::NotAGroup, "generator " + m.encoding() + " has determinant " + to_string(m.det()));
        gens.push_back(std::move(m));
      }
      const auto elements = enumerate_closure(gens, RatMatrix2::identity(), order_cap);
      return Group::from_elements(Group::Carrier::matrix2x2, elements, gens);
    }
  }
  throw Error(ErrorCode::ParseError, "unknown group kind");
}

inline GroupPtr make_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap) {
  return std::make_shared<const Group>(build_group(spec, order_cap));
}

inline GroupPtr catalog_group(std::string_view name) {
  GroupSpec spec;
  spec.kind = GroupKind::catalog;
  spec.catalog_name = std::string(name);
  return make_group(spec);
}

/// Parses the group spec text format:
///
///     # comment
///     group permutation | group matrix2x2 | group catalog <name>
///     degree <k>                 (permutation only, optional)
///     gen <cycle notation>       (permutation)
///     gen a b / c d              (matrix2x2; entries p/q or integers)
inline GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string directive;
    if (!(words >> directive)) continue;
    std::string rest;
    std::getline(words, rest);
    const auto first = rest.find_first_not_of(" \t");
    rest = first == std::string::npos ? "" : rest.substr(first);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.pop_back();
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (directive != "group") throw Error(ErrorCode::ParseError, where + "expected 'group <kind>'");
      std::istringstream kind_words(rest);
      std::string kind, name, extra;
      kind_words >> kind >> name >> extra;
      if (!extra.empty()) throw Error(ErrorCode::ParseError, where + "trailing text after group header");
      if (kind == "permutation") {
        spec.kind = GroupKind::permutation;
      } else if (kind == "matrix2x2") {
        spec.kind = GroupKind::matrix2x2;
      } else if (kind == "catalog") {
        spec.kind = GroupKind::catalog;
        if (name.empty()) throw Error(ErrorCode::ParseError, where + "catalog group needs a name");
        spec.catalog_name = name;
        name.clear();
      } else {
        throw Error(ErrorCode::ParseError, where + "unknown group kind '" + kind + "'");
      }
      if (!name.empty()) throw Error(ErrorCode::ParseError, where + "only catalog groups take a name");
      have_header = true;
      continue;
    }
    if (directive == "gen") {
      if (spec.kind == GroupKind::catalog) throw Error(ErrorCode::ParseError, where + "catalog groups take no generators");
      if (rest.empty()) throw Error(ErrorCode::ParseError, where + "empty generator");
      spec.generators.push_back(rest);
    } else if (directive == "degree") {
      if (spec.kind != GroupKind::permutation) throw Error(ErrorCode::ParseError, where + "degree applies to permutation groups only");
      spec.degree = static_cast<std::size_t>(parse_positive(rest));
    } else {
      throw Error(ErrorCode::ParseError, where + "unknown directive '" + directive + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'group' header");
  return spec;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupPtr load_group(const std::string& path, std::size_t order_cap = kDefaultOrderCap) {
  return make_group(parse_group_spec(read_file(path)), order_cap);
}

}  // namespace cyclo
