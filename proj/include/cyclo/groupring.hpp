#pragma once

// The integral group ring Z[G], square matrices over it, and the trace to
// HH_0(Z[G]) = Z[G]/[Z[G],Z[G]], the free abelian group on conjugacy classes.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/groups.hpp"
#include "cyclo/integer.hpp"

namespace cyclo {

namespace detail {

inline void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b) throw Error(ErrorCode::GroupMismatch, "operands live over different groups");
}

template <typename Key>
void add_term(std::map<Key, Int>& terms, const Key& key, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace detail

/// Finitely supported Z-linear combination of group elements.
class GroupRingElem {
 public:
  explicit GroupRingElem(GroupPtr group) : group_(std::move(group)) {}

  static GroupRingElem zero(GroupPtr group) { return GroupRingElem(std::move(group)); }
  static GroupRingElem one(GroupPtr group) {
    const ElemId e = group->identity();
    return basis(std::move(group), e);
  }
  static GroupRingElem basis(GroupPtr group, ElemId g, const Int& coeff = 1) {
    GroupRingElem out(std::move(group));
    detail::add_term(out.terms_, g, coeff);
    return out;
  }

  const GroupPtr& group() const { return group_; }
  const std::map<ElemId, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(ElemId g) const {
    const auto it = terms_.find(g);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add(ElemId g, const Int& coeff) { detail::add_term(terms_, g, coeff); }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    detail::require_same_group(group_, o.group_);
    for (const auto& [g, c] : o.terms_) detail::add_term(terms_, g, c);
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    detail::require_same_group(group_, o.group_);
    for (const auto& [g, c] : o.terms_) detail::add_term(terms_, g, Int(-c));
    return *this;
  }

  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator-(GroupRingElem a) {
    for (auto& [g, c] : a.terms_) c = -c;
    return a;
  }

  /// Convolution through the group law.
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    detail::require_same_group(a.group_, b.group_);
    GroupRingElem out(a.group_);
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) detail::add_term(out.terms_, a.group_->mul(g, h), Int(c * d));
    return out;
  }

  friend GroupRingElem operator*(const Int& k, GroupRingElem a) {
    if (k == 0) return GroupRingElem(a.group_);
    for (auto& [g, c] : a.terms_) c *= k;
    return a;
  }

  bool operator==(const GroupRingElem& o) const { return group_ == o.group_ && terms_ == o.terms_; }

 private:
  GroupPtr group_;
  std::map<ElemId, Int> terms_;
};

inline GroupRingElem gr_add(const GroupRingElem& a, const GroupRingElem& b) { return a + b; }
inline GroupRingElem gr_mul(const GroupRingElem& a, const GroupRingElem& b) { return a * b; }
inline GroupRingElem gr_neg(const GroupRingElem& a) { return -a; }

/// "3*[2,1,3] + -1*[1,2,3]" in element order; "0" when empty.
inline std::string format_group_ring(const GroupRingElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + a.group()->encoding(g);
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Element of HH_0(Z[G]): integer coefficients on conjugacy classes.
struct HH0Vector {
  std::map<ClassId, Int> coeffs;

  Int operator[](ClassId c) const {
    const auto it = coeffs.find(c);
    return it == coeffs.end() ? Int(0) : it->second;
  }
  void add(ClassId c, const Int& v) { detail::add_term(coeffs, c, v); }
  bool empty() const { return coeffs.empty(); }

  HH0Vector& operator+=(const HH0Vector& o) {
    for (const auto& [c, v] : o.coeffs) add(c, v);
    return *this;
  }
  friend HH0Vector operator+(HH0Vector a, const HH0Vector& b) { return a += b; }
  bool operator==(const HH0Vector&) const = default;
};

inline std::string format_hh0(const Group& g, const HH0Vector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [c, coeff] : v.coeffs) {
    if (!out.empty()) out += " + ";
    out += coeff.str() + "*[" + g.class_name(c) + "]";
  }
  return out;
}

/// Sums coefficients over each conjugacy class.
inline HH0Vector hh0_project(const GroupRingElem& a) {
  HH0Vector out;
  for (const auto& [g, c] : a.terms()) out.add(a.group()->class_of(g), c);
  return out;
}

// ---------------------------------------------------------------------------

/// Dense n x n matrix over Z[G].
class GRMatrix {
 public:
  GRMatrix(GroupPtr group, std::size_t n) : group_(group), n_(n), entries_(n * n, GroupRingElem(group)) {}

  static GRMatrix zero(GroupPtr group, std::size_t n) { return GRMatrix(std::move(group), n); }
  static GRMatrix identity(GroupPtr group, std::size_t n) {
    GRMatrix out(group, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = GroupRingElem::one(group);
    return out;
  }

  /// Identity plus `a` in position (i, j), i != j. Its inverse is elementary(i, j, -a).
  static GRMatrix elementary(GroupPtr group, std::size_t n, std::size_t i, std::size_t j, const GroupRingElem& a) {
    if (i == j || i >= n || j >= n) throw Error(ErrorCode::DimensionMismatch, "elementary matrix needs distinct in-range indices");
    GRMatrix out = identity(group, n);
    out.at(i, j) = a;
    return out;
  }

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return n_; }

  GroupRingElem& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const GroupRingElem& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  GroupRingElem trace() const {
    GroupRingElem out(group_);
    for (std::size_t i = 0; i < n_; ++i) out += at(i, i);
    return out;
  }

  friend GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) {
    detail::require_same_group(a.group_, b.group_);
    if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, std::to_string(a.n_) + " vs " + std::to_string(b.n_));
    GRMatrix out(a.group_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto& lhs = a.at(i, k);
        if (lhs.is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          if (!b.at(k, j).is_zero()) out.at(i, j) += lhs * b.at(k, j);
      }
    return out;
  }

  friend GRMatrix operator+(const GRMatrix& a, const GRMatrix& b) {
    detail::require_same_group(a.group_, b.group_);
    if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, std::to_string(a.n_) + " vs " + std::to_string(b.n_));
    GRMatrix out = a;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }

  bool operator==(const GRMatrix& o) const { return group_ == o.group_ && n_ == o.n_ && entries_ == o.entries_; }

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<GroupRingElem> entries_;
};

inline GRMatrix mat_mul(const GRMatrix& a, const GRMatrix& b) { return a * b; }

inline bool is_idempotent(const GRMatrix& e) { return e * e == e; }

/// E (+) F as a block-diagonal matrix.
inline GRMatrix block_diagonal(const GRMatrix& e, const GRMatrix& f) {
  detail::require_same_group(e.group(), f.group());
  GRMatrix out(e.group(), e.size() + f.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) out.at(i, j) = e.at(i, j);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out.at(e.size() + i, e.size() + j) = f.at(i, j);
  return out;
}

/// Class-summed diagonal; defined for any square matrix.
inline HH0Vector trace_to_hh0(const GRMatrix& m) { return hh0_project(m.trace()); }

/// Hattori-Stallings rank of the projective module presented by the
/// idempotent `e`. Throws NotIdempotent otherwise.
inline HH0Vector hattori_stallings_rank(const GRMatrix& e) {
  if (!is_idempotent(e)) throw Error(ErrorCode::NotIdempotent, "matrix does not satisfy E*E == E");
  return trace_to_hh0(e);
}

// ---------------------------------------------------------------------------
// Matrix file format
//
//     matrix n=<dim> group=<path>
//     <i> <j> <coeff> <element-encoding>      (0-based indices, repeated terms add)
//
// Printing emits one line per nonzero term, sorted by (i, j, element).

struct MatrixFile {
  std::string group_path;
  GRMatrix matrix;
};

struct MatrixHeader {
  std::size_t n = 0;
  std::string group_path;
};

inline MatrixHeader parse_matrix_header(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head, dim, grp, extra;
    if (!(words >> head)) continue;
    words >> dim >> grp >> extra;
    if (head != "matrix" || dim.rfind("n=", 0) != 0 || grp.rfind("group=", 0) != 0 || !extra.empty())
      throw Error(ErrorCode::ParseError, "expected 'matrix n=<dim> group=<path>'");
    return {static_cast<std::size_t>(parse_positive(dim.substr(2))), grp.substr(6)};
  }
  throw Error(ErrorCode::ParseError, "empty matrix file");
}

inline MatrixFile parse_matrix_file(std::string_view text, const GroupPtr& group) {
  const MatrixHeader header = parse_matrix_header(text);
  MatrixFile out{header.group_path, GRMatrix(group, header.n)};
  std::istringstream in{std::string(text)};
  bool seen_header = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok.size() != 4) throw Error(ErrorCode::ParseError, where + "expected '<i> <j> <coeff> <element>'");
    const Int i = parse_int(tok[0]), j = parse_int(tok[1]);
    if (i < 0 || j < 0 || i >= header.n || j >= header.n)
      throw Error(ErrorCode::DimensionMismatch, where + "index out of range");
    out.matrix.at(i.convert_to<std::size_t>(), j.convert_to<std::size_t>()).add(group->element(tok[3]), parse_int(tok[2]));
  }
  return out;
}

inline std::string format_matrix_file(const GRMatrix& m, const std::string& group_path) {
  std::string out = "matrix n=" + std::to_string(m.size()) + " group=" + group_path + "\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (const auto& [g, c] : m.at(i, j).terms())
        out += std::to_string(i) + " " + std::to_string(j) + " " + c.str() + " " + m.group()->encoding(g) + "\n";
  return out;
}

}  // namespace cyclo
