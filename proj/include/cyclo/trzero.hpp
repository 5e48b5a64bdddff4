#pragma once

// The free abelian model of TR_0^r(Z[G]): basis symbols V_t([g]) for t | r and
// [g] a conjugacy class, with the restriction, Frobenius and Verschiebung
// operators acting on basis symbols by
//
//   R_s V_t([g]) = V_t([g])                    if st | r, else 0   (level r/s)
//   F_s V_t([g]) = d V_{t/d}([g^{s/d}]),       d = gcd(s, t)       (level r/s)
//   V_s V_t([g]) = V_{st}([g])                                     (level r s)
//
// and truncated elements of the inverse limit TR_0(Z[G]).

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/groupring.hpp"
#include "cyclo/groups.hpp"
#include "cyclo/integer.hpp"
#include "cyclo/lattice.hpp"
#include "cyclo/witt.hpp"

namespace cyclo {

inline constexpr std::uint64_t kMaxLevel = 1'000'000;

/// Basis symbol V_t([g]).
struct TRKey {
  std::uint64_t t = 1;
  ClassId cls;
  auto operator<=>(const TRKey&) const = default;
};

/// Element of TR_0^r(Z[G]) in the basis V_t([g]_{r/t}).
class TRElem {
 public:
  TRElem(GroupPtr group, std::uint64_t level) : group_(std::move(group)), level_(level) {
    if (level_ == 0 || level_ > kMaxLevel)
      throw Error(ErrorCode::NotADivisor, "level must lie in [1, " + std::to_string(kMaxLevel) + "]");
  }

  static TRElem basis(GroupPtr group, std::uint64_t level, std::uint64_t t, ClassId cls, const Int& coeff = 1) {
    TRElem out(std::move(group), level);
    out.add(t, cls, coeff);
    return out;
  }

  const GroupPtr& group() const { return group_; }
  std::uint64_t level() const { return level_; }
  const std::map<TRKey, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coefficient(std::uint64_t t, ClassId cls) const {
    const auto it = coeffs_.find(TRKey{t, cls});
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  void add(std::uint64_t t, ClassId cls, const Int& coeff) {
    if (t == 0 || level_ % t != 0)
      throw Error(ErrorCode::NotADivisor, "V_" + std::to_string(t) + " at level " + std::to_string(level_));
    if (cls.value >= group_->class_count()) throw Error(ErrorCode::UnknownElement, "class id out of range");
    detail::add_term(coeffs_, TRKey{t, cls}, coeff);
  }

  TRElem& operator+=(const TRElem& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.coeffs_) detail::add_term(coeffs_, k, c);
    return *this;
  }
  TRElem& operator-=(const TRElem& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.coeffs_) detail::add_term(coeffs_, k, Int(-c));
    return *this;
  }
  friend TRElem operator+(TRElem a, const TRElem& b) { return a += b; }
  friend TRElem operator-(TRElem a, const TRElem& b) { return a -= b; }
  friend TRElem operator*(const Int& k, TRElem a) {
    if (k == 0) a.coeffs_.clear();
    for (auto& [key, c] : a.coeffs_) c *= k;
    return a;
  }

  bool operator==(const TRElem& o) const { return group_ == o.group_ && level_ == o.level_ && coeffs_ == o.coeffs_; }

 private:
  void require_compatible(const TRElem& o) const {
    detail::require_same_group(group_, o.group_);
    if (level_ != o.level_)
      throw Error(ErrorCode::NotADivisor, "levels " + std::to_string(level_) + " and " + std::to_string(o.level_) + " differ");
  }

  GroupPtr group_;
  std::uint64_t level_;
  std::map<TRKey, Int> coeffs_;
};

/// All basis keys of TR_0^r in sorted order.
inline std::vector<TRKey> basis_keys(const Group& g, std::uint64_t r) {
  std::vector<TRKey> out;
  for (auto t : divisors(r))
    for (std::uint32_t c = 0; c < g.class_count(); ++c) out.push_back(TRKey{t, ClassId{c}});
  return out;
}

/// [g]_r = V_1([g]) at level r.
inline TRElem bracket(const GroupPtr& group, ElemId g, std::uint64_t r) {
  return TRElem::basis(group, r, 1, group->class_of(g));
}

namespace detail {

inline void require_divides(std::uint64_t s, std::uint64_t r) {
  if (s == 0 || r % s != 0) throw Error(ErrorCode::NotADivisor, std::to_string(s) + " does not divide " + std::to_string(r));
}

}  // namespace detail

/// R_s : TR^r -> TR^{r/s}.
inline TRElem tr_restriction(std::uint64_t s, const TRElem& x) {
  detail::require_divides(s, x.level());
  TRElem out(x.group(), x.level() / s);
  for (const auto& [k, c] : x.coeffs())
    if (x.level() % (s * k.t) == 0) out.add(k.t, k.cls, c);
  return out;
}

/// F_s : TR^r -> TR^{r/s}.
inline TRElem tr_frobenius(std::uint64_t s, const TRElem& x) {
  detail::require_divides(s, x.level());
  TRElem out(x.group(), x.level() / s);
  const Group& g = *x.group();
  for (const auto& [k, c] : x.coeffs()) {
    const std::uint64_t d = std::gcd(s, k.t);
    out.add(k.t / d, g.power_map(s / d)(k.cls), Int(d * c));
  }
  return out;
}

/// V_s : TR^{r/s} -> TR^r, where x lives at level r/s.
inline TRElem tr_verschiebung(std::uint64_t s, const TRElem& x) {
  if (s == 0 || x.level() > kMaxLevel / s) throw Error(ErrorCode::NotADivisor, "V_" + std::to_string(s) + " exceeds the level cap");
  TRElem out(x.group(), x.level() * s);
  for (const auto& [k, c] : x.coeffs()) out.add(s * k.t, k.cls, c);
  return out;
}

/// Multiplication by V_s(1) in W_<r>(Z), realised as V_s F_s.
inline TRElem mult_by_v_one(std::uint64_t s, const TRElem& x) {
  detail::require_divides(s, x.level());
  return tr_verschiebung(s, tr_frobenius(s, x));
}

// ---------------------------------------------------------------------------
// Exactness of TR^d --V_{p^u}--> TR^r --R_p--> TR^{r/p} --> 0, r = p^u d.

struct ExactnessReport {
  std::uint64_t r = 1, p = 2, u = 0, d = 1;
  std::size_t rank_source = 0, rank_middle = 0, rank_target = 0;
  bool surjective = false;
  bool kernel_equals_image = false;
  bool v_injective = false;
  std::size_t kernel_rank = 0;
  std::size_t image_rank = 0;
  std::vector<std::string> witnesses;  // human-readable failures

  bool pass() const { return surjective && kernel_equals_image && v_injective; }
};

/// Integer matrix of a linear operator between two levels, in basis_keys order.
template <typename Op>
lattice::Matrix operator_matrix(const GroupPtr& group, std::uint64_t from_level, std::uint64_t to_level, Op op) {
  const auto src = basis_keys(*group, from_level), dst = basis_keys(*group, to_level);
  std::map<TRKey, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);
  lattice::Matrix m(dst.size(), lattice::Vector(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    const TRElem image = op(TRElem::basis(group, from_level, src[j].t, src[j].cls));
    if (image.level() != to_level) throw Error(ErrorCode::NotADivisor, "operator landed at the wrong level");
    for (const auto& [k, c] : image.coeffs()) m[row_of.at(k)][j] = c;
  }
  return m;
}

inline ExactnessReport exactness_check(const GroupPtr& group, std::uint64_t r, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  detail::require_divides(p, r);
  ExactnessReport rep;
  rep.r = r;
  rep.p = p;
  rep.d = r;
  std::uint64_t pu = 1;
  while (rep.d % p == 0) {
    rep.d /= p;
    pu *= p;
    ++rep.u;
  }
  const auto classes = group->class_count();
  rep.rank_source = divisors(rep.d).size() * classes;
  rep.rank_middle = divisors(r).size() * classes;
  rep.rank_target = divisors(r / p).size() * classes;

  const auto v = operator_matrix(group, rep.d, r, [&](const TRElem& x) { return tr_verschiebung(pu, x); });
  const auto res = operator_matrix(group, r, r / p, [&](const TRElem& x) { return tr_restriction(p, x); });

  const auto res_image = lattice::image_basis(res, rep.rank_middle);
  rep.surjective = res_image == lattice::identity(rep.rank_target);
  if (!rep.surjective) rep.witnesses.push_back("R_" + std::to_string(p) + " image has index > 1 or rank " + std::to_string(res_image.size()));

  const auto kernel = lattice::kernel_basis(res, rep.rank_middle);
  const auto v_image = lattice::image_basis(v, rep.rank_source);
  rep.kernel_rank = kernel.size();
  rep.image_rank = v_image.size();
  rep.kernel_equals_image = kernel == v_image;
  if (!rep.kernel_equals_image) rep.witnesses.push_back("ker R_p differs from im V_{p^u}");

  rep.v_injective = lattice::kernel_basis(v, rep.rank_source).empty();
  if (!rep.v_injective) rep.witnesses.push_back("V_{p^u} has a nonzero kernel");
  return rep;
}

// ---------------------------------------------------------------------------
// Truncated elements of TR_0(Z[G]) = lim_R TR_0^r(Z[G]).

/// Coefficients a_{t,[g]} of the series sum a_{t,[g]} V_t([g]) for t in S.
/// `full_support_declared` asserts that every nonzero coefficient of the
/// underlying series has t in S.
struct TRLimitElem {
  GroupPtr group;
  TruncationSet set;
  std::map<TRKey, Int> coeffs;
  bool full_support_declared = false;

  TRLimitElem(GroupPtr g, TruncationSet s, bool full = false)
      : group(std::move(g)), set(std::move(s)), full_support_declared(full) {}

  void add(std::uint64_t t, ClassId cls, const Int& c) {
    if (!set.contains(t)) throw Error(ErrorCode::IndexNotInTruncation, std::to_string(t) + " is not in " + set.to_string());
    if (cls.value >= group->class_count()) throw Error(ErrorCode::UnknownElement, "class id out of range");
    detail::add_term(coeffs, TRKey{t, cls}, c);
  }

  Int coefficient(std::uint64_t t, ClassId cls) const {
    const auto it = coeffs.find(TRKey{t, cls});
    return it == coeffs.end() ? Int(0) : it->second;
  }

  /// Coefficients restricted to the keys with t in `sub`.
  std::map<TRKey, Int> restricted_to(const TruncationSet& sub) const {
    std::map<TRKey, Int> out;
    for (const auto& [k, c] : coeffs)
      if (sub.contains(k.t)) out.emplace(k, c);
    return out;
  }

  bool operator==(const TRLimitElem& o) const {
    return group == o.group && set == o.set && coeffs == o.coeffs && full_support_declared == o.full_support_declared;
  }
};

/// pr_r : TR_0 -> TR_0^r keeps the terms with t | r.
inline TRElem limit_project(const TRLimitElem& a, std::uint64_t r) {
  for (auto t : divisors(r))
    if (!a.set.contains(t))
      throw Error(ErrorCode::LevelNotCovered, "divisor " + std::to_string(t) + " of " + std::to_string(r) + " is not in " + a.set.to_string());
  TRElem out(a.group, r);
  for (const auto& [k, c] : a.coeffs)
    if (r % k.t == 0) out.add(k.t, k.cls, c);
  return out;
}

/// F_p on truncated series:
///   coefficient of V_u([h]) = sum_{[g^p] = [h]} a_{u,[g]} (p not dividing u) + p a_{pu,[h]},
/// determined for u in S/p.
inline TRLimitElem limit_frobenius(std::uint64_t p, const TRLimitElem& a) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const auto target_elems = a.set.quotient_elements(p);
  if (target_elems.empty()) throw Error(ErrorCode::TruncationTooSmall, std::to_string(p) + " is not in " + a.set.to_string());
  const TruncationSet target = a.set.quotient(p);
  const auto phi = a.group->power_map(p);
  TRLimitElem out(a.group, target);
  bool support_inside = true;
  for (const auto& [k, c] : a.coeffs) {
    if (k.t % p != 0) {
      if (target.contains(k.t)) {
        out.add(k.t, phi(k.cls), c);
      } else {
        support_inside = false;
      }
    } else {
      out.add(k.t / p, k.cls, Int(p * c));
    }
  }
  out.full_support_declared = a.full_support_declared && support_inside;
  return out;
}

/// Re-indexes a full-support element over a larger truncation set; the new
/// coefficients are zero by the support declaration.
inline TRLimitElem limit_extend(const TRLimitElem& a, const TruncationSet& larger) {
  if (!a.full_support_declared) throw Error(ErrorCode::SupportNotDeclared, "only full-support elements extend by zero");
  if (!a.set.is_subset_of(larger)) throw Error(ErrorCode::NotASubset, a.set.to_string() + " is not a subset of " + larger.to_string());
  TRLimitElem out(a.group, larger, true);
  out.coeffs = a.coeffs;
  return out;
}

// ---------------------------------------------------------------------------
// Text formats
//
//   level=<r>; <coeff>*V<t>[<element>] + <coeff>*V<t>[<element>] + ...
//
// Terms print in (t, class id) order with the class representative; "0" for
// the zero element. Any member of a class is accepted on input.

namespace detail {

inline std::string format_terms(const Group& g, const std::map<TRKey, Int>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*V" + std::to_string(k.t) + "[" + g.class_name(k.cls) + "]";
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

struct ParsedTerm {
  Int coeff;
  std::uint64_t t;
  ClassId cls;
};

inline std::vector<ParsedTerm> parse_terms(std::string_view text, const Group& g) {
  text = trim(text);
  std::vector<ParsedTerm> out;
  if (text == "0") return out;
  std::vector<std::string_view> pieces;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == '+' && depth == 0 && i > start && trim(text.substr(start, i - start)).size() > 0 &&
        trim(text.substr(start, i - start)).back() == ']') {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  pieces.push_back(text.substr(start));
  for (auto piece : pieces) {
    piece = trim(piece);
    const auto vpos = piece.find('V');
    if (vpos == std::string_view::npos || piece.back() != ']')
      throw Error(ErrorCode::ParseError, "expected '<coeff>*V<t>[<element>]', got '" + std::string(piece) + "'");
    Int coeff = 1;
    if (vpos > 0) {
      std::string_view head = trim(piece.substr(0, vpos));
      if (head.empty() || head.back() != '*') throw Error(ErrorCode::ParseError, "missing '*' in '" + std::string(piece) + "'");
      coeff = parse_int(trim(head.substr(0, head.size() - 1)));
    }
    const auto open = piece.find('[', vpos);
    if (open == std::string_view::npos) throw Error(ErrorCode::ParseError, "missing '[' in '" + std::string(piece) + "'");
    const auto t = parse_positive(piece.substr(vpos + 1, open - vpos - 1));
    const auto enc = piece.substr(open + 1, piece.size() - open - 2);
    out.push_back({coeff, t, g.class_of(g.element(enc))});
  }
  return out;
}

}  // namespace detail

inline std::string format_tr(const TRElem& x) {
  return "level=" + std::to_string(x.level()) + "; " + detail::format_terms(*x.group(), x.coeffs());
}

inline TRElem parse_tr(std::string_view text, const GroupPtr& group) {
  text = detail::trim(text);
  const auto semi = text.find(';');
  if (text.substr(0, 6) != "level=" || semi == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "expected 'level=<r>; <terms>'");
  TRElem out(group, parse_positive(text.substr(6, semi - 6)));
  for (const auto& term : detail::parse_terms(text.substr(semi + 1), *group)) out.add(term.t, term.cls, term.coeff);
  return out;
}

inline std::string format_tr_limit_terms(const TRLimitElem& a) { return detail::format_terms(*a.group, a.coeffs); }

// File formats. Group paths are stored verbatim; callers resolve them.
//
// TR element file:             Limit element file:
//   group <path>                 group <path>
//   level=<r>; <terms>           set <truncation set>
//                                full-support yes|no
//                                elem <terms>

struct FileDirectives {
  std::vector<std::pair<std::string, std::string>> lines;  // directive, rest
};

inline FileDirectives read_directives(std::string_view text) {
  FileDirectives out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    const auto space = body.find_first_of(" \t");
    if (body.substr(0, 6) == "level=") {
      out.lines.emplace_back("level", std::string(body));
    } else {
      out.lines.emplace_back(std::string(body.substr(0, space)),
                             space == std::string_view::npos ? "" : std::string(detail::trim(body.substr(space))));
    }
  }
  return out;
}

inline std::string tr_file_group_path(std::string_view text) {
  const auto d = read_directives(text);
  if (d.lines.empty() || d.lines[0].first != "group") throw Error(ErrorCode::ParseError, "expected 'group <path>' first");
  return d.lines[0].second;
}

inline TRElem parse_tr_file(std::string_view text, const GroupPtr& group) {
  const auto d = read_directives(text);
  if (d.lines.size() != 2 || d.lines[0].first != "group" || d.lines[1].first != "level")
    throw Error(ErrorCode::ParseError, "TR element file must be 'group <path>' then 'level=<r>; <terms>'");
  return parse_tr(d.lines[1].second, group);
}

inline std::string format_tr_file(const TRElem& x, const std::string& group_path) {
  return "group " + group_path + "\n" + format_tr(x) + "\n";
}

inline TRLimitElem parse_limit_file(std::string_view text, const GroupPtr& group) {
  const auto d = read_directives(text);
  if (d.lines.size() != 4 || d.lines[0].first != "group" || d.lines[1].first != "set" || d.lines[2].first != "full-support" ||
      d.lines[3].first != "elem")
    throw Error(ErrorCode::ParseError, "limit element file must list group, set, full-support, elem in order");
  const auto& flag = d.lines[2].second;
  if (flag != "yes" && flag != "no") throw Error(ErrorCode::ParseError, "full-support must be 'yes' or 'no'");
  TRLimitElem out(group, parse_truncation_set(d.lines[1].second), flag == "yes");
  for (const auto& term : detail::parse_terms(d.lines[3].second, *group)) out.add(term.t, term.cls, term.coeff);
  return out;
}

inline std::string format_limit_file(const TRLimitElem& a, const std::string& group_path) {
  return "group " + group_path + "\nset " + a.set.to_string() + "\nfull-support " + (a.full_support_declared ? "yes" : "no") +
         "\nelem " + format_tr_limit_terms(a) + "\n";
}

}  // namespace cyclo
