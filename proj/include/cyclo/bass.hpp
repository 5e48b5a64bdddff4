#pragma once

// Obstructions to nonidentity Hattori-Stallings coefficients.
//
// The cyclotomic trace of a projective module is fixed by every Frobenius
// F_s and its V_1 slice is the Hattori-Stallings rank. For a prime p and u
// divisible by p, the V_u([g]) coefficient of F_p(a) is p a_{pu,[g]}, so a
// Frobenius-fixed series satisfies a_u = p a_{pu}; with finite support this
// forces a_u = 0 for every u > 1. What remains, a_1 = rank, must then be
// permuted by every power map [g] -> [g^s], and a permutation of n classes
// has order dividing lcm(1..n).

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/groupring.hpp"
#include "cyclo/groups.hpp"
#include "cyclo/integer.hpp"
#include "cyclo/trzero.hpp"
#include "cyclo/witt.hpp"

namespace cyclo {

/// lcm(1, ..., n), the exponent of the symmetric group on n letters; 1 for n <= 1.
inline Int minimal_exponent(std::uint64_t n) {
  Int out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out = boost::multiprecision::lcm(out, Int(k));
  return out;
}

/// base^exp mod m for an arbitrary-precision exponent.
inline std::uint64_t pow_mod(std::uint64_t base, Int exp, std::uint64_t m) {
  if (m == 1) return 0;
  Int result = 1, b = base % m;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    exp >>= 1;
    if (exp > 0) b = (b * b) % m;
  }
  return result.convert_to<std::uint64_t>();
}

/// [g] -> [g^(s^e)] on a finite group, without forming s^e.
inline ClassId iterated_power_class(const Group& g, ClassId c, std::uint64_t s, const Int& e) {
  const ElemId rep = g.conj_class(c).representative;
  return g.class_of(g.pow(rep, pow_mod(s, e, g.element_order(rep))));
}

/// The series rank[g] V_1([g]) with nothing at t > 1, as the cyclotomic trace of
/// an idempotent must look once the higher coefficients have been shown to vanish.
inline TRLimitElem trace_shadow(const GroupPtr& group, const HH0Vector& rank, const TruncationSet& set) {
  TRLimitElem out(group, set, true);
  for (const auto& [c, v] : rank.coeffs) out.add(1, c, v);
  return out;
}

// ---------------------------------------------------------------------------
// Frobenius invariance

struct InvarianceResult {
  std::uint64_t s = 1;
  bool holds = false;
  TruncationSet compared_on;
  std::optional<TRKey> mismatch;  // first key where F_s(a) and a differ
};

/// Compares F_s(a), computed prime by prime, with a. Without a support
/// declaration the comparison runs over S/s; with one, a is first extended by
/// zero so that every level of S is compared.
inline InvarianceResult frobenius_invariance_report(const TRLimitElem& a, std::uint64_t s) {
  if (s == 0) throw Error(ErrorCode::NotADivisor, "s must be positive");
  InvarianceResult out;
  out.s = s;
  TRLimitElem current = a;
  if (a.full_support_declared) {
    current = limit_extend(a, a.set.scaled(s));
  } else if (!a.set.contains(s)) {
    throw Error(ErrorCode::TruncationTooSmall, std::to_string(s) + " is not in " + a.set.to_string() + ", so S/s is empty");
  }
  const TRLimitElem original = current;
  for (auto p : prime_factors(s)) current = limit_frobenius(p, current);
  out.compared_on = current.set;
  const auto expected = original.restricted_to(current.set);
  out.holds = expected == current.coeffs;
  if (!out.holds) {
    std::set<TRKey> keys;
    for (const auto& [k, c] : expected) keys.insert(k);
    for (const auto& [k, c] : current.coeffs) keys.insert(k);
    for (const auto& k : keys) {
      const auto e = expected.find(k);
      const Int lhs = e == expected.end() ? Int(0) : e->second;
      if (lhs != current.coefficient(k.t, k.cls)) {
        out.mismatch = k;
        break;
      }
    }
  }
  return out;
}

inline bool frobenius_invariance_check(const TRLimitElem& a, std::uint64_t s) {
  return frobenius_invariance_report(a, s).holds;
}

// ---------------------------------------------------------------------------
// Vanishing cascade a_u = p a_{pu}

/// a_{t} = p a_{pt} = p^2 a_{p^2 t} = ... for the levels in `levels`, closed by
/// `exit_level`, the first p-multiple outside the declared support.
struct VanishingChain {
  TRKey start;
  std::uint64_t prime = 2;
  std::vector<std::uint64_t> levels;  // t, pt, ..., p^k t, all in S
  std::uint64_t exit_level = 0;       // p^{k+1} t, not in S
  std::vector<Int> coefficients;      // a at each level
  bool closed = false;                // every step a_u == p a_{pu} holds, with a_exit = 0
  std::optional<std::uint64_t> failing_level;
};

struct VanishingCertificate {
  enum class Verdict { AllHigherVanish, Counterexample };
  Verdict verdict = Verdict::AllHigherVanish;
  std::vector<VanishingChain> chains;
  std::optional<TRKey> counterexample;
};

/// Builds one chain per key (t, [g]) with t > 1 in S. Requires a full-support
/// declaration, which is what makes the exit coefficient zero.
inline VanishingCertificate vanishing_certificate(const TRLimitElem& a) {
  if (!a.full_support_declared)
    throw Error(ErrorCode::SupportNotDeclared, "the cascade needs the support of the series to lie inside S");
  VanishingCertificate cert;
  for (auto t : a.set.elements()) {
    if (t == 1) continue;
    const std::uint64_t p = prime_factors(t).front();
    for (std::uint32_t c = 0; c < a.group->class_count(); ++c) {
      VanishingChain chain;
      chain.start = TRKey{t, ClassId{c}};
      chain.prime = p;
      for (std::uint64_t u = t; a.set.contains(u); u *= p) {
        chain.levels.push_back(u);
        chain.coefficients.push_back(a.coefficient(u, ClassId{c}));
      }
      chain.exit_level = chain.levels.back() * p;
      chain.closed = true;
      for (std::size_t i = 0; i < chain.levels.size(); ++i) {
        const Int next = i + 1 < chain.levels.size() ? chain.coefficients[i + 1] : Int(0);
        if (chain.coefficients[i] != p * next) {
          chain.closed = false;
          chain.failing_level = chain.levels[i];
          break;
        }
      }
      if (!chain.closed && !cert.counterexample) {
        cert.verdict = VanishingCertificate::Verdict::Counterexample;
        cert.counterexample = chain.start;
      }
      cert.chains.push_back(std::move(chain));
    }
  }
  return cert;
}

/// Re-checks every chain of `cert` against `a`: steps are p-multiples inside
/// S, each equation holds, and the exit level lies outside S.
inline bool verify_certificate(const TRLimitElem& a, const VanishingCertificate& cert) {
  if (!a.full_support_declared) return false;
  for (const auto& ch : cert.chains) {
    if (ch.levels.empty() || ch.levels.front() != ch.start.t || ch.start.t % ch.prime != 0 || !is_prime(ch.prime)) return false;
    for (std::size_t i = 0; i < ch.levels.size(); ++i) {
      if (!a.set.contains(ch.levels[i])) return false;
      if (i > 0 && ch.levels[i] != ch.levels[i - 1] * ch.prime) return false;
    }
    if (ch.exit_level != ch.levels.back() * ch.prime || a.set.contains(ch.exit_level)) return false;
    bool holds = true;
    for (std::size_t i = 0; i < ch.levels.size(); ++i) {
      const Int here = a.coefficient(ch.levels[i], ch.start.cls);
      const Int next = i + 1 < ch.levels.size() ? a.coefficient(ch.levels[i + 1], ch.start.cls) : Int(0);
      holds = holds && here == ch.prime * next;
    }
    if (holds != ch.closed) return false;
  }
  const bool all_closed = std::all_of(cert.chains.begin(), cert.chains.end(), [](const auto& c) { return c.closed; });
  return all_closed == (cert.verdict == VanishingCertificate::Verdict::AllHigherVanish);
}

// ---------------------------------------------------------------------------
// Permutation condition on the support of the rank

struct PermutationStep {
  std::uint64_t s = 1;
  bool maps_into_support = false;
  bool bijective = false;
  bool coefficients_preserved = false;
  std::uint64_t cycle_order = 1;    // order of phi_s restricted to the support
  bool power_m_is_identity = false;  // phi_{s^m} fixes the support pointwise
  bool ok() const { return maps_into_support && bijective && coefficients_preserved && power_m_is_identity; }
};

struct PermutationResult {
  bool holds = true;
  Int m = 1;
  std::vector<ClassId> support;  // nonidentity support of the rank
  std::vector<PermutationStep> steps;
  std::uint64_t s_bound = 1;  // s ranges over 1..exponent(G)
};

/// For every s in 1..exponent(G), checks that [g] -> [g^s] permutes the
/// nonidentity support of `rank` preserving coefficients, and that
/// (phi_s|_S)^m = id for m = lcm(1..|S|). The finite range of s is complete
/// because g^s depends only on s mod order(g).
inline PermutationResult permutation_condition(const Group& g, const HH0Vector& rank) {
  PermutationResult out;
  for (const auto& [c, v] : rank.coeffs)
    if (c != Group::identity_class()) out.support.push_back(c);
  out.m = minimal_exponent(out.support.size());
  out.s_bound = g.exponent();
  if (out.support.empty()) return out;
  const std::set<ClassId> support(out.support.begin(), out.support.end());
  for (std::uint64_t s = 1; s <= g.exponent(); ++s) {
    PermutationStep step;
    step.s = s;
    const auto phi = g.power_map(s);
    std::set<ClassId> image;
    step.maps_into_support = true;
    step.coefficients_preserved = true;
    for (ClassId c : out.support) {
      const ClassId d = phi(c);
      image.insert(d);
      if (!support.contains(d)) step.maps_into_support = false;
      if (rank[d] != rank[c]) step.coefficients_preserved = false;
    }
    step.bijective = step.maps_into_support && image.size() == support.size();
    if (step.bijective) {
      std::uint64_t order = 1;
      for (ClassId c : out.support) {
        std::uint64_t len = 1;
        for (ClassId d = phi(c); d != c; d = phi(d)) ++len;
        order = std::lcm(order, len);
      }
      step.cycle_order = order;
    }
    step.power_m_is_identity = true;
    for (ClassId c : out.support)
      if (iterated_power_class(g, c, s, out.m) != c) step.power_m_is_identity = false;
    out.holds = out.holds && step.ok();
    out.steps.push_back(step);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linnell condition: some m with [g^{s^m}] = [g] for all s

struct ClassVerdict {
  ClassId cls;
  bool admissible = false;
  std::optional<std::uint64_t> witness_m;  // smallest admissible m
  std::optional<std::uint64_t> witness_s;  // one s failing for every tested m
  bool bound_independent = false;          // witness_s refutes every m >= 1
};

struct LinnellReport {
  std::uint64_t s_bound = 1;
  std::uint64_t m_bound = 1;
  std::vector<ClassVerdict> classes;

  std::vector<ClassId> admissible() const {
    std::vector<ClassId> out;
    for (const auto& v : classes)
      if (v.admissible) out.push_back(v.cls);
    return out;
  }
};

inline LinnellReport linnell_admissible(const Group& g, std::optional<std::uint64_t> m_max = std::nullopt) {
  LinnellReport rep;
  rep.s_bound = g.exponent();
  rep.m_bound = m_max.value_or(g.exponent());
  for (std::uint32_t i = 0; i < g.class_count(); ++i) {
    const ClassId c{i};
    ClassVerdict v;
    v.cls = c;
    for (std::uint64_t m = 1; m <= rep.m_bound && !v.admissible; ++m) {
      bool all = true;
      for (std::uint64_t s = 1; s <= rep.s_bound && all; ++s) all = iterated_power_class(g, c, s, m) == c;
      if (all) {
        v.admissible = true;
        v.witness_m = m;
      }
    }
    if (!v.admissible) {
      // Only non-identity classes get here; s = order(g) sends g^{s^m} to 1 for every m >= 1.
      v.witness_s = g.element_order(g.conj_class(c).representative);
      v.bound_independent = true;
    }
    rep.classes.push_back(v);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bezout and commutator witnesses

struct BezoutWitness {
  std::uint64_t m = 1;
  Int s;  // 2^m - 1
  Int a;  // 2^m - 1
  Int b;  // s^m - 1
  Int k;
  Int l;  // k a + l b == 1
  Int gcd;
};

/// s = 2^m - 1 and k, l with k(2^m - 1) + l(s^m - 1) = 1; k is reduced into
/// [0, s^m - 1) when s^m - 1 != 0.
inline BezoutWitness bezout_witness(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::ZeroArgument, "m must be positive");
  BezoutWitness w;
  w.m = m;
  w.a = ipow(Int(2), m) - 1;
  w.s = w.a;
  w.b = ipow(w.s, m) - 1;
  const auto eg = extended_gcd(w.a, w.b);
  w.gcd = eg.gcd;
  if (w.gcd != 1) throw Error(ErrorCode::IntegralityViolation, "2^m - 1 and s^m - 1 are not coprime");
  if (w.b == 0) {
    w.k = 1;
    w.l = 0;
    return w;
  }
  w.k = eg.x % w.b;
  if (w.k < 0) w.k += w.b;
  w.l = (1 - w.k * w.a) / w.b;
  return w;
}

/// Group operations on ElemId for a finite group.
struct FiniteGroupOps {
  const Group& group;
  using value_type = ElemId;
  ElemId mul(ElemId x, ElemId y) const { return group.mul(x, y); }
  ElemId inv(ElemId x) const { return group.inv(x); }
  ElemId pow(ElemId x, const Int& k) const { return group.pow(x, k); }
  std::string name(ElemId x) const { return group.encoding(x); }
};

/// Group operations in SL(2, Q).
struct Sl2Ops {
  using value_type = RatMatrix2;
  RatMatrix2 mul(const RatMatrix2& x, const RatMatrix2& y) const { return sl2_mul(x, y); }
  RatMatrix2 inv(const RatMatrix2& x) const { return sl2_inv(x); }
  RatMatrix2 pow(const RatMatrix2& x, const Int& k) const { return sl2_pow(x, k); }
  std::string name(const RatMatrix2& x) const { return x.encoding(); }
};

struct CommutatorCheck {
  bool ok = false;
  BezoutWitness witness;
  std::string diagnostic;
};

/// Given x g x^-1 = g^{2^m} and y g y^-1 = g^{s^m}, verifies g = [x,g]^k [y,g]^l
/// with [a, b] = a b a^-1 b^-1 and (s, k, l) from bezout_witness(m).
template <typename Ops>
CommutatorCheck commutator_witness_check(const Ops& ops, const typename Ops::value_type& g,
                                         const typename Ops::value_type& x, const typename Ops::value_type& y,
                                         std::uint64_t m) {
  CommutatorCheck out;
  out.witness = bezout_witness(m);
  const auto& w = out.witness;
  auto conj = [&](const auto& by) { return ops.mul(ops.mul(by, g), ops.inv(by)); };
  auto comm = [&](const auto& a) { return ops.mul(ops.mul(a, g), ops.mul(ops.inv(a), ops.inv(g))); };
  if (!(conj(x) == ops.pow(g, w.a + 1))) {
    out.diagnostic = "premise fails: x g x^-1 = " + ops.name(conj(x)) + " but g^(2^m) = " + ops.name(ops.pow(g, w.a + 1));
    return out;
  }
  if (!(conj(y) == ops.pow(g, w.b + 1))) {
    out.diagnostic = "premise fails: y g y^-1 = " + ops.name(conj(y)) + " but g^(s^m) = " + ops.name(ops.pow(g, w.b + 1));
    return out;
  }
  const auto rhs = ops.mul(ops.pow(comm(x), w.k), ops.pow(comm(y), w.l));
  out.ok = rhs == g;
  out.diagnostic = out.ok ? "g = [x,g]^k [y,g]^l" : "identity fails: [x,g]^k [y,g]^l = " + ops.name(rhs);
  return out;
}

inline CommutatorCheck commutator_witness_check(const Group& group, ElemId g, ElemId x, ElemId y, std::uint64_t m) {
  return commutator_witness_check(FiniteGroupOps{group}, g, x, y, m);
}

// ---------------------------------------------------------------------------
// Unipotent conjugacy in SL(2, Q)

/// g^k = [[1, k], [0, 1]] for g = [[1, 1], [0, 1]] and rational k.
inline RatMatrix2 unipotent(const Rational& k) { return {1, k, 0, 1}; }

/// A rational square root of k, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& k) {
  if (k <= 0) return std::nullopt;
  const auto num = exact_sqrt(boost::multiprecision::numerator(k));
  const auto den = exact_sqrt(boost::multiprecision::denominator(k));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

/// h with h g h^-1 = g^k when k is a rational square (h = diag(a, 1/a),
/// a^2 = k), otherwise nullopt: writing h = [[a, b], [c, d]], h g = g^k h
/// forces c = 0 and a = k d, and ad = 1 then gives k = a^2.
inline std::optional<RatMatrix2> sl2_unipotent_conjugacy(const Rational& k) {
  if (k == 0) throw Error(ErrorCode::ZeroArgument, "k must be nonzero");
  const auto a = rational_sqrt(k);
  if (!a) return std::nullopt;
  RatMatrix2 h(*a, 0, 0, 1 / *a);
  const RatMatrix2 g = unipotent(1);
  if (!(sl2_mul(sl2_mul(h, g), sl2_inv(h)) == unipotent(k)))
    throw Error(ErrorCode::IntegralityViolation, "witness failed verification");
  return h;
}

}  // namespace cyclo
