// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// All comparisons are exact. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "cyclo/bass.hpp"
#include "golden_support.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace cyclo {
namespace {

using testing::catalog;
using testing::catalog_names;
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) first_failure = what;
    pass = pass && cond;
  }
};

TRElem random_tr(Rng& rng, const GroupPtr& g, std::uint64_t level, int terms = 4) {
  TRElem out(g, level);
  const auto divs = divisors(level);
  for (int i = 0; i < terms; ++i) out.add(rng.pick(divs), rng.class_id(*g), Int(rng.between(-5, 5)));
  return out;
}

/// Class of an element, found by searching for a conjugating element.
ClassId brute_class(const Group& g, ElemId e) {
  for (const auto& c : g.classes())
    if (testing::brute_conjugate(g, c.representative, e)) return c.id;
  throw std::logic_error("element in no class");
}

/// F_s V_t [g] = d V_{t/d}[g^{s/d}] at level r/s, from repeated multiplication.
TRElem oracle_frobenius_basis(const GroupPtr& g, std::uint64_t r, std::uint64_t s, std::uint64_t t, ClassId c) {
  const std::uint64_t d = std::gcd(s, t);
  const ElemId power = testing::brute_power(*g, g->conj_class(c).representative, s / d);
  return TRElem::basis(g, r / s, t / d, brute_class(*g, power), Int(d));
}

// --------------------------------------------------------------------------

void operator_laws(Outcome& o) {
  Rng rng(101);
  int instances = 0, zero_law = 0, oracle_checks = 0;
  while (instances < 1200) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const std::uint64_t r = static_cast<std::uint64_t>(rng.between(1, 24));
    const auto divs = divisors(r);
    const std::uint64_t s = rng.pick(divs), t = rng.pick(divs), d = std::gcd(s, t);
    const auto x = random_tr(rng, g, r);
    ++instances;
    o.require(tr_restriction(1, x) == x && tr_frobenius(1, x) == x && tr_verschiebung(1, x) == x, "(i) identities");
    const auto z = random_tr(rng, g, r / t);
    if (r % (s * t) == 0) {
      o.require(tr_restriction(s, tr_restriction(t, x)) == tr_restriction(s * t, x), "(ii) R_s R_t");
      o.require(tr_frobenius(s, tr_frobenius(t, x)) == tr_frobenius(s * t, x), "(ii) F_s F_t");
      o.require(tr_restriction(s, tr_frobenius(t, x)) == tr_frobenius(t, tr_restriction(s, x)), "(ii) R F = F R");
      const auto y = random_tr(rng, g, r / (s * t));
      o.require(tr_verschiebung(s, tr_verschiebung(t, y)) == tr_verschiebung(s * t, y), "(ii) V_s V_t");
      o.require(tr_restriction(s, tr_verschiebung(t, z)) == tr_verschiebung(t, tr_restriction(s, z)), "(ii) R V = V R");
    } else {
      ++zero_law;
      o.require(tr_restriction(s, tr_verschiebung(t, z)).is_zero(), "(iv) R_s V_t = 0");
    }
    o.require(tr_frobenius(s, tr_verschiebung(t, z)) == Int(d) * tr_verschiebung(t / d, tr_frobenius(s / d, z)), "(iii) F_s V_t");
    // Basis action against repeated multiplication and conjugator search.
    const auto keys = basis_keys(*g, r);
    const TRKey k = rng.pick(keys);
    o.require(tr_frobenius(s, TRElem::basis(g, r, k.t, k.cls)) == oracle_frobenius_basis(g, r, s, k.t, k.cls), "F oracle");
    ++oracle_checks;
  }
  o.note << instances << " instances, " << zero_law << " zero-law cases, " << oracle_checks << " oracle checks";
  o.require(zero_law > 0, "no zero-law case drawn");
}

void bracket_laws(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name);
    for (std::uint64_t r = 1; r <= 24; ++r)
      for (auto t : divisors(r))
        for (std::uint32_t i = 0; i < g->order(); ++i) {
          const ElemId x{i};
          o.require(tr_restriction(t, bracket(g, x, r)) == bracket(g, x, r / t), name + " R_t bracket");
          const ElemId xt = testing::brute_power(*g, x, t);
          o.require(tr_frobenius(t, bracket(g, x, r)) == TRElem::basis(g, r / t, 1, brute_class(*g, xt)), name + " F_t bracket");
          checks += 2;
        }
  }
  o.note << checks << " identities over " << catalog_names().size() << " groups";
}

void exactness(Outcome& o) {
  std::size_t cases = 0;
  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name);
    for (std::uint64_t r = 2; r <= 24; ++r)
      for (auto p : prime_factors(r)) {
        const auto rep = exactness_check(g, r, p);
        o.require(rep.pass(), name + " r=" + std::to_string(r) + " p=" + std::to_string(p));
        // Rank count of the free model: one generator per (t | r, class).
        o.require(rep.rank_middle == divisors(r).size() * g->class_count(), "rank of TR^r");
        o.require(rep.kernel_rank == rep.rank_source, "kernel rank");
        ++cases;
      }
  }
  o.note << cases << " (group, r, p) cases";
}

GhostVector oracle_ghost(const WittVector& x) {
  GhostVector w{x.set(), {}};
  for (auto n : x.set().elements()) {
    Int sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) {
        Int term = 1;
        for (std::uint64_t i = 0; i < n / d; ++i) term *= x.coord(d);
        sum += Int(d) * term;
      }
    w.values.push_back(sum);
  }
  return w;
}

WittVector random_witt(Rng& rng, const TruncationSet& s, int bound = 4) {
  WittVector x(s);
  for (auto n : s.elements())
    if (rng.coin(0.6)) x.set_coord(n, Int(rng.between(-bound, bound)));
  return x;
}

void witt_suite(Outcome& o) {
  Rng rng(104);
  const std::vector<std::uint64_t> levels{4, 6, 12, 30};
  int pairs = 0;
  for (; pairs < 500; ++pairs) {
    const auto set = TruncationSet::divisors_of(levels[static_cast<std::size_t>(pairs) % levels.size()]);
    const auto x = random_witt(rng, set), y = random_witt(rng, set);
    const auto gx = oracle_ghost(x), gy = oracle_ghost(y);
    o.require(ghost(x) == gx, "ghost map against direct sum");
    const auto gs = oracle_ghost(w_add(x, y)), gp = oracle_ghost(w_mul(x, y));
    for (std::size_t i = 0; i < set.size(); ++i) {
      o.require(gs.values[i] == gx.values[i] + gy.values[i], "ghost additive");
      o.require(gp.values[i] == gx.values[i] * gy.values[i], "ghost multiplicative");
    }
    o.require(from_ghost(gx) == x, "ghost injective");
    o.require((w_add(x, y) == x) == (y == WittVector::zero(set)), "additive cancellation");
  }
  int ops = 0;
  for (auto r : levels) {
    const auto set = TruncationSet::divisors_of(r);
    for (auto s : set.elements()) {
      const auto small = set.quotient(s);
      const auto u = random_witt(rng, small);
      o.require(w_frobenius(s, w_verschiebung(s, u, set)) == w_mul(witt_integer(s, small), u), "F_s V_s = s");
      for (auto t : set.elements()) {
        const auto l = std::lcm(s, t);
        if (!set.contains(l)) continue;
        const Int gcd = std::gcd(s, t);
        o.require(w_mul(v_one(s, set), v_one(t, set)) == w_mul(witt_integer(gcd, set), v_one(l, set)), "v_one product");
        for (int i = 0; i < 3; ++i) {
          const auto& g = catalog(rng.pick(catalog_names()));
          const auto x = random_tr(rng, g, r);
          o.require(mult_by_v_one(s, mult_by_v_one(t, x)) == gcd * mult_by_v_one(l, x), "mult_by_v_one composition");
        }
        ++ops;
      }
    }
  }
  o.note << pairs << " random pairs, " << ops << " (s,t) operator cases";
}

HH0Vector random_hh0(Rng& rng, const Group& g) {
  HH0Vector v;
  const auto n = rng.between(1, 3);
  for (std::int64_t i = 0; i < n; ++i) v.add(rng.class_id(g), Int(rng.between(-3, 3)));
  return v;
}

bool fully_invariant(const TRLimitElem& a) {
  for (auto s : a.set.elements())
    if (!frobenius_invariance_check(a, s)) return false;
  return true;
}

void vanishing_suite(Outcome& o) {
  Rng rng(105);
  int invariant = 0, rejected_by_invariance = 0, refuted = 0, injected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const auto set = TruncationSet::up_to(static_cast<std::uint64_t>(rng.between(4, 16)));
    const HH0Vector rank = rng.coin() ? hattori_stallings_rank(testing::random_idempotent(rng, g, 2)) : random_hh0(rng, *g);
    const auto shadow = trace_shadow(g, rank, set);
    if (fully_invariant(shadow)) {
      ++invariant;
      const auto cert = vanishing_certificate(shadow);
      o.require(cert.verdict == VanishingCertificate::Verdict::AllHigherVanish, "invariant element refuted");
      o.require(verify_certificate(shadow, cert), "certificate does not verify");
    }
    // Inject support at t > 1.
    auto bad = shadow;
    const auto& elems = set.elements();
    const std::uint64_t t = elems[1 + rng.index(elems.size() - 1)];
    Int c = 0;
    while (c == 0) c = rng.between(-4, 4);
    bad.add(t, rng.class_id(*g), c);
    ++injected;
    const bool not_invariant = !fully_invariant(bad);
    rejected_by_invariance += not_invariant ? 1 : 0;
    const auto cert = vanishing_certificate(bad);
    const bool caught = cert.verdict == VanishingCertificate::Verdict::Counterexample && verify_certificate(bad, cert);
    refuted += caught ? 1 : 0;
    o.require(not_invariant || caught, "injected support accepted");
  }
  // Elements satisfying the cascade inside S are still refuted at the top.
  const auto& g = catalog("S3");
  for (std::uint64_t top : {2, 4, 8, 16}) {
    TRLimitElem a(g, TruncationSet::divisors_of(16), true);
    for (std::uint64_t u = 2; u <= top; u *= 2) a.add(u, ClassId{1}, Int(top / u));
    const auto cert = vanishing_certificate(a);
    const bool caught = !fully_invariant(a) || cert.verdict == VanishingCertificate::Verdict::Counterexample;
    o.require(caught && verify_certificate(a, cert), "cascade element accepted");
    rejected_by_invariance += fully_invariant(a) ? 0 : 1;
    refuted += cert.verdict == VanishingCertificate::Verdict::Counterexample ? 1 : 0;
    ++injected;
  }
  o.require(invariant > 0, "no invariant samples");
  o.note << invariant << " invariant elements certified, " << injected << " injections (" << rejected_by_invariance
         << " fail invariance, " << refuted << " refuted by the certificate)";
}

void finite_bass(Outcome& o) {
  for (const auto& name : catalog_names()) {
    const auto& g = *catalog(name);
    const auto rep = linnell_admissible(g);
    o.require(rep.admissible() == std::vector<ClassId>{Group::identity_class()}, name + " admissible set");
    std::set<ClassId> brute;
    for (ElemId e : testing::brute_linnell_elements(g)) brute.insert(brute_class(g, e));
    o.require(brute == std::set<ClassId>{Group::identity_class()}, name + " brute-force oracle");
  }
  Rng rng(106);
  int idempotents = 0, random_ranks = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const bool from_idempotent = trial % 2 == 0;
    const HH0Vector rank =
        from_idempotent ? hattori_stallings_rank(testing::random_idempotent(rng, g, 1 + rng.index(3))) : random_hh0(rng, *g);
    (from_idempotent ? idempotents : random_ranks)++;
    const auto shadow = trace_shadow(g, rank, TruncationSet::up_to(g->exponent()));
    bool on_identity = true;
    for (const auto& [c, v] : rank.coeffs) on_identity = on_identity && c == Group::identity_class();
    o.require(fully_invariant(shadow) == on_identity, "invariance differs from identity support");
    o.require(permutation_condition(*g, rank).holds == on_identity, "permutation condition differs");
    if (from_idempotent) o.require(on_identity, "idempotent rank off the identity");
  }
  o.note << catalog_names().size() << " groups; " << idempotents << " idempotent ranks, " << random_ranks << " random ranks";
}

void hs_rank(Outcome& o) {
  Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const std::size_t n = 1 + rng.index(3);
    const auto a = testing::random_matrix(rng, g, n), b = testing::random_matrix(rng, g, n);
    o.require(trace_to_hh0(a * b) == trace_to_hh0(b * a), "trace cyclicity");
  }
  int conjugations = 0;
  for (; conjugations < 200; ++conjugations) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const std::size_t n = 2 + rng.index(2);
    const auto e = testing::random_idempotent(rng, g, n, 1);
    const auto p = testing::random_elementary_product(rng, g, n, 1 + static_cast<int>(rng.index(3)));
    o.require(p.u * p.u_inv == GRMatrix::identity(g, n), "elementary inverse");
    const auto conj = p.u * e * p.u_inv;
    o.require(is_idempotent(conj), "conjugate idempotent");
    o.require(hattori_stallings_rank(conj) == hattori_stallings_rank(e), "conjugation invariance");
    const auto f = testing::random_idempotent(rng, g, 1 + rng.index(2));
    o.require(hattori_stallings_rank(block_diagonal(e, f)) == hattori_stallings_rank(e) + hattori_stallings_rank(f),
              "block additivity");
  }
  o.note << "100 cyclicity checks, " << conjugations << " conjugations with block sums";
}

bool oracle_is_square(const Rational& k) {
  if (k <= 0) return false;
  const Int p = boost::multiprecision::numerator(k), q = boost::multiprecision::denominator(k);
  auto is_sq = [](const Int& n) {
    for (Int i = 0; i * i <= n; ++i)
      if (i * i == n) return true;
    return false;
  };
  return is_sq(p) && is_sq(q);
}

void sl2_example(Outcome& o) {
  Rng rng(108);
  int squares = 0;
  for (int i = 0; i < 50; ++i) {
    Rational k;
    if (i % 2 == 0) {
      const Rational a(rng.between(-5, 5) == 0 ? 1 : rng.between(1, 5), rng.between(1, 5));
      k = a * a;
    } else {
      do k = Rational(rng.between(-30, 30), rng.between(1, 30));
      while (k == 0);
    }
    const auto h = sl2_unipotent_conjugacy(k);
    o.require(h.has_value() == oracle_is_square(k), "square criterion at k=" + to_string(k));
    if (h) {
      ++squares;
      o.require(h->det() == 1 && (*h) * unipotent(1) == unipotent(k) * (*h), "witness conjugates");
    }
  }
  int brute = 0;
  for (const Rational& k : {Rational(1), Rational(4), Rational(9), Rational(1, 4), Rational(9, 4), Rational(4, 9), Rational(2),
                           Rational(-1), Rational(3, 2), Rational(1, 2)}) {
    o.require(testing::brute_sl2_conjugator(k, 3).has_value() == sl2_unipotent_conjugacy(k).has_value(),
              "brute-force search at k=" + to_string(k));
    ++brute;
  }
  o.note << "50 rationals (" << squares << " squares), " << brute << " brute-force searches";
}

void bezout_commutator(Outcome& o) {
  for (std::uint64_t m = 1; m <= 20; ++m) {
    const auto w = bezout_witness(m);
    Int two_m = 1, s_m = 1;
    for (std::uint64_t i = 0; i < m; ++i) two_m *= 2;
    const Int s = two_m - 1;
    for (std::uint64_t i = 0; i < m; ++i) s_m *= s;
    o.require(w.s == s && w.a == two_m - 1 && w.b == s_m - 1, "witness parameters m=" + std::to_string(m));
    o.require(w.k * w.a + w.l * w.b == 1, "Bezout identity m=" + std::to_string(m));
  }
  int examples = 0;
  for (const auto& name : catalog_names()) {
    const auto& g = *catalog(name);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const auto w = bezout_witness(m);
      for (std::uint32_t gi = 0; gi < g.order(); ++gi) {
        const ElemId x0{gi};
        const ElemId target_x = g.pow(x0, w.a + 1), target_y = g.pow(x0, w.b + 1);
        std::optional<ElemId> x, y;
        for (std::uint32_t h = 0; h < g.order() && !(x && y); ++h) {
          const ElemId c{h};
          if (!x && g.mul(g.mul(c, x0), g.inv(c)) == target_x) x = c;
          if (!y && g.mul(g.mul(c, x0), g.inv(c)) == target_y) y = c;
        }
        if (!x || !y) continue;
        const auto res = commutator_witness_check(g, x0, *x, *y, m);
        o.require(res.ok, name + " " + res.diagnostic);
        ++examples;
      }
    }
  }
  for (std::uint64_t m : {2, 4, 6}) {
    const auto w = bezout_witness(m);
    const Rational a(ipow(Int(2), m / 2)), b(ipow(w.s, m / 2));
    const auto res = commutator_witness_check(Sl2Ops{}, unipotent(1), RatMatrix2(a, 0, 0, 1 / a), RatMatrix2(b, 0, 0, 1 / b), m);
    o.require(res.ok, "SL(2,Q) m=" + std::to_string(m));
    ++examples;
  }
  o.note << "m = 1..20 identities, " << examples << " realizable commutator examples";
}

void cli_golden(Outcome& o) {
  const auto corpus = testing::golden_corpus();
  for (const auto& c : corpus) {
    const auto first = testing::render(testing::run_cli(c.args));
    o.require(first == testing::golden_expected(c.name), "golden mismatch: " + c.name);
    o.require(first == testing::render(testing::run_cli(c.args)), "nondeterministic: " + c.name);
  }
  o.require(corpus.size() >= 40, "corpus too small");
  o.note << corpus.size() << " golden commands";
}

}  // namespace
}  // namespace cyclo

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<void(cyclo::Outcome&)>>> criteria = {
      {"operator laws", cyclo::operator_laws},
      {"bracket laws", cyclo::bracket_laws},
      {"exactness", cyclo::exactness},
      {"Witt vectors", cyclo::witt_suite},
      {"vanishing certificate", cyclo::vanishing_suite},
      {"finite-group consistency", cyclo::finite_bass},
      {"rank invariance", cyclo::hs_rank},
      {"SL(2,Q) example", cyclo::sl2_example},
      {"Bezout and commutators", cyclo::bezout_commutator},
      {"CLI determinism", cyclo::cli_golden},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    cyclo::Outcome o;
    const auto start = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " (" << criteria[i].first << "): " << o.note.str();
    if (!o.pass) std::cout << "; first failure: " << o.first_failure;
    std::cout << " [" << ms << " ms]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
