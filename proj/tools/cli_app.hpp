#pragma once

// The cyclo command-line front end. run() is kept separate from main() so the
// test suites can drive it in-process and compare output byte for byte.

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclo/bass.hpp"
#include "json.hpp"

namespace cyclo::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Collects the text rendering and the JSON rendering of one command.
struct Report {
  std::ostringstream text;
  Json json = Json::object();
};

namespace detail {

inline std::string str(const Int& v) { return to_string(v); }
inline std::string str(const Rational& v) { return to_string(v); }
inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

/// Paths inside element files are relative to the file that names them.
inline std::string resolve_relative(const std::string& from_file, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(from_file).parent_path() / p).lexically_normal().string();
}

inline std::string class_label(const Group& g, ClassId c) { return "[" + std::to_string(c.value) + "] " + g.class_name(c); }

inline Json hh0_json(const Group& g, const HH0Vector& v) {
  Json out = Json::array();
  for (const auto& [c, k] : v.coeffs) out.push_back({{"class", c.value}, {"representative", g.class_name(c)}, {"coeff", str(k)}});
  return out;
}

inline Json tr_terms_json(const Group& g, const std::map<TRKey, Int>& coeffs) {
  Json out = Json::array();
  for (const auto& [k, c] : coeffs)
    out.push_back({{"t", k.t}, {"class", k.cls.value}, {"representative", g.class_name(k.cls)}, {"coeff", str(c)}});
  return out;
}

inline Json witt_json(const WittVector& x) {
  Json coords = Json::object();
  for (auto n : x.set().elements()) coords[std::to_string(n)] = str(x.coord(n));
  return {{"set", x.set().to_string()}, {"coords", coords}, {"text", format_witt(x)}};
}

inline std::string key_text(const Group& g, const TRKey& k) { return "V" + std::to_string(k.t) + "[" + g.class_name(k.cls) + "]"; }

inline std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommand bodies

inline void group_classes(const Group& g, Report& rep) {
  rep.text << "order " << g.order() << ", exponent " << g.exponent() << ", " << g.class_count() << " classes\n";
  Json classes = Json::array();
  for (const auto& c : g.classes()) {
    const auto ord = g.element_order(c.representative);
    rep.text << detail::class_label(g, c.id) << " size=" << c.size << " order=" << ord << " members:";
    Json members = Json::array();
    for (ElemId e : c.members) {
      rep.text << ' ' << g.encoding(e);
      members.push_back(g.encoding(e));
    }
    rep.text << '\n';
    classes.push_back({{"id", c.id.value}, {"representative", g.class_name(c.id)}, {"size", c.size}, {"order", ord}, {"members", members}});
  }
  rep.json = {{"order", g.order()}, {"exponent", g.exponent()}, {"classes", classes}};
}

inline void group_powermap(const Group& g, const Int& s, Report& rep) {
  const auto phi = g.power_map(s);
  rep.text << "s=" << detail::str(s) << '\n';
  Json map = Json::array();
  for (std::uint32_t i = 0; i < g.class_count(); ++i) {
    const ClassId c{i}, d = phi(c);
    rep.text << detail::class_label(g, c) << " -> " << detail::class_label(g, d) << '\n';
    map.push_back({{"from", c.value}, {"to", d.value}, {"from_representative", g.class_name(c)}, {"to_representative", g.class_name(d)}});
  }
  rep.json = {{"s", detail::str(s)}, {"map", map}};
}

inline void rank_command(const GroupPtr& g, const std::string& matrix_path, Report& rep) {
  const auto file = parse_matrix_file(read_file(matrix_path), g);
  const auto r = hattori_stallings_rank(file.matrix);
  const auto one = r[Group::identity_class()];
  bool supported_on_identity = true;
  for (const auto& [c, k] : r.coeffs) supported_on_identity = supported_on_identity && c == Group::identity_class();
  rep.text << "n=" << file.matrix.size() << '\n'
           << "idempotent: yes\n"
           << "rank: " << format_hh0(*g, r) << '\n'
           << "identity coefficient: " << detail::str(one) << '\n'
           << "supported on identity: " << detail::yes_no(supported_on_identity) << '\n';
  rep.json = {{"n", file.matrix.size()},
              {"idempotent", true},
              {"rank", detail::hh0_json(*g, r)},
              {"rank_text", format_hh0(*g, r)},
              {"identity_coefficient", detail::str(one)},
              {"supported_on_identity", supported_on_identity}};
}

struct WittArgs {
  std::string op;
  std::string set;
  std::vector<std::string> vectors;
  std::optional<std::uint64_t> s;
  std::optional<std::string> to;
};

inline void witt_command(const WittArgs& a, Report& rep) {
  const auto set = parse_truncation_set(a.set);
  const auto need = [&](std::size_t n) {
    if (a.vectors.size() != n)
      throw UsageError("witt " + a.op + " takes " + std::to_string(n) + " vector argument(s), got " + std::to_string(a.vectors.size()));
  };
  const auto need_s = [&]() -> std::uint64_t {
    if (!a.s) throw UsageError("witt " + a.op + " requires --s");
    return *a.s;
  };
  std::vector<WittVector> xs;
  for (const auto& v : a.vectors) xs.push_back(parse_witt(v, set));

  const auto emit = [&](const WittVector& result) {
    rep.text << "set: " << result.set().to_string() << '\n' << "result: " << format_witt(result) << '\n';
    rep.json = {{"op", a.op}, {"result", detail::witt_json(result)}};
  };
  if (a.op == "ghost") {
    need(1);
    const auto g = ghost(xs[0]);
    rep.text << "set: " << set.to_string() << '\n' << "ghost: " << format_ghost(g) << '\n';
    Json w = Json::object();
    for (auto n : set.elements()) w[std::to_string(n)] = detail::str(g.at(n));
    rep.json = {{"op", a.op}, {"set", set.to_string()}, {"ghost", w}};
  } else if (a.op == "add") {
    need(2);
    emit(w_add(xs[0], xs[1]));
  } else if (a.op == "mul") {
    need(2);
    emit(w_mul(xs[0], xs[1]));
  } else if (a.op == "neg") {
    need(1);
    emit(w_neg(xs[0]));
  } else if (a.op == "F") {
    need(1);
    emit(w_frobenius(need_s(), xs[0]));
  } else if (a.op == "V") {
    need(1);
    const auto s = need_s();
    emit(w_verschiebung(s, xs[0], set.scaled(s)));
  } else if (a.op == "R") {
    need(1);
    if (!a.to) throw UsageError("witt R requires --to");
    emit(w_restrict(xs[0], parse_truncation_set(*a.to)));
  } else if (a.op == "vone") {
    need(0);
    emit(v_one(need_s(), set));
  }
}

inline void tr_apply(const std::string& op, std::uint64_t s, const std::string& elem_path, std::size_t order_cap, Report& rep) {
  const auto text = read_file(elem_path);
  const auto group = load_group(detail::resolve_relative(elem_path, tr_file_group_path(text)), order_cap);
  const auto x = parse_tr_file(text, group);
  const TRElem y = op == "R" ? tr_restriction(s, x) : op == "F" ? tr_frobenius(s, x) : tr_verschiebung(s, x);
  rep.text << format_tr(y) << '\n';
  rep.json = {{"op", op},
              {"s", s},
              {"input_level", x.level()},
              {"level", y.level()},
              {"terms", detail::tr_terms_json(*group, y.coeffs())},
              {"text", format_tr(y)}};
}

inline void tr_exactness(const GroupPtr& g, std::uint64_t r, std::uint64_t p, Report& rep) {
  const auto e = exactness_check(g, r, p);
  std::uint64_t pu = 1;
  for (std::uint64_t i = 0; i < e.u; ++i) pu *= p;
  rep.text << "r=" << r << " p=" << p << " u=" << e.u << " d=" << e.d << '\n'
           << "sequence: TR^" << e.d << " --V_" << pu << "--> TR^" << r << " --R_" << p << "--> TR^" << r / p << " --> 0\n"
           << "ranks: " << e.rank_source << ' ' << e.rank_middle << ' ' << e.rank_target << '\n'
           << "R surjective: " << detail::yes_no(e.surjective) << '\n'
           << "ker R = im V: " << detail::yes_no(e.kernel_equals_image) << " (ranks " << e.kernel_rank << ", " << e.image_rank << ")\n"
           << "V injective: " << detail::yes_no(e.v_injective) << '\n';
  for (const auto& w : e.witnesses) rep.text << "witness: " << w << '\n';
  rep.text << "exact: " << detail::yes_no(e.pass()) << '\n';
  rep.json = {{"r", r},
              {"p", p},
              {"u", e.u},
              {"d", e.d},
              {"ranks", {e.rank_source, e.rank_middle, e.rank_target}},
              {"surjective", e.surjective},
              {"kernel_equals_image", e.kernel_equals_image},
              {"kernel_rank", e.kernel_rank},
              {"image_rank", e.image_rank},
              {"v_injective", e.v_injective},
              {"witnesses", e.witnesses},
              {"exact", e.pass()}};
}

inline void bass_linnell(const Group& g, std::optional<std::uint64_t> m_max, Report& rep) {
  const auto r = linnell_admissible(g, m_max);
  rep.text << "s range 1.." << r.s_bound << ", m range 1.." << r.m_bound << '\n';
  Json classes = Json::array();
  for (const auto& v : r.classes) {
    rep.text << detail::class_label(g, v.cls);
    Json entry = {{"class", v.cls.value}, {"representative", g.class_name(v.cls)}, {"admissible", v.admissible}};
    if (v.admissible) {
      rep.text << " admissible with m=" << *v.witness_m << '\n';
      entry["m"] = *v.witness_m;
    } else {
      rep.text << " not admissible";
      if (v.witness_s) {
        rep.text << ": s=" << *v.witness_s << " fails for every m" << (v.bound_independent ? "" : " in range");
        entry["s"] = *v.witness_s;
      }
      rep.text << '\n';
      entry["bound_independent"] = v.bound_independent;
    }
    classes.push_back(entry);
  }
  Json admissible = Json::array();
  rep.text << "admissible:";
  for (ClassId c : r.admissible()) {
    rep.text << ' ' << g.class_name(c);
    admissible.push_back(g.class_name(c));
  }
  rep.text << '\n';
  rep.json = {{"s_bound", r.s_bound}, {"m_bound", r.m_bound}, {"classes", classes}, {"admissible", admissible}};
}

inline void bass_fixedpoint(const std::string& path, std::size_t order_cap, Report& rep) {
  const auto text = read_file(path);
  const auto group = load_group(detail::resolve_relative(path, tr_file_group_path(text)), order_cap);
  const auto a = parse_limit_file(text, group);
  const Group& g = *group;
  rep.text << "set: " << a.set.to_string() << '\n'
           << "full support declared: " << detail::yes_no(a.full_support_declared) << '\n'
           << "element: " << format_tr_limit_terms(a) << '\n';
  rep.json["set"] = a.set.to_string();
  rep.json["full_support_declared"] = a.full_support_declared;
  rep.json["terms"] = detail::tr_terms_json(g, a.coeffs);

  bool invariant = true;
  Json inv = Json::array();
  for (auto p : a.set.elements()) {
    if (!is_prime(p)) continue;
    const auto r = frobenius_invariance_report(a, p);
    invariant = invariant && r.holds;
    rep.text << "F_" << p << " invariant on " << r.compared_on.to_string() << ": " << detail::yes_no(r.holds);
    Json entry = {{"p", p}, {"compared_on", r.compared_on.to_string()}, {"holds", r.holds}};
    if (r.mismatch) {
      rep.text << " (first mismatch at " << detail::key_text(g, *r.mismatch) << ')';
      entry["mismatch"] = detail::key_text(g, *r.mismatch);
    }
    rep.text << '\n';
    inv.push_back(entry);
  }
  rep.json["invariance"] = inv;

  if (!a.full_support_declared) {
    rep.text << "certificate: unavailable without a full-support declaration\n";
    rep.json["certificate"] = nullptr;
  } else {
    const auto cert = vanishing_certificate(a);
    const bool all = cert.verdict == VanishingCertificate::Verdict::AllHigherVanish;
    rep.text << "certificate: " << (all ? "AllHigherVanish" : "Counterexample") << " (" << cert.chains.size() << " chains, verified "
             << detail::yes_no(verify_certificate(a, cert)) << ")\n";
    Json chains = Json::array();
    for (const auto& ch : cert.chains) {
      const bool nonzero = std::any_of(ch.coefficients.begin(), ch.coefficients.end(), [](const Int& c) { return c != 0; });
      if (!nonzero && ch.closed) continue;
      std::vector<std::string> coeffs;
      for (const auto& c : ch.coefficients) coeffs.push_back(detail::str(c));
      rep.text << "  chain " << detail::key_text(g, ch.start) << " p=" << ch.prime << " levels " << detail::join(ch.levels, ",")
               << " exit " << ch.exit_level << " coefficients";
      for (const auto& c : coeffs) rep.text << ' ' << c;
      rep.text << (ch.closed ? " closed" : " breaks at level " + std::to_string(*ch.failing_level)) << '\n';
      Json entry = {{"start", detail::key_text(g, ch.start)}, {"prime", ch.prime}, {"levels", ch.levels},
                    {"exit_level", ch.exit_level}, {"coefficients", coeffs}, {"closed", ch.closed}};
      if (ch.failing_level) entry["failing_level"] = *ch.failing_level;
      chains.push_back(entry);
    }
    rep.json["certificate"] = {{"verdict", all ? "AllHigherVanish" : "Counterexample"},
                               {"chain_count", cert.chains.size()},
                               {"verified", verify_certificate(a, cert)},
                               {"nontrivial_chains", chains}};
    if (cert.counterexample) rep.json["certificate"]["counterexample"] = detail::key_text(g, *cert.counterexample);
  }

  HH0Vector shadow;
  for (std::uint32_t c = 0; c < g.class_count(); ++c) shadow.add(ClassId{c}, a.coefficient(1, ClassId{c}));
  const auto perm = permutation_condition(g, shadow);
  rep.text << "permutation condition on t=1: " << (perm.holds ? "holds" : "fails") << " (m=" << detail::str(perm.m) << ", s in 1.."
           << perm.s_bound << ")\n";
  Json perm_json = {{"holds", perm.holds}, {"m", detail::str(perm.m)}, {"s_bound", perm.s_bound}};
  for (const auto& step : perm.steps) {
    if (step.ok()) continue;
    rep.text << "  s=" << step.s << ": into support " << detail::yes_no(step.maps_into_support) << ", bijective "
             << detail::yes_no(step.bijective) << ", coefficients kept " << detail::yes_no(step.coefficients_preserved) << '\n';
    perm_json["first_failure"] = {{"s", step.s},
                                  {"maps_into_support", step.maps_into_support},
                                  {"bijective", step.bijective},
                                  {"coefficients_preserved", step.coefficients_preserved}};
    break;
  }
  rep.json["permutation_condition"] = perm_json;
  rep.text << "frobenius invariant: " << detail::yes_no(invariant) << '\n';
  rep.json["frobenius_invariant"] = invariant;
}

inline void bass_sl2(const Rational& k, Report& rep) {
  const auto h = sl2_unipotent_conjugacy(k);
  rep.text << "k=" << detail::str(k) << '\n' << "square: " << detail::yes_no(h.has_value()) << '\n';
  rep.json = {{"k", detail::str(k)}, {"square", h.has_value()}};
  if (!h) {
    rep.text << "no h in SL(2,Q) conjugates [1,1;0,1] to [1," << detail::str(k) << ";0,1]\n";
    rep.json["witness"] = nullptr;
    return;
  }
  const auto image = sl2_mul(sl2_mul(*h, unipotent(1)), sl2_inv(*h));
  rep.text << "witness: diag(" << detail::str(h->a()) << ", " << detail::str(h->d()) << ")\n"
           << "h = " << h->encoding() << '\n'
           << "h*[1,1;0,1]*h^-1 = " << image.encoding() << '\n';
  rep.json["witness"] = h->encoding();
  rep.json["diag"] = {detail::str(h->a()), detail::str(h->d())};
  rep.json["conjugate"] = image.encoding();
}

inline void bass_bezout(std::uint64_t m, Report& rep) {
  const auto w = bezout_witness(m);
  const bool ok = w.k * w.a + w.l * w.b == 1;
  rep.text << "m=" << w.m << " s=" << detail::str(w.s) << '\n'
           << "a=2^m-1=" << detail::str(w.a) << '\n'
           << "b=s^m-1=" << detail::str(w.b) << '\n'
           << "k=" << detail::str(w.k) << " l=" << detail::str(w.l) << '\n'
           << "k*a+l*b=1: " << detail::yes_no(ok) << '\n';
  rep.json = {{"m", w.m}, {"s", detail::str(w.s)}, {"a", detail::str(w.a)}, {"b", detail::str(w.b)},
              {"k", detail::str(w.k)}, {"l", detail::str(w.l)}, {"gcd", detail::str(w.gcd)}, {"identity_holds", ok}};
}

// ---------------------------------------------------------------------------
// Argument parsing and dispatch

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-zero cyclotomic trace toolkit", "cyclo"};
  app.require_subcommand(1);
  std::string format = "text";
  std::size_t order_cap = kDefaultOrderCap;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order-cap", order_cap, "largest group order to enumerate")->check(CLI::PositiveNumber);

  std::function<void(Report&)> action;

  auto* group = app.add_subcommand("group", "conjugacy classes and power maps")->require_subcommand(1)->fallthrough();
  std::string spec;
  auto* classes = group->add_subcommand("classes", "list conjugacy classes")->fallthrough();
  classes->add_option("spec", spec, "group spec file")->required()->check(CLI::ExistingFile);
  classes->callback([&] { action = [&](Report& r) { group_classes(*load_group(spec, order_cap), r); }; });
  auto* powermap = group->add_subcommand("powermap", "class power map [g] -> [g^s]")->fallthrough();
  std::string s_text;
  powermap->add_option("spec", spec, "group spec file")->required()->check(CLI::ExistingFile);
  powermap->add_option("--s", s_text, "exponent")->required();
  powermap->callback([&] { action = [&](Report& r) { group_powermap(*load_group(spec, order_cap), parse_int(s_text), r); }; });

  auto* rank = app.add_subcommand("rank", "Hattori-Stallings rank of an idempotent matrix")->fallthrough();
  std::string matrix_path;
  rank->add_option("spec", spec, "group spec file")->required()->check(CLI::ExistingFile);
  rank->add_option("matrix", matrix_path, "matrix file")->required()->check(CLI::ExistingFile);
  rank->callback([&] { action = [&](Report& r) { rank_command(load_group(spec, order_cap), matrix_path, r); }; });

  auto* witt = app.add_subcommand("witt", "big Witt vector arithmetic")->fallthrough();
  WittArgs wargs;
  std::uint64_t witt_s = 0;
  std::string witt_to;
  witt->add_option("op", wargs.op, "ghost|add|mul|neg|F|V|R|vone")
      ->required()
      ->check(CLI::IsMember({"ghost", "add", "mul", "neg", "F", "V", "R", "vone"}));
  witt->add_option("--set", wargs.set, "truncation set, e.g. divisors-of:12 or {1,2,3}")->required();
  auto* witt_s_opt = witt->add_option("--s", witt_s, "operator index")->check(CLI::PositiveNumber);
  auto* witt_to_opt = witt->add_option("--to", witt_to, "target truncation set for R");
  witt->add_option("vectors", wargs.vectors, "vectors as n:a,... over the set");
  witt->callback([&] {
    if (*witt_s_opt) wargs.s = witt_s;
    if (*witt_to_opt) wargs.to = witt_to;
    action = [&](Report& r) { witt_command(wargs, r); };
  });

  auto* tr = app.add_subcommand("tr", "TR_0^r operators and exactness")->require_subcommand(1)->fallthrough();
  auto* apply = tr->add_subcommand("apply", "apply R_s, F_s or V_s to an element file")->fallthrough();
  std::string tr_op, elem_path;
  std::uint64_t tr_s = 1;
  apply->add_option("--op", tr_op, "R|F|V")->required()->check(CLI::IsMember({"R", "F", "V"}));
  apply->add_option("--s", tr_s, "operator index")->required()->check(CLI::PositiveNumber);
  apply->add_option("elem", elem_path, "TR element file")->required()->check(CLI::ExistingFile);
  apply->callback([&] { action = [&](Report& r) { tr_apply(tr_op, tr_s, elem_path, order_cap, r); }; });
  auto* exact = tr->add_subcommand("exactness", "check TR^d -> TR^r -> TR^{r/p} -> 0")->fallthrough();
  std::uint64_t ex_r = 1, ex_p = 2;
  exact->add_option("spec", spec, "group spec file")->required()->check(CLI::ExistingFile);
  exact->add_option("--r", ex_r, "level")->required()->check(CLI::Range(std::uint64_t{1}, kMaxLevel));
  exact->add_option("--p", ex_p, "prime dividing r")->required()->check(CLI::PositiveNumber);
  exact->callback([&] { action = [&](Report& r) { tr_exactness(load_group(spec, order_cap), ex_r, ex_p, r); }; });

  auto* bass = app.add_subcommand("bass", "trace conjecture analysis")->require_subcommand(1)->fallthrough();
  auto* linnell = bass->add_subcommand("linnell", "classes satisfying the conjugacy condition")->fallthrough();
  std::uint64_t m_max = 0;
  linnell->add_option("spec", spec, "group spec file")->required()->check(CLI::ExistingFile);
  auto* m_max_opt = linnell->add_option("--m-max", m_max, "largest m to try")->check(CLI::PositiveNumber);
  linnell->callback([&] {
    action = [&, given = static_cast<bool>(*m_max_opt)](Report& r) {
      bass_linnell(*load_group(spec, order_cap), given ? std::optional<std::uint64_t>(m_max) : std::nullopt, r);
    };
  });
  auto* fixedpoint = bass->add_subcommand("fixedpoint", "Frobenius invariance and vanishing certificate")->fallthrough();
  fixedpoint->add_option("elem", elem_path, "limit element file")->required()->check(CLI::ExistingFile);
  fixedpoint->callback([&] { action = [&](Report& r) { bass_fixedpoint(elem_path, order_cap, r); }; });
  auto* sl2 = bass->add_subcommand("sl2", "conjugate [1,1;0,1] to [1,k;0,1] in SL(2,Q)")->fallthrough();
  std::string k_text;
  sl2->add_option("--k", k_text, "rational k")->required();
  sl2->callback([&] { action = [&](Report& r) { bass_sl2(parse_rational(k_text), r); }; });
  auto* bezout = bass->add_subcommand("bezout", "Bezout witness for 2^m-1 and s^m-1")->fallthrough();
  std::uint64_t bez_m = 1;
  bezout->add_option("--m", bez_m, "m")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{4096}));
  bezout->callback([&] { action = [&](Report& r) { bass_bezout(bez_m, r); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    // A missing required option can mask a misspelt one; name the stray flag first.
    for (const auto& extra : app.remaining(true))
      if (extra.rfind("-", 0) == 0) {
        err << "usage error: unknown option " << extra << '\n';
        return 2;
      }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Report rep;
  try {
    action(rep);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (format == "json")
    out << rep.json.dump(2) << '\n';
  else
    out << rep.text.str();
  return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cyclo::cli
