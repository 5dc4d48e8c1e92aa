#pragma once

/**
 * @file cli.hpp
 * @brief The `monoquad` command line, as a function so tests can drive it.
 *
 *   monoquad analyze N A B C
 *   monoquad enumerate N [--s LO..HI]
 *   monoquad crosscheck [N...] [--s LO..HI] [--only N,S,P] [--fail-fast] [--threads T]
 *   monoquad tools disc POLY | factor-int INTEGER | factor-fp POLY P | dedekind POLY P
 *
 * Common flags: --json, --seed, --trial-bound, --rho-cap, --irr-primes.
 *
 * Exit codes:
 *   0  completed (crosscheck: no disagreement outside Case3, no audit failure)
 *   1  crosscheck found a disagreement outside Case3 or an audit failure
 *   2  invalid parameters, malformed polynomial or bad usage
 *   3  internal invariant violation
 */

#include "crosscheck.hpp"
#include "dedekind.hpp"
#include "int_poly.hpp"
#include "integer.hpp"
#include "json_io.hpp"
#include "mod_poly.hpp"
#include "poly_parse.hpp"
#include "quadrinomial.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace monoquad::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kInvalid = 2, kInternal = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  FactorBudget factoring;
  std::vector<std::uint64_t> irr_primes = default_irreducibility_primes();
  bool json = false;
  std::vector<long> ns{6, 9, 12, 15};
  long s_lo = -10;
  long s_hi = 10;
  bool fail_fast = false;
  unsigned threads = 0;

  OracleBudget budget() const { return OracleBudget{factoring, irr_primes}; }
};

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

inline Integer parse_integer(const std::string& s, const char* what) {
  Integer out;
  std::string digits = s;
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  const bool ok = !digits.empty() && digits.find_first_not_of("-0123456789") == std::string::npos &&
                  digits.find('-', 1) == std::string::npos && digits != "-" && out.set_str(digits, 10) == 0;
  if (!ok) throw UsageError(std::string(what) + ": '" + s + "' is not an integer");
  return out;
}

inline long parse_long(const std::string& s, const char* what) {
  const Integer v = parse_integer(s, what);
  if (!v.fits_slong_p()) throw UsageError(std::string(what) + ": '" + s + "' is out of range");
  return v.get_si();
}

inline std::uint64_t parse_prime(const std::string& s) {
  const Integer v = parse_integer(s, "p");
  if (v < 2 || !fits_u64(v) || to_u64(v) >= (std::uint64_t{1} << 63))
    throw UsageError("p: '" + s + "' must be a prime below 2^63");
  if (!is_prime(v)) throw UsageError("p: " + s + " is not prime");
  return to_u64(v);
}

/// "LO..HI"; 0..0 is the empty range.
inline std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("--s: expected LO..HI, got '" + s + "'");
  const long lo = parse_long(s.substr(0, dots), "--s");
  const long hi = parse_long(s.substr(dots + 2), "--s");
  if (lo > hi) throw UsageError("--s: malformed range " + s + " (lo > hi)");
  return {lo, hi};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

/// Either a bound ("1000": all primes below it) or an explicit list ("3,5,7").
inline std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
  if (s.find(',') == std::string::npos) {
    const long bound = parse_long(s, "--irr-primes");
    if (bound < 2 || bound > 100'000'000) throw UsageError("--irr-primes: bound must lie in [2, 10^8]");
    return primes_up_to(static_cast<std::uint64_t>(bound));
  }
  std::vector<std::uint64_t> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_prime(item));
  return out;
}

// ---------------------------------------------------------------------------
// Text formatting
// ---------------------------------------------------------------------------

inline std::string format_factored(const FactoredInteger& x) {
  std::string out = x.sign < 0 ? "-" : "";
  bool first = true;
  for (const auto& [p, e] : x.factors) {
    if (!first) out += " * ";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
    first = false;
  }
  if (!x.complete()) {
    if (!first) out += " * ";
    out += "[unfactored " + x.cofactor.get_str() + "]";
    first = false;
  }
  if (first) out += "1";
  return out;
}

inline std::string format_fp_factorization(const FpFactorization& fac) {
  std::string out;
  if (fac.unit != 1 || fac.factors.empty()) out = std::to_string(fac.unit);
  for (const auto& [g, m] : fac.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + g.to_string() + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

inline std::string format_irreducibility(const IrreducibilityCertificate& c) {
  if (const auto* i = std::get_if<Irreducible>(&c)) return "irreducible (certified mod " + std::to_string(i->prime) + ")";
  if (const auto* r = std::get_if<Reducible>(&c)) return "reducible (factor " + r->factor.to_string() + ")";
  const auto& u = std::get<IrreducibilityUnknown>(c);
  if (u.possible_factor_degrees.empty())
    return "not certified by a single prime (the combined mod-p degree patterns leave no factor degree)";
  std::string degs;
  for (long d : u.possible_factor_degrees) degs += (degs.empty() ? "" : ", ") + std::to_string(d);
  return "not certified (possible factor degrees {" + degs + "})";
}

inline std::string format_verdict(const Verdict& v) {
  std::string out = to_string(v.kind);
  if (v.kind == VerdictKind::NotMonogenic) {
    out += " (index divisible by";
    for (std::size_t i = 0; i < v.witness_primes.size(); ++i)
      out += (i ? ", " : " ") + std::to_string(v.witness_primes[i]);
    out += ")";
  } else if (v.kind == VerdictKind::Inconclusive) {
    out += " (" + v.reason + ")";
  }
  return out;
}

inline const char* divides_word(bool d) { return d ? "divides" : "not-divides"; }

inline std::string format_witness(const std::optional<IndexWitness>& w) {
  if (!w) return "-";
  return w->factor.to_string() + " (mult " + std::to_string(w->multiplicity) + ")";
}

inline std::string format_quantities(const CaseQuantities& q) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Case2Quantities>)
          return "r=" + std::to_string(v.r) + " m=" + std::to_string(v.m) + " u0=" + v.u0.get_str() +
                 " u1=" + v.u1.get_str() + " u2=" + v.u2.get_str();
        else if constexpr (std::is_same_v<T, Case3Quantities>)
          return "s=" + std::to_string(v.s) + " m1=" + std::to_string(v.m1) + " v0=" + v.v0.get_str() +
                 " v1=" + v.v1.get_str() + " v2=" + v.v2.get_str();
        else if constexpr (std::is_same_v<T, Case4Quantities>)
          return "t=" + std::to_string(v.t) + " m2=" + std::to_string(v.m2) + " w0=" + v.w0.get_str() +
                 " w1=" + v.w1.get_str() + " w2=" + v.w2.get_str();
        else if constexpr (std::is_same_v<T, Case5Quantities>)
          return "k1=" + std::to_string(v.k1) + " R=" + std::to_string(v.R);
        else
          return "";
      },
      q);
}

inline void print_rows(std::ostream& out, const std::vector<FamilyPrimeRow>& rows) {
  out << std::left << std::setw(8) << "  p" << std::setw(8) << "case" << std::setw(10) << "rule" << std::setw(13)
      << "fastpath" << std::setw(13) << "oracle" << std::setw(7) << "agree" << "witness\n";
  for (const auto& r : rows) {
    out << "  " << std::setw(6) << r.p << std::setw(8) << to_string(r.prime_case.tag) << std::setw(10)
        << r.fastpath.rule << std::setw(13) << divides_word(r.fastpath.divides_index) << std::setw(13)
        << divides_word(r.oracle.divides_index) << std::setw(7) << (r.agree ? "yes" : "NO")
        << format_witness(r.oracle.witness) << "\n";
  }
  out << std::right;
}

inline void print_family_report(std::ostream& out, const FamilyReport& rep) {
  const auto& q = rep.q;
  out << "polynomial: " << rep.report.polynomial.to_string() << "\n";
  out << "parameters: n = " << q.n << ", a = " << q.a << ", b = " << q.b << ", c = " << q.c << ", k = " << q.k
      << "\n";
  out << "discriminant: " << rep.report.discriminant.value() << "\n";
  out << "  = " << format_factored(rep.report.discriminant) << "\n";
  out << "irreducibility: " << format_irreducibility(rep.report.irreducibility) << "\n";
  out << "primes with p^2 | D: " << rep.rows.size() << "\n";
  if (!rep.rows.empty()) print_rows(out, rep.rows);
  out << "verdict: " << format_verdict(rep.report.verdict) << "\n";
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline int cmd_analyze(const std::string& n_s, const std::string& a_s, const std::string& b_s,
                       const std::string& c_s, const RunConfig& cfg, std::ostream& out) {
  const long n = parse_long(n_s, "n");
  const Quadrinomial q = validate(n, parse_integer(a_s, "a"), parse_integer(b_s, "b"), parse_integer(c_s, "c"));
  const FamilyReport rep = family_report(q, cfg.budget());
  if (cfg.json) {
    out << dump(family_report_to_json(rep));
    return kOk;
  }
  print_family_report(out, rep);
  if (rep.report.verdict.kind == VerdictKind::Monogenic) out << "\n" << ode_solution_template(q, rep.report);
  return kOk;
}

inline std::string disagreement_flags(const FamilyReport& rep) {
  std::string out;
  for (const auto& r : rep.rows)
    if (!r.agree) out += (out.empty() ? "" : ",") + std::to_string(r.p) + ":" + to_string(r.prime_case.tag);
  return out.empty() ? "-" : out;
}

inline int cmd_enumerate(const std::string& n_s, const RunConfig& cfg, std::ostream& out) {
  const long n = parse_long(n_s, "n");
  const auto members = sweep_members({n}, cfg.s_lo, cfg.s_hi);
  SweepOptions opt;
  opt.budget = cfg.budget();
  opt.audit_prime_bound = 1;  // audits belong to crosscheck
  opt.threads = cfg.threads;
  const auto results = run_members(members, opt);

  if (cfg.json) {
    Json rows = Json::array();
    for (const auto& r : results) {
      Json dis = Json::array();
      for (const auto& row : r.report.rows)
        if (!row.agree) dis.push_back(Json{{"p", row.p}, {"case", to_string(row.prime_case.tag)}});
      rows.push_back(Json{{"s", r.member.s},
                          {"a", r.member.q.a.get_str()},
                          {"b", r.member.q.b.get_str()},
                          {"c", r.member.q.c.get_str()},
                          {"irreducible", std::holds_alternative<Irreducible>(r.report.report.irreducibility)},
                          {"verdict", verdict_to_json(r.report.report.verdict)},
                          {"disagreements", dis}});
    }
    out << dump(Json{{"schema_version", kSchemaVersion}, {"n", n}, {"members", rows}});
    return kOk;
  }
  out << std::setw(6) << "s" << std::setw(14) << "a" << std::setw(14) << "b" << std::setw(14) << "c"
      << "  irreducible  " << std::left << std::setw(14) << "verdict" << "disagreements\n" << std::right;
  for (const auto& r : results) {
    const auto& q = r.member.q;
    out << std::setw(6) << r.member.s << std::setw(14) << q.a << std::setw(14) << q.b << std::setw(14) << q.c
        << "  " << std::left << std::setw(13)
        << (std::holds_alternative<Irreducible>(r.report.report.irreducibility) ? "yes" : "unknown") << std::setw(14)
        << to_string(r.report.report.verdict.kind) << disagreement_flags(r.report) << "\n"
        << std::right;
  }
  return kOk;
}

inline int cmd_crosscheck_cell(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
  const auto parts = split(spec, ',');
  if (parts.size() != 3) throw UsageError("--only: expected N,S,P, got '" + spec + "'");
  const long n = parse_long(parts[0], "--only n");
  const long s = parse_long(parts[1], "--only s");
  const std::uint64_t p = parse_prime(parts[2]);
  const Quadrinomial q = family_member(n, s);
  const FamilyPrimeRow row = family_cell(q, p, cfg.factoring.seed);
  const bool fails = !row.agree && row.prime_case.tag != CaseTag::Case3;
  if (cfg.json) {
    out << dump(Json{{"schema_version", kSchemaVersion},
                     {"n", n},
                     {"s", s},
                     {"polynomial", {{"n", q.n}, {"a", q.a.get_str()}, {"b", q.b.get_str()}, {"c", q.c.get_str()}}},
                     {"cell", family_row_to_json(row)}});
  } else {
    out << "cell: n = " << n << ", s = " << s << ", p = " << p << " (a = " << q.a << ", b = " << q.b
        << ", c = " << q.c << ")\n";
    out << "case: " << to_string(row.prime_case.tag);
    const std::string quantities = format_quantities(row.prime_case.aux);
    if (!quantities.empty()) out << " (" << quantities << ")";
    out << "\n";
    out << "fastpath: " << divides_word(row.fastpath.divides_index) << " (rule " << row.fastpath.rule << ")\n";
    out << "oracle: " << divides_word(row.oracle.divides_index) << ", witness " << format_witness(row.oracle.witness)
        << "\n";
    out << "agree: " << (row.agree ? "yes" : "no") << "\n";
  }
  return fails ? kDisagreement : kOk;
}

inline Json sweep_cell_to_json(const SweepCell& c) {
  return Json{{"n", c.n},
              {"s", c.s},
              {"a", c.q.a.get_str()},
              {"b", c.q.b.get_str()},
              {"c", c.q.c.get_str()},
              {"cell", family_row_to_json(c.row)}};
}

inline int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  SweepOptions opt;
  opt.budget = cfg.budget();
  opt.fail_fast = cfg.fail_fast;
  opt.threads = cfg.threads;
  const auto members = sweep_members(cfg.ns, cfg.s_lo, cfg.s_hi);
  const CrosscheckSummary sum = summarize(run_members(members, opt), members.size());

  if (cfg.json) {
    Json cases = Json::object();
    for (std::size_t i = 0; i < sum.tally.size(); ++i)
      cases[to_string(static_cast<CaseTag>(i + 1))] =
          Json{{"cells", sum.tally[i].cells}, {"agree", sum.tally[i].agree}, {"disagree", sum.tally[i].disagree}};
    Json dis = Json::array();
    for (const auto& c : sum.disagreements) dis.push_back(sweep_cell_to_json(c));
    Json inc = Json::array();
    for (const auto& m : sum.inconclusive) inc.push_back(Json{{"n", m.n}, {"s", m.s}, {"reason", m.reason}});
    Json viol = Json::array();
    for (const auto& v : sum.lemma_violations)
      viol.push_back(Json{{"n", v.n}, {"s", v.s}, {"p", v.p}, {"lemma", v.lemma}, {"detail", v.detail}});
    out << dump(Json{{"schema_version", kSchemaVersion},
                     {"ns", cfg.ns},
                     {"s_range", Json::array({cfg.s_lo, cfg.s_hi})},
                     {"members", sum.members},
                     {"planned_members", members.size()},
                     {"stopped_early", sum.stopped_early},
                     {"cells", sum.cells()},
                     {"cases", cases},
                     {"lemmas",
                      {{"l1_members", sum.lemmas.l1_members},
                       {"l2_classifications", sum.lemmas.l2_classifications},
                       {"case5_occurrences", sum.lemmas.case5_occurrences},
                       {"case2_frobenius", sum.lemmas.case2_frobenius},
                       {"violations", viol}}},
                     {"inconclusive", inc},
                     {"disagreements", dis},
                     {"non_case3_disagreements", sum.non_case3_disagreements()},
                     {"exit_code", sum.exit_code()}});
    return sum.exit_code();
  }

  out << "crosscheck: n in {";
  for (std::size_t i = 0; i < cfg.ns.size(); ++i) out << (i ? ", " : "") << cfg.ns[i];
  out << "}, s in [" << cfg.s_lo << ", " << cfg.s_hi << "] \\ {0}\n";
  out << "members: " << sum.members << " of " << members.size();
  if (sum.stopped_early) out << " (stopped at first failure)";
  out << "\n";
  out << "cells with p^2 | D: " << sum.cells() << "\n";
  out << std::left << std::setw(8) << "case" << std::right << std::setw(8) << "cells" << std::setw(8) << "agree"
      << std::setw(10) << "disagree" << "\n";
  for (std::size_t i = 0; i < sum.tally.size(); ++i)
    out << std::left << std::setw(8) << to_string(static_cast<CaseTag>(i + 1)) << std::right << std::setw(8)
        << sum.tally[i].cells << std::setw(8) << sum.tally[i].agree << std::setw(10) << sum.tally[i].disagree << "\n";
  out << "audits: l1 on " << sum.lemmas.l1_members << " members, l2 on " << sum.lemmas.l2_classifications
      << " (member, prime) pairs, case5 on " << sum.lemmas.case5_occurrences << " occurrences, case2-frobenius on "
      << sum.lemmas.case2_frobenius << " cells; violations " << sum.lemma_violations.size() << "\n";
  for (const auto& v : sum.lemma_violations)
    out << "  VIOLATION " << v.lemma << " n=" << v.n << " s=" << v.s << " p=" << v.p << ": " << v.detail << "\n";
  out << "inconclusive members: " << sum.inconclusive.size() << "\n";
  for (const auto& m : sum.inconclusive) out << "  n=" << m.n << " s=" << m.s << ": " << m.reason << "\n";
  out << "disagreements: " << sum.disagreements.size() << " (outside Case3: " << sum.non_case3_disagreements()
      << ")\n";
  for (const auto& c : sum.disagreements)
    out << "  n=" << c.n << " s=" << c.s << " p=" << c.row.p << " " << to_string(c.row.prime_case.tag) << " rule "
        << c.row.fastpath.rule << ": fastpath " << divides_word(c.row.fastpath.divides_index) << ", oracle "
        << divides_word(c.row.oracle.divides_index) << "\n";
  out << "result: " << (sum.exit_code() == 0 ? "PASS" : "FAIL") << "\n";
  return sum.exit_code();
}

inline IntPoly parse_monic(const std::string& text) {
  IntPoly f = parse_polynomial(text);
  if (!f.is_monic() || f.degree() < 2) throw DomainError("polynomial must be monic of degree >= 2");
  return f;
}

inline int cmd_tools_disc(const std::string& poly, const RunConfig& cfg, std::ostream& out) {
  const IntPoly f = parse_monic(poly);
  const Integer d = discriminant(f);
  require_invariant(d == discriminant_modular(f), "tools disc: PRS and CRT discriminants differ");
  if (cfg.json) {
    Json j{{"schema_version", kSchemaVersion}, {"polynomial", int_poly_to_json(f)}};
    if (d == 0) j["discriminant"] = Json{{"sign", 0}, {"factors", Json::array()}, {"cofactor", "0"}, {"value", "0"}};
    else j["discriminant"] = factored_to_json(factor(d, cfg.factoring));
    out << dump(j);
    return kOk;
  }
  out << d << "\n";
  if (d != 0) out << "= " << format_factored(factor(d, cfg.factoring)) << "\n";
  return kOk;
}

inline int cmd_tools_factor_int(const std::string& value, const RunConfig& cfg, std::ostream& out) {
  const Integer x = parse_integer(value, "integer");
  if (x == 0) throw UsageError("integer: 0 has no factorization");
  const FactoredInteger fac = factor(x, cfg.factoring);
  if (cfg.json) {
    out << dump(Json{{"schema_version", kSchemaVersion}, {"factorization", factored_to_json(fac)}});
    return kOk;
  }
  out << x << " = " << format_factored(fac) << "\n";
  return kOk;
}

inline int cmd_tools_factor_fp(const std::string& poly, const std::string& p_s, const RunConfig& cfg,
                               std::ostream& out) {
  const std::uint64_t p = parse_prime(p_s);
  const ModPoly f = parse_polynomial(poly).reduce_mod(p);
  if (f.is_zero()) throw DomainError("polynomial vanishes mod " + std::to_string(p));
  const FpFactorization fac = fp_factor(f, cfg.factoring.seed);
  if (cfg.json) {
    out << dump(Json{{"schema_version", kSchemaVersion}, {"factorization", fp_factorization_to_json(fac)}});
    return kOk;
  }
  out << format_fp_factorization(fac) << "\n";
  return kOk;
}

inline int cmd_tools_dedekind(const std::string& poly, const std::string& p_s, const RunConfig& cfg,
                              std::ostream& out) {
  const IntPoly f = parse_monic(poly);
  const std::uint64_t p = parse_prime(p_s);
  const IndexVerdict v = dedekind_test(f, p, LiftConvention::Canonical, cfg.factoring.seed);
  if (cfg.json) {
    out << dump(Json{{"schema_version", kSchemaVersion},
                     {"polynomial", int_poly_to_json(f)},
                     {"verdict", index_verdict_to_json(v)}});
    return kOk;
  }
  out << "f mod " << p << " = " << format_fp_factorization(fp_factor(f.reduce_mod(p), cfg.factoring.seed)) << "\n";
  out << "divides_index = " << (v.divides_index ? "true" : "false") << "\n";
  if (v.witness) out << "witness: " << format_witness(v.witness) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Parse argv, run the command, return the exit code. Nothing is written to std::cout directly.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monogenity certification for f(x) = x^n + a x^3 + b x + c", "monoquad"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string seed_s, irr_s, range_s, only_s;
  std::vector<std::string> ns_s;
  std::string n_s, a_s, b_s, c_s, poly_s, p_s, int_s;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Emit JSON instead of text");
    sub->add_option("--seed", seed_s, "Seed for randomized algorithms (default 0xD15C)");
    sub->add_option("--trial-bound", cfg.factoring.trial_bound, "Trial-division bound (default 1000000)");
    sub->add_option("--rho-cap", cfg.factoring.rho_cap, "Pollard-Brent iteration cap (default 1048576)");
    sub->add_option("--irr-primes", irr_s, "Irreducibility primes: a bound B (primes < B) or a list p1,p2,...");
  };

  auto* analyze = app.add_subcommand("analyze", "Analyze one family member");
  add_common(analyze);
  analyze->add_option("n", n_s)->required();
  analyze->add_option("a", a_s)->required();
  analyze->add_option("b", b_s)->required();
  analyze->add_option("c", c_s)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List family members for one n");
  add_common(enumerate);
  enumerate->add_option("n", n_s)->required();
  enumerate->add_option("--s", range_s, "Range LO..HI of the parameter s (default -10..10)");

  auto* cross = app.add_subcommand("crosscheck", "Compare fast paths against the Dedekind oracle");
  add_common(cross);
  cross->add_option("n", ns_s, "Degrees to sweep (default 6 9 12 15)");
  cross->add_option("--s", range_s, "Range LO..HI of the parameter s (default -10..10)");
  cross->add_option("--only", only_s, "Check the single cell N,S,P");
  cross->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first failing member");
  cross->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)");

  auto* tools = app.add_subcommand("tools", "Computer-algebra utilities");
  tools->require_subcommand(1);
  auto* disc = tools->add_subcommand("disc", "Discriminant of a monic polynomial");
  add_common(disc);
  disc->add_option("poly", poly_s)->required();
  auto* fint = tools->add_subcommand("factor-int", "Factor an integer");
  add_common(fint);
  fint->add_option("integer", int_s)->required();
  auto* ffp = tools->add_subcommand("factor-fp", "Factor a polynomial over F_p");
  add_common(ffp);
  ffp->add_option("poly", poly_s)->required();
  ffp->add_option("p", p_s)->required();
  auto* ded = tools->add_subcommand("dedekind", "Dedekind test at one prime");
  add_common(ded);
  ded->add_option("poly", poly_s)->required();
  ded->add_option("p", p_s)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (!seed_s.empty()) {
      const bool hex = seed_s.rfind("0x", 0) == 0 || seed_s.rfind("0X", 0) == 0;
      Integer seed;
      if (seed.set_str(hex ? seed_s.substr(2) : seed_s, hex ? 16 : 10) != 0 || seed < 0 || !fits_u64(seed))
        throw UsageError("--seed: '" + seed_s + "' is not a 64-bit unsigned integer");
      cfg.factoring.seed = to_u64(seed);
    }
    if (!irr_s.empty()) cfg.irr_primes = parse_prime_list(irr_s);
    if (!range_s.empty()) std::tie(cfg.s_lo, cfg.s_hi) = parse_range(range_s);
    if (!ns_s.empty()) {
      cfg.ns.clear();
      for (const auto& s : ns_s) cfg.ns.push_back(parse_long(s, "n"));
    }

    if (analyze->parsed()) return cmd_analyze(n_s, a_s, b_s, c_s, cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(n_s, cfg, out);
    if (cross->parsed()) return only_s.empty() ? cmd_crosscheck(cfg, out) : cmd_crosscheck_cell(only_s, cfg, out);
    if (disc->parsed()) return cmd_tools_disc(poly_s, cfg, out);
    if (fint->parsed()) return cmd_tools_factor_int(int_s, cfg, out);
    if (ffp->parsed()) return cmd_tools_factor_fp(poly_s, p_s, cfg, out);
    if (ded->parsed()) return cmd_tools_dedekind(poly_s, p_s, cfg, out);
    err << "error: no command\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    err << "invalid parameters: hypothesis '" << e.condition << "' fails: " << e.what() << "\n";
    return kInvalid;
  } catch (const ParseError& e) {
    err << "malformed polynomial " << e.what() << "\n";
    return kInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace monoquad::cli
