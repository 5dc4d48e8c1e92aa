#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding of reports (nlohmann::json).
 *
 * Arbitrary-size integers are written as decimal strings. Word-size values
 * (primes, residues, exponents) are JSON numbers. Key order is fixed, so equal
 * reports serialize to identical bytes.
 */

#include "dedekind.hpp"
#include "int_poly.hpp"
#include "integer.hpp"
#include "mod_poly.hpp"
#include "quadrinomial.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace monoquad {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw JsonError("expected a decimal string, got " + j.dump());
  Integer out;
  if (out.set_str(j.get<std::string>(), 10) != 0) throw JsonError("malformed integer " + j.dump());
  return out;
}

template <class E>
E enum_from_json(const Json& j, std::initializer_list<E> values) {
  const auto s = j.get<std::string>();
  for (E v : values)
    if (s == to_string(v)) return v;
  throw JsonError("unknown tag " + j.dump());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

inline Json int_poly_to_json(const IntPoly& f) {
  Json coeffs = Json::array();
  for (const auto& v : f.coeffs()) coeffs.push_back(v.get_str());
  return Json{{"coeffs", coeffs}, {"text", f.to_string()}};
}

inline IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& v : j.at("coeffs")) c.push_back(detail::integer_from_json(v));
  return IntPoly(std::move(c));
}

inline Json mod_poly_to_json(const ModPoly& f) {
  return Json{{"p", f.modulus()}, {"coeffs", f.coeffs()}, {"text", f.to_string()}};
}

inline ModPoly mod_poly_from_json(const Json& j) {
  return ModPoly(j.at("p").get<std::uint64_t>(), j.at("coeffs").get<std::vector<std::uint64_t>>());
}

inline Json fp_factorization_to_json(const FpFactorization& fac) {
  Json factors = Json::array();
  for (const auto& [g, m] : fac.factors)
    factors.push_back(Json{{"factor", mod_poly_to_json(g)}, {"multiplicity", m}});
  return Json{{"p", fac.p}, {"unit", fac.unit}, {"factors", factors}};
}

inline FpFactorization fp_factorization_from_json(const Json& j) {
  FpFactorization out;
  out.p = j.at("p").get<std::uint64_t>();
  out.unit = j.at("unit").get<std::uint64_t>();
  for (const auto& f : j.at("factors"))
    out.factors.push_back({mod_poly_from_json(f.at("factor")), f.at("multiplicity").get<unsigned>()});
  return out;
}

// ---------------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------------

inline Json factored_to_json(const FactoredInteger& x) {
  Json factors = Json::array();
  for (const auto& [p, e] : x.factors) factors.push_back(Json::array({p.get_str(), e}));
  return Json{{"sign", x.sign}, {"factors", factors}, {"cofactor", x.cofactor.get_str()},
              {"value", x.value().get_str()}};
}

inline FactoredInteger factored_from_json(const Json& j) {
  FactoredInteger out;
  out.sign = j.at("sign").get<int>();
  for (const auto& pe : j.at("factors"))
    out.factors.push_back({detail::integer_from_json(pe.at(0)), pe.at(1).get<unsigned>()});
  out.cofactor = detail::integer_from_json(j.at("cofactor"));
  if (j.contains("value") && out.value() != detail::integer_from_json(j.at("value")))
    throw JsonError("factored integer: value does not match its factors");
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

inline Json witness_to_json(const IndexWitness& w) {
  return Json{{"factor", mod_poly_to_json(w.factor)}, {"multiplicity", w.multiplicity}};
}

inline IndexWitness witness_from_json(const Json& j) {
  return {mod_poly_from_json(j.at("factor")), j.at("multiplicity").get<unsigned>()};
}

inline Json index_verdict_to_json(const IndexVerdict& v) {
  Json j{{"p", v.p}, {"divides_index", v.divides_index}, {"method", to_string(v.method)},
         {"rule", v.rule}};
  if (v.method == IndexMethod::FastPath) j["fast_case"] = v.fast_case;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

inline IndexVerdict index_verdict_from_json(const Json& j) {
  IndexVerdict v;
  v.p = j.at("p").get<std::uint64_t>();
  v.divides_index = j.at("divides_index").get<bool>();
  v.method = detail::enum_from_json(j.at("method"),
                                    {IndexMethod::Oracle, IndexMethod::Lemma5, IndexMethod::FastPath});
  v.rule = j.at("rule").get<std::string>();
  v.fast_case = j.value("fast_case", 0);
  if (j.contains("witness")) v.witness = witness_from_json(j.at("witness"));
  return v;
}

inline Json irreducibility_to_json(const IrreducibilityCertificate& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Irreducible>)
          return Json{{"kind", "Irreducible"}, {"prime", v.prime}};
        else if constexpr (std::is_same_v<T, Reducible>)
          return Json{{"kind", "Reducible"}, {"factor", int_poly_to_json(v.factor)}};
        else
          return Json{{"kind", "Unknown"}, {"possible_factor_degrees", v.possible_factor_degrees}};
      },
      c);
}

inline IrreducibilityCertificate irreducibility_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Irreducible") return Irreducible{j.at("prime").get<std::uint64_t>()};
  if (kind == "Reducible") return Reducible{int_poly_from_json(j.at("factor"))};
  if (kind == "Unknown")
    return IrreducibilityUnknown{j.at("possible_factor_degrees").get<std::vector<long>>()};
  throw JsonError("unknown irreducibility kind " + kind);
}

inline Json verdict_to_json(const Verdict& v) {
  return Json{{"kind", to_string(v.kind)}, {"witness_primes", v.witness_primes}, {"reason", v.reason}};
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.kind = detail::enum_from_json(
      j.at("kind"), {VerdictKind::Monogenic, VerdictKind::NotMonogenic, VerdictKind::Inconclusive});
  v.witness_primes = j.at("witness_primes").get<std::vector<std::uint64_t>>();
  v.reason = j.at("reason").get<std::string>();
  return v;
}

// ---------------------------------------------------------------------------
// Family reports
// ---------------------------------------------------------------------------

inline Json quantities_to_json(const CaseQuantities& q) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Case2Quantities>)
          return Json{{"r", v.r}, {"m", v.m}, {"u0", v.u0.get_str()}, {"u1", v.u1.get_str()},
                      {"u2", v.u2.get_str()}};
        else if constexpr (std::is_same_v<T, Case3Quantities>)
          return Json{{"s", v.s}, {"m1", v.m1}, {"v0", v.v0.get_str()}, {"v1", v.v1.get_str()},
                      {"v2", v.v2.get_str()}};
        else if constexpr (std::is_same_v<T, Case4Quantities>)
          return Json{{"t", v.t}, {"m2", v.m2}, {"w0", v.w0.get_str()}, {"w1", v.w1.get_str()},
                      {"w2", v.w2.get_str()}};
        else if constexpr (std::is_same_v<T, Case5Quantities>)
          return Json{{"k1", v.k1}, {"R", v.R}};
        else
          return Json::object();
      },
      q);
}

inline CaseQuantities quantities_from_json(CaseTag tag, const Json& j) {
  using detail::integer_from_json;
  switch (tag) {
    case CaseTag::Case2:
      return Case2Quantities{j.at("r").get<unsigned>(), j.at("m").get<long>(), integer_from_json(j.at("u0")),
                             integer_from_json(j.at("u1")), integer_from_json(j.at("u2"))};
    case CaseTag::Case3:
      return Case3Quantities{j.at("s").get<unsigned>(), j.at("m1").get<long>(), integer_from_json(j.at("v0")),
                             integer_from_json(j.at("v1")), integer_from_json(j.at("v2"))};
    case CaseTag::Case4:
      return Case4Quantities{j.at("t").get<unsigned>(), j.at("m2").get<long>(), integer_from_json(j.at("w0")),
                             integer_from_json(j.at("w1")), integer_from_json(j.at("w2"))};
    case CaseTag::Case5: return Case5Quantities{j.at("k1").get<long>(), j.at("R").get<int>()};
    default: return std::monostate{};
  }
}

inline Json family_row_to_json(const FamilyPrimeRow& r) {
  Json j{{"p", r.p},
         {"case", to_string(r.prime_case.tag)},
         {"quantities", quantities_to_json(r.prime_case.aux)},
         {"fastpath", index_verdict_to_json(r.fastpath)},
         {"oracle", index_verdict_to_json(r.oracle)},
         {"agree", r.agree}};
  if (r.oracle.witness) j["witness"] = witness_to_json(*r.oracle.witness);
  return j;
}

inline FamilyPrimeRow family_row_from_json(const Json& j) {
  FamilyPrimeRow r;
  r.p = j.at("p").get<std::uint64_t>();
  r.prime_case.tag = detail::enum_from_json(j.at("case"), {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3,
                                                           CaseTag::Case4, CaseTag::Case5, CaseTag::Case6});
  r.prime_case.aux = quantities_from_json(r.prime_case.tag, j.at("quantities"));
  r.fastpath = index_verdict_from_json(j.at("fastpath"));
  r.oracle = index_verdict_from_json(j.at("oracle"));
  r.agree = j.at("agree").get<bool>();
  return r;
}

inline Json family_report_to_json(const FamilyReport& rep) {
  Json primes = Json::array();
  for (const auto& r : rep.rows) primes.push_back(family_row_to_json(r));
  return Json{{"schema_version", kSchemaVersion},
              {"polynomial",
               {{"n", rep.q.n},
                {"a", rep.q.a.get_str()},
                {"b", rep.q.b.get_str()},
                {"c", rep.q.c.get_str()},
                {"text", rep.report.polynomial.to_string()}}},
              {"discriminant", factored_to_json(rep.report.discriminant)},
              {"primes", primes},
              {"verdict", verdict_to_json(rep.report.verdict)},
              {"irreducibility", irreducibility_to_json(rep.report.irreducibility)}};
}

/// Inverse of family_report_to_json. The member is re-validated.
inline FamilyReport family_report_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw JsonError("unsupported schema_version " + j.at("schema_version").dump());
  const Json& poly = j.at("polynomial");
  FamilyReport rep;
  rep.q = validate(poly.at("n").get<long>(), detail::integer_from_json(poly.at("a")),
                   detail::integer_from_json(poly.at("b")), detail::integer_from_json(poly.at("c")));
  rep.report.polynomial = rep.q.polynomial();
  rep.report.discriminant = factored_from_json(j.at("discriminant"));
  for (const auto& row : j.at("primes")) {
    rep.rows.push_back(family_row_from_json(row));
    rep.report.per_prime.push_back(rep.rows.back().oracle);
  }
  rep.report.verdict = verdict_from_json(j.at("verdict"));
  rep.report.irreducibility = irreducibility_from_json(j.at("irreducibility"));
  return rep;
}

}  // namespace monoquad
