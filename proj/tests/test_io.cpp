#include <monoquad/crosscheck.hpp>
#include <monoquad/json_io.hpp>
#include <monoquad/poly_parse.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace monoquad;

namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_polynomial(text);
  } catch (const ParseError& e) {
    return e.position;
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return std::string::npos;
}

}  // namespace

TEST(Parse, Grammar) {
  EXPECT_EQ(parse_polynomial("x^12 + 44*x^3 + 36*x + 33"), IntPoly({33, 36, 0, 44, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(parse_polynomial("x^2-5"), IntPoly({-5, 0, 1}));
  EXPECT_EQ(parse_polynomial("  -x**2 + 3x - 1 "), IntPoly({-1, 3, -1}));
  EXPECT_EQ(parse_polynomial("t^3 + t^3"), IntPoly({0, 0, 0, 2}));
  EXPECT_EQ(parse_polynomial("7"), IntPoly({7}));
  EXPECT_EQ(parse_polynomial("x - x"), IntPoly());
  EXPECT_EQ(parse_polynomial("2 * y ^ 2"), IntPoly({0, 0, 2}));
  EXPECT_EQ(parse_polynomial("123456789012345678901234567890*x").lead(), Integer("123456789012345678901234567890"));
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("   "), 3u);
  EXPECT_EQ(error_position("x^"), 2u);
  EXPECT_EQ(error_position("x^2 + y"), 6u);
  EXPECT_EQ(error_position("x^2 x"), 4u);
  EXPECT_EQ(error_position("3*"), 2u);
  EXPECT_EQ(error_position("x^2 + "), 6u);
  EXPECT_EQ(error_position("xy"), 1u);
  EXPECT_EQ(error_position("x^9999999"), 2u);
  EXPECT_EQ(error_position("x + ?"), 4u);
  try {
    parse_polynomial("x^2 + y");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("mixed variables"), std::string::npos);
  }
}

TEST(Parse, RoundTripsToString) {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 500; ++t) {
    const IntPoly f = oracle::random_monic(1 + static_cast<long>(rng() % 15), 1000, rng);
    ASSERT_EQ(parse_polynomial(f.to_string()), f) << f.to_string();
    ASSERT_EQ(parse_polynomial(f.to_string('z')), f);
  }
}

TEST(Json, BigIntegersAreStrings) {
  const Quadrinomial q = validate(12, 44, 36, 33);
  const Json j = family_report_to_json(family_report(q));
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_TRUE(j.at("polynomial").at("a").is_string());
  EXPECT_EQ(j.at("polynomial").at("text"), "x^12 + 44*x^3 + 36*x + 33");
  EXPECT_EQ(j.at("discriminant").at("sign"), -1);
  EXPECT_TRUE(j.at("discriminant").at("value").is_string());
  EXPECT_EQ(j.at("discriminant").at("value").get<std::string>(), discriminant(q.polynomial()).get_str());
  EXPECT_EQ(j.at("verdict").at("kind"), "Monogenic");
  const Json& row = j.at("primes").at(0);
  EXPECT_EQ(row.at("p"), 2);
  EXPECT_EQ(row.at("case"), "Case2");
  EXPECT_EQ(row.at("fastpath").at("rule"), "2(i)");
  EXPECT_TRUE(row.at("quantities").at("u0").is_string());
  EXPECT_EQ(row.at("agree"), true);
}

TEST(Json, FamilyReportRoundTrip) {
  for (const Quadrinomial& q : {validate(12, 44, 36, 33), validate(9, 12, 9, 8), validate(9, -12, -9, -8)}) {
    const FamilyReport rep = family_report(q);
    const Json j = family_report_to_json(rep);
    const FamilyReport back = family_report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, rep) << q.polynomial().to_string();
    EXPECT_EQ(family_report_to_json(back).dump(), j.dump());
  }
}

TEST(Json, SweepRoundTrip) {
  SweepOptions opt;
  opt.audit_prime_bound = 100;
  for (const auto& r : run_members(sweep_members({6, 9, 12, 15, 18}, -6, 6), opt)) {
    const Json j = family_report_to_json(r.report);
    ASSERT_EQ(family_report_from_json(Json::parse(j.dump())), r.report) << r.member.n << " " << r.member.s;
  }
}

TEST(Json, PiecesRoundTrip) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 1'000'000'007}[rng() % 5];
    const ModPoly f = oracle::random_mod_poly(p, 1 + static_cast<long>(rng() % 8), rng, true);
    ASSERT_EQ(mod_poly_from_json(mod_poly_to_json(f)), f);
    const FpFactorization fac = fp_factor(f);
    ASSERT_EQ(fp_factorization_from_json(fp_factorization_to_json(fac)), fac);
  }
  const FactoredInteger d = factor(Integer("-340282366920938463463374607431768211456"));
  EXPECT_EQ(factored_from_json(factored_to_json(d)), d);
  for (const IrreducibilityCertificate& c :
       {IrreducibilityCertificate(Irreducible{149}), IrreducibilityCertificate(Reducible{IntPoly({1, 1})}),
        IrreducibilityCertificate(IrreducibilityUnknown{{2, 4}})})
    EXPECT_EQ(irreducibility_from_json(irreducibility_to_json(c)), c);
}

TEST(Json, RejectsMalformedInput) {
  Json j = family_report_to_json(family_report(validate(12, 44, 36, 33)));
  Json wrong_version = j;
  wrong_version["schema_version"] = 99;
  EXPECT_THROW(family_report_from_json(wrong_version), JsonError);
  Json numeric = j;
  numeric["polynomial"]["a"] = 44;
  EXPECT_THROW(family_report_from_json(numeric), JsonError);
  Json invalid = j;
  invalid["polynomial"]["c"] = "32";
  EXPECT_THROW(family_report_from_json(invalid), ValidationError);
  Json tampered = j;
  tampered["discriminant"]["value"] = "12";
  EXPECT_THROW(family_report_from_json(tampered), JsonError);
}
