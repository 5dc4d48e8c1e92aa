#include <monoquad/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <sys/wait.h>

using namespace monoquad;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "monoquad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, AnalyzeExampleOne) {
  const CliRun r = run({"analyze", "12", "44", "36", "33"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "= -2^24 * 3^24 * 11^11 * 29 * 37"));
  EXPECT_TRUE(contains(r.out, "verdict: Monogenic"));
  EXPECT_TRUE(contains(r.out, "irreducible (certified mod 149)"));
  EXPECT_TRUE(contains(r.out, "11    Case3   3(iii)"));
  EXPECT_TRUE(contains(r.out, "general solution"));
}

TEST(Cli, AnalyzeExampleTwoReportsOracleVerdictAndDisagreement) {
  const CliRun r = run({"analyze", "9", "12", "9", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "= 2^24 * 3^19 * 47"));
  EXPECT_TRUE(contains(r.out, "verdict: Monogenic"));
  EXPECT_TRUE(contains(r.out, "3(p^2|c)"));
}

TEST(Cli, AnalyzeRejectsInvalidParameters) {
  const CliRun r = run({"analyze", "12", "44", "36", "32"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "hypothesis 'k integral' fails"));
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"analyze", "12", "44", "36"}).code, 2);
  EXPECT_EQ(run({"analyze", "12", "4x", "36", "33"}).code, 2);
}

TEST(Cli, AnalyzeNegativeMember) {
  const CliRun r = run({"analyze", "9", "-12", "-9", "-8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "verdict: NotMonogenic (index divisible by 2)") || contains(r.out, "NotMonogenic"));
  EXPECT_FALSE(contains(r.out, "general solution"));
}

TEST(Cli, Enumerate) {
  const CliRun r9 = run({"enumerate", "9", "--s", "1..1"});
  EXPECT_EQ(r9.code, 0);
  EXPECT_TRUE(contains(r9.out, "     1            12             9             8"));
  EXPECT_TRUE(contains(run({"enumerate", "12", "--s", "1..1"}).out, "44            36            33"));
  EXPECT_TRUE(contains(run({"enumerate", "15", "--s", "1..1"}).out, "35            30            28"));
  EXPECT_EQ(run({"enumerate", "7"}).code, 2);
  EXPECT_EQ(run({"enumerate", "9", "--s", "2..1"}).code, 2);
  EXPECT_EQ(run({"enumerate", "9", "--s", "1-2"}).code, 2);
}

TEST(Cli, CrosscheckDefaultSweep) {
  const CliRun r = run({"crosscheck"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "members: 80 of 80"));
  EXPECT_TRUE(contains(r.out, "(outside Case3: 0)"));
  EXPECT_TRUE(contains(r.out, "violations 0"));
}

TEST(Cli, CrosscheckSingleCell) {
  const CliRun r = run({"crosscheck", "--only", "12,1,11", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out).at("cell");
  EXPECT_EQ(j.at("case"), "Case3");
  EXPECT_EQ(j.at("agree"), true);
  EXPECT_EQ(j.at("fastpath").at("divides_index"), false);
  EXPECT_EQ(j.at("oracle").at("divides_index"), false);
  EXPECT_EQ(run({"crosscheck", "--only", "12,1,4"}).code, 2);
  EXPECT_EQ(run({"crosscheck", "--only", "12,1"}).code, 2);
}

TEST(Cli, CrosscheckEmptyRange) {
  const CliRun r = run({"crosscheck", "--s", "0..0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "members: 0 of 0"));
  EXPECT_EQ(run({"crosscheck", "--s", "3..1"}).code, 2);
}

TEST(Cli, Tools) {
  const CliRun d = run({"tools", "dedekind", "x^2-5", "2"});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(contains(d.out, "divides_index = true"));
  EXPECT_TRUE(contains(run({"tools", "dedekind", "x^2+1", "3"}).out, "divides_index = false"));

  const CliRun disc = run({"tools", "disc", "x^2+3x+1"});
  EXPECT_EQ(disc.code, 0);
  EXPECT_TRUE(contains(disc.out, "5"));
  const Json dj = Json::parse(run({"tools", "disc", "x^2+3x+1", "--json"}).out);
  EXPECT_EQ(dj.at("discriminant").at("value"), "5");

  EXPECT_TRUE(contains(run({"tools", "factor-fp", "x^12+1", "2"}).out, "(x + 1)^4 * (x^2 + x + 1)^4"));
  EXPECT_TRUE(contains(run({"tools", "factor-int", "360"}).out, "2^3 * 3^2 * 5"));

  const CliRun bad = run({"tools", "disc", "x^2 + y"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "at position 6"));
  EXPECT_EQ(run({"tools", "factor-fp", "x^2+1", "4"}).code, 2);
  EXPECT_EQ(run({"tools", "disc", "2x^2+1"}).code, 2);
  EXPECT_EQ(run({"tools"}).code, 2);
}

TEST(Cli, UsageErrorsAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze", "12", "44", "36", "33", "--seed", "zz"}).code, 2);
  EXPECT_EQ(run({"analyze", "12", "44", "36", "33", "--irr-primes", "4,5"}).code, 2);
  const CliRun h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_TRUE(contains(h.out, "crosscheck"));
}

TEST(Cli, JsonOutputParsesAndRoundTrips) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", "12", "44", "36", "33", "--json"},
        std::vector<std::string>{"analyze", "9", "-12", "-9", "-8", "--json"}}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
    EXPECT_EQ(family_report_to_json(family_report_from_json(j)).dump(2) + "\n", r.out);
  }
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"enumerate", "9", "--s", "-2..2", "--json"},
        std::vector<std::string>{"crosscheck", "--s", "-2..2", "--json"},
        std::vector<std::string>{"tools", "factor-fp", "x^12+1", "2", "--json"},
        std::vector<std::string>{"tools", "factor-int", "-360", "--json"},
        std::vector<std::string>{"tools", "dedekind", "x^2-5", "2", "--json"}}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NO_THROW(Json::parse(r.out)) << args[0];
  }
}

TEST(Cli, ByteIdenticalAcrossRunsAndThreads) {
  const CliRun a = run({"crosscheck", "--s", "-6..6", "--threads", "1"});
  const CliRun b = run({"crosscheck", "--s", "-6..6", "--threads", "8"});
  const CliRun c = run({"crosscheck", "--s", "-6..6"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const CliRun j1 = run({"crosscheck", "--s", "-6..6", "--json", "--threads", "1"});
  const CliRun j8 = run({"crosscheck", "--s", "-6..6", "--json", "--threads", "8"});
  EXPECT_EQ(j1.out, j8.out);
  EXPECT_EQ(run({"analyze", "12", "44", "36", "33", "--json"}).out,
            run({"analyze", "12", "44", "36", "33", "--json"}).out);
}

TEST(Cli, SeedDoesNotChangeResults) {
  EXPECT_EQ(run({"analyze", "12", "44", "36", "33", "--seed", "7"}).out,
            run({"analyze", "12", "44", "36", "33", "--seed", "0xD15C"}).out);
}

TEST(Cli, ExitCodeTable) {
  const std::vector<std::pair<std::vector<std::string>, int>> corpus{
      {{"analyze", "12", "44", "36", "33"}, 0},
      {{"analyze", "9", "12", "9", "8"}, 0},
      {{"analyze", "9", "-12", "-9", "-8"}, 0},
      {{"analyze", "12", "44", "36", "32"}, 2},
      {{"analyze", "9", "1", "1", "1"}, 2},
      {{"analyze", "3", "5", "1", "0"}, 2},
      {{"enumerate", "9", "--s", "1..1"}, 0},
      {{"enumerate", "10"}, 2},
      {{"crosscheck", "--only", "12,1,11"}, 0},
      {{"crosscheck", "--only", "9,1,2"}, 0},
      {{"crosscheck", "9", "12", "--s", "-3..3", "--fail-fast"}, 0},
      {{"tools", "disc", "x^+1"}, 2},
      {{"tools", "factor-int", "0"}, 2},
      {{"tools", "dedekind", "x^2-5", "9"}, 2},
  };
  for (const auto& [args, want] : corpus) {
    const CliRun r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, want) << joined << "\n" << r.err;
  }
}

TEST(Cli, BinaryMatchesInProcessRun) {
  const std::string cmd = std::string(MONOQUAD_CLI_PATH) + " tools disc 'x^2+3x+1' 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(out, run({"tools", "disc", "x^2+3x+1"}).out);

  FILE* bad = popen((std::string(MONOQUAD_CLI_PATH) + " analyze 12 44 36 32 2>/dev/null").c_str(), "r");
  ASSERT_NE(bad, nullptr);
  while (std::fgets(buf, sizeof buf, bad)) {
  }
  EXPECT_EQ(WEXITSTATUS(pclose(bad)), 2);
}
