#include "brackets/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace brackets;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cli::dispatch(args, out, err, in);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, StraightenReferenceTableau) {
  auto r = run({"straighten", "--ring", "6,3", "[1 4 5]*[1 5 6]*[2 3 4]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[256]*[145]*[134]-[356]*[145]*[124]+[456]*[145]*[123]\n");
}

TEST(Cli, BracketArgumentsAreNotSplit) {
  auto commas = run({"straighten", "--ring", "6,3", "[1,4,5]*[1,5,6]*[2,3,4]"});
  EXPECT_EQ(commas.code, 0);
  EXPECT_EQ(commas.out, "[256]*[145]*[134]-[356]*[145]*[124]+[456]*[145]*[123]\n");
  auto lone = run({"straighten", "--ring", "6,3", "[1,5,4]"});
  EXPECT_EQ(lone.out, "-[145]\n");
  auto words = run({"straighten", "--ring", "6,3", "[1 4 5]*[1 5 6]", "*[2 3 4]"});
  EXPECT_EQ(words.out, commas.out);
  auto compact = run({"prove", "--ring", "4,2", "[12]*[34] - [13]*[24] + [14]*[23] == 0"});
  EXPECT_EQ(compact.code, 0);
}

TEST(Cli, ProvePluecker) {
  auto r = run({"prove", "--ring", "4,2", "[1 2]*[3 4]-[1 3]*[2 4]+[1 4]*[2 3] == 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUAL\n");
  auto split = run({"prove", "--ring", "4,2", "[1 2]*[3 4]-[1 3]*[2 4]+[1 4]*[2 3]", "==", "0"});
  EXPECT_EQ(split.code, 0);
}

TEST(Cli, ProveFalseExitsOne) {
  auto r = run({"prove", "--ring", "4,2", "[1 2]*[3 4] == [1 3]*[2 4]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOT EQUAL\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "Usage") || contains(r.err, "usage") || contains(r.err, "SUBCOMMAND"));
  EXPECT_EQ(run({"straighten", "--ring", "6", "[1 2 3]"}).code, 2);
  EXPECT_EQ(run({"straighten", "--ring", "6,x", "[1 2 3]"}).code, 2);
  EXPECT_EQ(run({"prove", "--ring", "4,2", "[1 2]"}).code, 2);
  EXPECT_EQ(run({"demo", "pappus"}).code, 2);
  EXPECT_EQ(run({"run", "/nonexistent/file.gc"}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "demo", "desargues"}).code, 2);
}

TEST(Cli, EvaluationErrorsExitThree) {
  auto r = run({"straighten", "--ring", "4,2", "[1 2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.err, "error"));
  EXPECT_EQ(run({"straighten", "--ring", "5,3", "[1 2 9]"}).code, 3);
  EXPECT_EQ(run({"straighten", "--ring", "3,4", "0"}).code, 3);
}

TEST(Cli, DemoDesargues) {
  auto r = run({"demo", "desargues"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "np = [bdf]*[ace]-[bef]*[acd]-[cdf]*[abe]-[def]*[abc]\n"));
  EXPECT_TRUE(contains(r.out, "nl = [def]*[bdf]*[ace]*[abc]-"));
  EXPECT_TRUE(contains(r.out, "IDENTITY VERIFIED: straighten([abc][def]·np − 2·nl) = 0\n"));
  EXPECT_EQ(run({"demo", "desargues"}).out, r.out);
}

TEST(Cli, DemoTransversals) {
  auto r = run({"demo", "transversals"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "coefficient of m^2: [bdef]*[bcgh]-[bdgh]*[bcef]\n"));
  EXPECT_TRUE(contains(r.out, "coefficient of l^2: "));
  EXPECT_TRUE(contains(r.out, "coefficient of l*m: "));
  EXPECT_TRUE(contains(r.out, "disc at random configuration"));
  EXPECT_TRUE(contains(r.out, "infinitely many transversals: all three coefficients vanish\n"));
  EXPECT_FALSE(contains(r.out, "UNEXPECTED"));
  EXPECT_EQ(run({"demo", "transversals"}).out, r.out);
}

TEST(Cli, JsonFormat) {
  auto r = run({"--format", "json", "straighten", "--ring", "4,2", "[1 3]*[2 4]"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["degree"], 0);
  EXPECT_EQ(j["terms"].size(), 1u);
  auto zero = nlohmann::json::parse(run({"--format", "json", "straighten", "--ring", "4,2", "0"}).out);
  EXPECT_EQ(zero["degree"], 0);
  EXPECT_TRUE(zero["terms"].empty());
  auto d = nlohmann::json::parse(run({"--format", "json", "demo", "desargues"}).out);
  EXPECT_EQ(d["identity_verified"], true);
  auto p = nlohmann::json::parse(run({"--format", "json", "prove", "--ring", "4,2", "0 == 0"}).out);
  EXPECT_EQ(p["equal"], true);
}

TEST(Cli, FormatFromEnvironment) {
  ::setenv("GCBRACKETS_FORMAT", "json", 1);
  auto r = run({"straighten", "--ring", "4,2", "[1 2]"});
  ::unsetenv("GCBRACKETS_FORMAT");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
  auto explicit_text = run({"--format", "text", "straighten", "--ring", "4,2", "[1 2]"});
  EXPECT_EQ(explicit_text.out, "[12]\n");
}

TEST(Cli, RunScriptFile) {
  auto r = run({"run", GCBRACKETS_SOURCE_DIR "/scripts/desargues.gc"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "> normalForm([abc]*[def]*np2 - 2*nl)\n0\n"));
}

TEST(Cli, Repl) {
  auto r = run({"repl"}, "gc(a..f, 3)\na*d ^ b*e\nzz\n[abc]*[abc]\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "[bde]*a+[abe]*d\n"));
  EXPECT_TRUE(contains(r.out, "[abc]^2\n"));
  EXPECT_TRUE(contains(r.err, "unbound name 'zz'"));
}

TEST(Cli, ColorOnlyWhenAsked) {
  auto plain = run({"prove", "--ring", "4,2", "0 == 0"});
  EXPECT_FALSE(contains(plain.out, "\x1b["));
  auto color = run({"--color", "prove", "--ring", "4,2", "0 == 0"});
  EXPECT_TRUE(contains(color.out, "\x1b[32mEQUAL"));
}
