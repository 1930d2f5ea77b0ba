#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using roofcalc::cli::run_cli;
using json = nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BottLineBundle) {
  const Invocation r = run({"bott", "--k", "1", "--n", "5", "--weight", "1|0,0,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["command"], "bott");
  EXPECT_EQ(j["outputs"]["degree"], 0);
  EXPECT_EQ(j["outputs"]["dimension"], "5");
}

TEST(Cli, BottWeightMustFitAmbient) {
  EXPECT_EQ(run({"bott", "--k", "2", "--n", "5", "--weight", "1|0,0,0,0"}).code, 3);
}

TEST(Cli, PairTwoSix) {
  const Invocation r = run({"pair", "--k", "2", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["outputs"]["y1"]["diamond"]["h"][2][2], "2271");
  EXPECT_EQ(j["outputs"]["y2"]["diamond"]["h"][3][3], "2272");
  EXPECT_EQ(j["outputs"]["theorem"]["pass"], true);
  EXPECT_EQ(j["outputs"]["epolyIdentity"]["residual"], "0");
  EXPECT_EQ(j["exact"], true);
}

TEST(Cli, PairOneSixPoints) {
  const Invocation r = run({"pair", "--k", "1", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["outputs"]["y1"]["pointCount"], "21");
}

TEST(Cli, PairPrecondition) {
  EXPECT_EQ(run({"pair", "--k", "3", "--n", "6"}).code, 3);
}

TEST(Cli, RoofsRankTwo) {
  const Invocation r = run({"roofs", "--max-rank", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  int exceptional = 0;
  const json j = json::parse(r.out);
  for (const auto& rec : j["outputs"]["records"]) {
    const std::string g = rec["groupType"];
    if (g[0] >= 'E') {
      ++exceptional;
      EXPECT_EQ(g, "G2");
    }
  }
  EXPECT_EQ(exceptional, 1);
  const Invocation text = run({"roofs", "--max-rank", "2"});
  EXPECT_NE(text.out.find("G_2"), std::string::npos);
}

TEST(Cli, HodgeDiamondText) {
  const Invocation r = run({"hodge", "--k", "2", "--n", "6", "--bundle", "QD*O(2)", "--diamond"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2271"), std::string::npos);
  EXPECT_NE(r.out.find("672"), std::string::npos);
}

TEST(Cli, HodgeRawIsAmbiguous) {
  const Invocation r = run({"hodge", "--k", "2", "--n", "6", "--bundle", "QD*O(2)", "--raw"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(json::parse(r.out)["exact"], false);
}

TEST(Cli, HodgeParseError) {
  const Invocation r = run({"hodge", "--k", "2", "--n", "6", "--bundle", "QD*"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at byte 3"), std::string::npos) << r.err;
}

TEST(Cli, HodgePlethysm) {
  EXPECT_EQ(run({"hodge", "--k", "2", "--n", "6", "--bundle", "Sym^2(Sym^2(QD))"}).code, 3);
}

TEST(Cli, UnknownFlagIsParseError) {
  EXPECT_EQ(run({"bott", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, Lr) {
  const Invocation r = run({"lr", "--rank", "3", "--a", "1,0,0", "--b", "1,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json terms = json::parse(r.out)["outputs"]["terms"];
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0]["weight"], json({2, 0, 0}));
  EXPECT_EQ(terms[1]["weight"], json({1, 1, 0}));
}

TEST(Cli, WindowsNegativeControlIsMismatch) {
  EXPECT_EQ(run({"windows", "--n", "4", "--m-max", "8", "--side", "minus", "--box-cap", "2"}).code, 5);
  EXPECT_EQ(run({"windows", "--n", "5", "--m-max", "4"}).code, 0);
  EXPECT_EQ(run({"windows", "--n", "5", "--m-max", "4", "--side", "left"}).code, 2);
}

TEST(Cli, VerifyPublishedSuite) {
  const Invocation a = run({"verify", "--suite", "paper"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "other"}).code, 3);
}

TEST(Cli, VerifyIsDeterministicAcrossThreadCounts) {
  ::setenv("ROOFCALC_THREADS", "1", 1);
  const Invocation one = run({"verify", "--suite", "paper", "--json"});
  ::setenv("ROOFCALC_THREADS", "3", 1);
  const Invocation three = run({"verify", "--suite", "paper", "--json"});
  ::unsetenv("ROOFCALC_THREADS");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, BadThreadCount) {
  ::setenv("ROOFCALC_THREADS", "zero", 1);
  const Invocation r = run({"roofs", "--max-rank", "2"});
  ::unsetenv("ROOFCALC_THREADS");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "roofcalc_cli_out.json";
  std::filesystem::remove(path);
  const Invocation r = run({"lr", "--rank", "2", "--a", "1,0", "--b", "0,-1", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j["outputs"]["terms"].size(), 2u);
  std::filesystem::remove(path);
}
