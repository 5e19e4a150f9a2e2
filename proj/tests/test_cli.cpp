#include <gtest/gtest.h>

#include <sstream>

#include "jung/cli.hpp"
#include "jung/io.hpp"

using namespace jung;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecomposeJson) {
  Outcome r = run({"--json", "decompose", "x + y^2; y"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out).dump(), R"([{"type":"triangular","axis":"x","poly":"y^2"}])");
}

TEST(Cli, CheckRejects) {
  Outcome r = run({"check", "x^2; y"});
  EXPECT_EQ(r.code, cli::kRejected);
  EXPECT_NE(r.out.find("non_constant_jacobian"), std::string::npos);
  EXPECT_NE(r.out.find("2*x"), std::string::npos);
}

TEST(Cli, InvertAndCompose) {
  Outcome inv = run({"invert", "x + y^2; y"});
  EXPECT_EQ(inv.code, cli::kOk) << inv.err;
  EXPECT_NE(inv.out.find("-y^2 + x; y"), std::string::npos) << inv.out;
  Outcome c = run({"compose", "x + y^2; y", "x - y^2; y"});
  EXPECT_EQ(c.code, cli::kOk);
  EXPECT_NE(c.out.find("x; y"), std::string::npos) << c.out;
}

TEST(Cli, VerifyDivision) {
  Outcome r = run({"--json", "verify-division", "x + y^2; y"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["conclusion"], "degQ_divides_degP");
  Outcome many = run({"--json", "verify-division", "x + y^2; y", "x; y + x^3"});
  EXPECT_EQ(many.code, cli::kOk);
  EXPECT_EQ(Json::parse(many.out).size(), 2u);
}

TEST(Cli, PuiseuxAndGenerate) {
  Outcome p = run({"--json", "puiseux", "y^2 - x^3"});
  EXPECT_EQ(p.code, cli::kOk) << p.err;
  EXPECT_EQ(Json::parse(p.out)["branches"][0]["ram"], 2);
  Outcome g = run({"--json", "generate", "--seed", "5", "--depth", "3"});
  EXPECT_EQ(g.code, cli::kOk) << g.err;
  Json j = Json::parse(g.out);
  EXPECT_TRUE(j.contains("map"));
  EXPECT_EQ(run({"--json", "generate", "--seed", "5", "--depth", "3"}).out, g.out);
}

TEST(Cli, UsageErrors) {
  Outcome bad = run({"check", "x + * y; y"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("position 4"), std::string::npos) << bad.err;
  EXPECT_NE(bad.err.find('^'), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run({"--tol", "-1", "check", "x; y"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}
