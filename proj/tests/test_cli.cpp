#include "asreg/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = asreg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RelationsP2) {
  const auto r = run({"relations", "--kind", "P2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["f1"], "x^2y-yx^2+yxy");
  EXPECT_EQ(j["f2"], "xy^2-y^2x+y^3");
  EXPECT_TRUE(j.contains("span"));
}

TEST(Cli, RelationsViaG2MatchesTableSpan) {
  const auto table = run({"relations", "--kind", "T1", "--beta", "3/2"});
  const auto g2 = run({"relations", "--kind", "T1", "--beta", "3/2", "--via", "g2"});
  ASSERT_EQ(table.code, 0) << table.err;
  ASSERT_EQ(g2.code, 0) << g2.err;
  EXPECT_EQ(table.json()["span"], g2.json()["span"]);
}

TEST(Cli, SideConditionIsReportedVerbatim) {
  const auto r = run({"relations", "--kind", "S1", "--alpha", "1", "--beta", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("α² ≠ β²"), std::string::npos) << r.err;
}

TEST(Cli, CheckAsRegular) {
  auto r = run({"check-asreg", "--kind", "S2", "--alpha", "2", "--beta", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["asRegular"], true);
  EXPECT_EQ(r.json()["commonZeroEmpty"], true);

  r = run({"check-asreg", "--f1", "x^3", "--f2", "y^3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["asRegular"], false);
}

TEST(Cli, IsoAndMorita) {
  auto r = run({"iso", "--a", R"({"kind":"P1","params":{"alpha":"2"}})", "--b",
                R"({"kind":"P1","params":{"alpha":"1/2"}})"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["related"], true);

  r = run({"iso", "--a", R"({"kind":"T1","params":{"beta":"3"}})", "--b", R"({"kind":"T1","params":{"beta":"-2"}})",
           "--method", "geometric"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["method"], "geometric");
  EXPECT_TRUE(r.json()["witness"].contains("tau"));

  r = run({"morita", "--a", R"({"kind":"S1","params":{"alpha":"2","beta":"3"}})", "--b",
           R"({"kind":"T1","params":{"beta":"1"}})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["related"], false);

  r = run({"iso", "--a", R"({"kind":"S2","params":{"alpha":"2","beta":"3"}})", "--b",
           R"({"kind":"S2","params":{"alpha":"4","beta":"6"}})", "--method", "geometric"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, Intersect) {
  auto r = run({"intersect", "--tau1", "[[1,1],[0,1]]", "--tau2", "[[1,0],[0,1]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["type"], "One");
  r = run({"intersect", "--tau1", "[[2,0],[0,1]]", "--tau2", "[[1,0],[0,1]]"});
  EXPECT_EQ(r.json()["type"], "Two");
  EXPECT_EQ(r.json()["points"].size(), 2U);
  r = run({"intersect", "--tau1", "[[0,2],[1,0]]", "--tau2", "[[1,0],[0,1]]"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, VerifyTables) {
  const auto r = run({"verify-tables", "--samples", "1", "--seed", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["allPass"], true);
  EXPECT_EQ(j["rows"].size(), 6U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"relations", "--kind", "Q7"}).code, 2);
  EXPECT_EQ(run({"relations", "--kind", "P1", "--alpha", "2/0"}).code, 2);
  EXPECT_EQ(run({"iso", "--a", "{not json", "--b", "{}"}).code, 2);
  EXPECT_EQ(run({"intersect", "--tau1", "[[1,1]]", "--tau2", "[[1,0],[0,1]]"}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify-tables", "--samples", "2", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> g2{"relations", "--kind", "S2", "--alpha", "2", "--beta", "5", "--via", "g2"};
  EXPECT_EQ(run(g2).out, run(g2).out);
}

TEST(Cli, PrettyOutputParses) {
  const auto r = run({"--pretty", "relations", "--kind", "P1", "--alpha", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find('\n'), r.out.size() - 1);
  EXPECT_EQ(r.json()["kind"], "P1");
}
