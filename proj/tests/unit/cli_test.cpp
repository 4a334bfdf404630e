#include "bookhopf/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace bookhopf;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bookhopf");
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliVerify, Examples) {
  EXPECT_EQ(run({"verify", "--p", "5", "--s", "2"}).code, 0);
  const CliRun bad = run({"verify", "--p", "4", "--s", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("p must be prime"), std::string::npos);
  const CliRun neg = run({"verify", "--p", "3", "--s", "0", "--permissive"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_NE(neg.out.find("Delta(y)^p = 0"), std::string::npos);
  EXPECT_NE(neg.out.find("match the predicted"), std::string::npos);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--p", "5", "--s", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--p", "5", "--s", "7"}).code, 2);
  EXPECT_EQ(run({"verify", "--p", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "--s", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--p", "5", "--s", "1", "--all-s"}).code, 2);
  EXPECT_EQ(run({"verify", "--p", "5", "--s", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliVerify, JsonOutput) {
  const CliRun r = run({"verify", "--p", "3", "--all-s", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("reports").size(), 2u);
  for (const auto& rep : j.at("reports")) EXPECT_EQ(rep.at("status"), "pass");

  const CliRun neg = run({"verify", "--p", "3", "--s", "0", "--permissive", "--format", "json"});
  ASSERT_EQ(neg.code, 0);
  const json nj = json::parse(neg.out);
  EXPECT_TRUE(nj.at("negative_control_matches").get<bool>());
  EXPECT_EQ(nj.get<AxiomReport>().p, 3);
}

TEST(CliClassify, Examples) {
  const CliRun r = run({"classify", "--p", "5", "--s", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("MPI: (i=1, j=0)"), std::string::npos);

  const CliRun all = run({"classify", "--p", "5", "--all-s", "--format", "json"});
  ASSERT_EQ(all.code, 0);
  const json j = json::parse(all.out);
  for (const auto& c : j.at("classifications")) {
    const int s = c.at("s").get<int>();
    EXPECT_EQ(!c.at("mpi").empty(), s == 1 || s == 4) << s;
  }
}

TEST(CliClassify, JsonMatchesSchemaAndText) {
  const CliRun r = run({"classify", "--p", "7", "--s", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.at("mpi").empty());
  const Classification c = classification_from_json(j);
  EXPECT_EQ(c.implements(), (std::vector<PairIndex>{predicted_s2_pair(7, 3)}));
  // Text and JSON carry the same data.
  const CliRun text = run({"classify", "--p", "7", "--s", "3"});
  EXPECT_EQ(text.out, render_text(c));
}

TEST(CliTable, Examples) {
  for (int p : {3, 5, 7}) {
    const CliRun r = run({"table", "--p", std::to_string(p), "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const Table t = table_from_json(json::parse(r.out));
    ASSERT_EQ(t.rows.size(), static_cast<std::size_t>(p - 1));
    for (const auto& row : t.rows) EXPECT_EQ(row.mpi_exists, row.s == 1 || row.s == p - 1);
    EXPECT_EQ(run({"table", "--p", std::to_string(p)}).out, render_text(t));
  }
  const CliRun permissive = run({"table", "--p", "3", "--permissive", "--format", "json"});
  EXPECT_EQ(json::parse(permissive.out).at("rows").front().at("s"), 0);
  EXPECT_EQ(run({"table", "--p", "9"}).code, 2);
}
