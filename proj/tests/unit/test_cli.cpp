#include <gtest/gtest.h>

#include <sstream>

#include "octic/doubly_even.hpp"
#include "octic_cli/cli.hpp"

namespace cli = octic::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

cli::Json single_json(const std::vector<std::string>& args, int expected_code) {
  auto with_json = args;
  with_json.push_back("--output");
  with_json.push_back("json");
  const Outcome o = run(with_json);
  EXPECT_EQ(o.code, expected_code) << o.err;
  return cli::Json::parse(o.out);
}

std::vector<cli::Json> lines(const std::string& text) {
  std::vector<cli::Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(cli::Json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, ClassifySpecExamples) {
  auto r = single_json({"classify", "--family", "doubly-even", "-a", "2", "-b", "4"}, 0);
  EXPECT_EQ(r["group"], "8T9");
  EXPECT_EQ(r["exact"], true);
  EXPECT_EQ(r["input"]["polynomial"], (cli::Json{"4", "0", "0", "0", "2", "0", "0", "0", "1"}));
  EXPECT_FALSE(r["trace"].empty());
  r = single_json({"classify", "--family", "palindromic", "-a", "1", "-b", "-9"}, 0);
  EXPECT_EQ(r["group"], "8T10");
  EXPECT_EQ(r["quartic_group"], "C4");
  EXPECT_EQ(r["options"]["data_mode"], "paper-sourced");
  EXPECT_TRUE(r["group_info"][0]["order"].is_null());
}

TEST(Cli, ExitCodeTable) {
  EXPECT_EQ(run({"classify", "-a", "1", "-b", "2"}).code, cli::kExitOutOfScope);
  EXPECT_EQ(run({"classify", "--family", "palindromic", "-a", "0", "-b", "2"}).code, cli::kExitOutOfScope);
  EXPECT_EQ(run({"classify", "-a", "34", "-b", "1"}).code, cli::kExitReducible);
  EXPECT_EQ(run({"classify", "-a", "0", "-b", "4"}).code, cli::kExitReducible);
  EXPECT_EQ(run({"classify", "--family", "palindromic", "-a", "4", "-b", "6"}).code, cli::kExitReducible);
  EXPECT_EQ(run({"classify", "-a", "1/0", "-b", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "-a", "x", "-b", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "-a", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "--family", "cubic", "-a", "1", "-b", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"batch", "--a-range", "5..1", "-b", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"batch", "--a-range", "1..2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "-a", "-1", "-b", "1"}).code, cli::kExitOk);
  EXPECT_EQ(run({"info"}).code, cli::kExitOk);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, ReducibleReportCarriesWitness) {
  const auto r = single_json({"classify", "-a", "34", "-b", "1"}, cli::kExitReducible);
  EXPECT_EQ(r["status"], "reducible");
  EXPECT_EQ(r["irreducible"], false);
  ASSERT_EQ(r["witness"].size(), 2u);
  EXPECT_EQ(r["witness"][0], (cli::Json{"1", "4", "8", "4", "1"}));
}

TEST(Cli, IrreducibleCommand) {
  auto r = single_json({"irreducible", "-a", "34", "-b", "1"}, 0);
  EXPECT_EQ(r["irreducible"], false);
  EXPECT_EQ(r["witness"].size(), 2u);
  r = single_json({"irreducible", "-a", "1", "-b", "2"}, 0);
  EXPECT_EQ(r["irreducible"], true);
  r = single_json({"irreducible", "--family", "palindromic", "-a", "221/24", "-b", "2989/144"}, 0);
  EXPECT_EQ(r["irreducible"], false);
}

TEST(Cli, ResolventAndVerify) {
  auto r = single_json({"resolvent", "-a", "1", "-b", "4"}, 0);
  EXPECT_EQ(r["degree"], 28);
  EXPECT_EQ(r["identity_holds"], true);
  r = single_json({"verify", "--family", "palindromic", "-a", "1", "-b", "-3"}, 0);
  EXPECT_EQ(r["verification"]["ok"], true);
  EXPECT_EQ(r["verification"]["observed_pattern"], "4^5,8");
  EXPECT_EQ(r["group"], "8T4");
  r = single_json({"classify", "-a", "0", "-b", "9", "--verify"}, 0);
  EXPECT_EQ(r["verification"]["observed_pattern"], "4,8^3");
}

TEST(Cli, RefineFlag) {
  auto r = single_json({"classify", "--family", "palindromic", "-a", "1", "-b", "-1"}, 0);
  EXPECT_EQ(r["candidates"].size(), 4u);
  EXPECT_TRUE(r["group"].is_null());
  r = single_json({"classify", "--family", "palindromic", "-a", "1", "-b", "-1", "--refine"}, 0);
  EXPECT_EQ(r["candidates"], (cli::Json{"8T10", "8T18"}));
  EXPECT_EQ(r["refined_by_pattern"], "4^3,16");
}

TEST(Cli, JsonReportsRoundTrip) {
  const std::vector<std::vector<std::string>> jobs{
      {"classify", "-a", "2", "-b", "4"},
      {"classify", "--family", "palindromic", "-a", "1", "-b", "-3", "--refine"},
      {"classify", "-a", "34", "-b", "1"},
      {"classify", "-a", "1", "-b", "2", "--external-data"},
      {"irreducible", "-a", "-3/2", "-b", "9/4"},
      {"verify", "-a", "3", "-b", "1"},
      {"info", "--external-data"},
  };
  for (const auto& args : jobs) {
    auto with_json = args;
    with_json.insert(with_json.end(), {"--output", "json"});
    const Outcome first = run(with_json);
    const cli::Json report = cli::Json::parse(first.out);
    const cli::RunResult again = cli::run(cli::job_from_report(report));
    ASSERT_EQ(again.reports.size(), 1u);
    EXPECT_EQ(again.reports[0].dump(), report.dump()) << args[0];
    EXPECT_EQ(again.exit_code, first.code);
  }
  EXPECT_THROW(cli::job_from_report(cli::Json{{"schema", "other/9"}}), cli::UsageError);
}

TEST(Cli, BatchCorollaryConsistency) {
  const Outcome o = run({"batch", "--family", "doubly-even", "--b", "1", "--a-range", "-10..10", "--output", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto reports = lines(o.out);
  ASSERT_EQ(reports.size(), 21u);
  for (const auto& r : reports) {
    if (r["status"] != "ok") {
      EXPECT_EQ(r["status"], "reducible");
      continue;
    }
    const auto a = octic::Rational::parse(r["input"]["a"].get<std::string>());
    EXPECT_EQ(r["group"], octic::doubly_even::classify_b1(a).to_string());
  }
}

TEST(Cli, BatchGridsKeepInputOrder) {
  const Outcome o = run({"batch", "--a-range", "1..3", "--k-range", "1..2", "--output", "json"});
  ASSERT_EQ(o.code, 0);
  const auto reports = lines(o.out);
  ASSERT_EQ(reports.size(), 6u);
  EXPECT_EQ(reports[0]["input"]["a"], "1");
  EXPECT_EQ(reports[0]["input"]["b"], "1");
  EXPECT_EQ(reports[1]["input"]["b"], "4");
  EXPECT_EQ(reports[5]["input"]["a"], "3");
  const Outcome p = run({"batch", "--family", "palindromic", "--a-range", "1..2", "--b-range", "-1..0", "--output", "json"});
  EXPECT_EQ(lines(p.out).size(), 4u);
}

TEST(Cli, FamilySearch) {
  const auto members = cli::family_search(cli::Template::ft, {1, 10});
  ASSERT_EQ(members.size(), 10u);
  int survivors = 0;
  for (const auto& m : members) {
    if (!m.irreducible) continue;
    ++survivors;
    EXPECT_EQ(m.group, octic::GroupId(3)) << m.t;
  }
  EXPECT_GT(survivors, 0);
  EXPECT_FALSE(members[1].irreducible);  // t = 2: (x^4 + 1)^2
  EXPECT_TRUE(members[2].irreducible);
  EXPECT_EQ(members[2].polynomial, (octic::UniPoly{1, 0, 0, 0, 7, 0, 0, 0, 1}));
  const Outcome o = run({"batch", "--template", "ft", "--t-range", "1..3", "--output", "json"});
  const auto reports = lines(o.out);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[2]["group"], "8T3");
  EXPECT_TRUE(reports[1]["group"].is_null());
}

TEST(Cli, TextOutput) {
  const Outcome o = run({"classify", "-a", "0", "-b", "9"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("8T11"), std::string::npos);
  EXPECT_NE(o.out.find("4b-a^2"), std::string::npos);
  const Outcome info = run({"info"});
  EXPECT_NE(info.out.find("8T22"), std::string::npos);
}

TEST(IntRange, Parse) {
  EXPECT_EQ(cli::IntRange::parse("-10..10"), (cli::IntRange{-10, 10}));
  EXPECT_EQ(cli::IntRange::parse("3..3").to_string(), "3..3");
  EXPECT_THROW(cli::IntRange::parse("1-2"), cli::UsageError);
  EXPECT_THROW(cli::IntRange::parse("a..2"), cli::UsageError);
  EXPECT_THROW(cli::IntRange::parse("0..99999999"), cli::UsageError);
}
