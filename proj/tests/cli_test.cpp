#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hirzebruch/cli.hpp"

namespace {

using hirzebruch::cli::json;
using hirzebruch::cli::OutputRecord;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "hirzebruch");
  std::ostringstream out, err;
  const int code = hirzebruch::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

OutputRecord run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Invocation r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return hirzebruch::cli::record_from_json(json::parse(r.out));
}

// Minimal RFC 4180 reader for the round-trip checks below.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') field += '"', ++i;
      else if (c == '"') quoted = false;
      else field += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(field), field.clear();
    } else if (c == '\n') {
      row.push_back(field), field.clear();
      rows.push_back(row), row.clear();
    } else {
      field += c;
    }
  }
  return rows;
}

std::string text_of(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void expect_csv_matches_json(const std::vector<std::string>& args) {
  const OutputRecord rec = run_json(args);
  auto csv_args = args;
  csv_args.push_back("--format");
  csv_args.push_back("csv");
  const Invocation r = run(csv_args);
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), rec.results.size() + 1);
  for (std::size_t i = 0; i < rec.results.size(); ++i) {
    std::size_t k = 0;
    for (const auto& item : rec.results[i].items()) {
      EXPECT_EQ(rows[0][k], item.key());
      EXPECT_EQ(rows[i + 1][k], text_of(item.value())) << item.key();
      ++k;
    }
    EXPECT_EQ(rows[i + 1].size(), k);
  }
}

TEST(CliCoh, SingleClassTable) {
  const Invocation r = run({"coh", "--e", "1", "--class", "1,1", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h0=3 h1=0 h2=0"), std::string::npos) << r.out;
}

TEST(CliCoh, ProfileRows) {
  const OutputRecord rec = run_json({"coh", "--e", "2", "--class", "-3,0", "--twist-by", "1,2", "--t", "0..4"});
  ASSERT_EQ(rec.results.size(), 5u);
  EXPECT_EQ(rec.results[3]["t"], 3);
  EXPECT_EQ(rec.results[3]["a"], 0);
  EXPECT_EQ(rec.results[3]["h0"], 7);
}

TEST(CliCoh, NegativeClassToken) {
  const OutputRecord rec = run_json({"coh", "--e", "1", "--class", "-2,-1"});
  EXPECT_EQ(rec.results.at(0)["h2"], 0);
  EXPECT_EQ(rec.results.at(0)["h1"], 1);
}

TEST(CliCheck, LineWitness) {
  const OutputRecord rec = run_json({"check", "--e", "2", "--line", "1,0", "--wrt", "M"});
  const json& row = rec.results.at(0);
  EXPECT_EQ(row["value"], false);
  EXPECT_EQ(row["verdict"], "FAILS");
  EXPECT_EQ(row["witness_t"], 0);
  EXPECT_EQ(row["witness_h0"], 1);
  EXPECT_EQ(row["witness_h1"], 1);
  EXPECT_TRUE(rec.findings.empty());
}

TEST(CliCheck, SumIdealExtensionAndVanishing) {
  EXPECT_EQ(run_json({"check", "--e", "1", "--sum", "0,0;-2,3"}).results[0]["value"], false);
  EXPECT_EQ(run_json({"check", "--e", "1", "--ideal", "fiber:1:1,3"}).results[0]["value"], true);
  EXPECT_EQ(run_json({"check", "--e", "1", "--line", "1,1", "--pp"}).results[0]["value"], true);
  EXPECT_EQ(run_json({"check", "--e", "2", "--line", "0,-3", "--wrt", "R"}).results[0]["value"], false);
  const json ext = run_json({"check", "--e", "2", "--extension", "2,1,0,0"}).results[0];
  EXPECT_EQ(ext["verdict"], "FAILS");
  EXPECT_EQ(ext["witness_h0"], 3);
  EXPECT_EQ(ext["witness_h1"], 1);
}

TEST(CliCheck, EvidenceListsScannedTwists) {
  const json row = run_json({"check", "--e", "1", "--line", "2,1", "--evidence"}).results[0];
  EXPECT_FALSE(row["evidence"].get<std::string>().empty());
}

TEST(CliConstruct, CertificatesAndStability) {
  const json row = run_json({"construct", "--e", "1", "--u", "3", "--v", "2", "--m", "0", "--s", "4"}).results[0];
  EXPECT_EQ(row["section_min"], true);
  EXPECT_EQ(row["stable_R"], true);
  EXPECT_EQ(row["stable_M"], true);
  EXPECT_EQ(row["c1"], "(3,2)");
}

TEST(CliClassify, WitnessRange) {
  const OutputRecord rec = run_json({"classify", "--e", "1", "--r", "2", "--u", "2..2", "--v", "1..1", "--m-max", "3"});
  ASSERT_EQ(rec.results.size(), 1u);
  EXPECT_EQ(rec.results[0]["label"], "EXISTENT");
  EXPECT_EQ(rec.results[0]["c2_witness"], "1..24");
}

TEST(CliEnumerate, DefaultsToCsv) {
  const Invocation r = run({"enumerate", "--e", "1", "--u", "0..1", "--v", "-1..1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "e,r,u,v,label,c2_witness");
  EXPECT_EQ(parse_csv(r.out).size(), 7u);
}

TEST(CliAudit, DirectSumCounterexampleConfirmedForEachE) {
  const OutputRecord rec = run_json({"audit", "--claims", "a3", "--e", "1..4"});
  int confirmed = 0;
  for (const auto& f : rec.findings)
    if (f.find("fails at t=0") != std::string::npos && f.find("confirmed") != std::string::npos) ++confirmed;
  EXPECT_EQ(confirmed, 4);
}

TEST(CliAudit, Idempotent) {
  const Invocation a = run({"audit", "--claims", "a0,a2,o2-pounds", "--e", "1..2", "--format", "json"});
  const Invocation b = run({"audit", "--claims", "a0,a2,o2-pounds", "--e", "1..2", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliOracle, SmallGridExitsZero) {
  const Invocation r = run({"oracle", "--e", "1..2", "--a", "-3..3", "--b", "-5..5", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliFormats, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"coh", "--e", "1", "--class", "1,1"},
           {"check", "--e", "2", "--line", "1,0"},
           {"construct", "--e", "2", "--u", "2", "--v", "1", "--m", "0", "--s", "0"},
           {"audit", "--claims", "a3", "--e", "1..2"}}) {
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const Invocation r = run(json_args);
    ASSERT_EQ(r.code, 0) << r.err;
    const OutputRecord rec = hirzebruch::cli::record_from_json(json::parse(r.out));
    EXPECT_EQ(hirzebruch::cli::to_json(rec).dump(2) + "\n", r.out);
    EXPECT_EQ(hirzebruch::cli::record_from_json(hirzebruch::cli::to_json(rec)), rec);
  }
}

TEST(CliFormats, CsvMatchesJson) {
  expect_csv_matches_json({"coh", "--e", "3", "--class", "1,2", "--t", "-3..3"});
  expect_csv_matches_json({"check", "--e", "1", "--sum", "3,3;0,5", "--evidence"});
  expect_csv_matches_json({"classify", "--e", "2", "--u", "-1..3", "--v", "-2..4"});
  expect_csv_matches_json({"audit", "--claims", "a2,o3", "--e", "1..2"});
  expect_csv_matches_json({"construct", "--e", "1", "--u", "3", "--v", "2", "--m", "0", "--s", "3"});
}

TEST(CliExitCodes, Usage) {
  EXPECT_EQ(run({"coh", "--e", "1", "--class", "1x1"}).code, 2);
  EXPECT_EQ(run({"coh", "--e", "x", "--class", "1,1"}).code, 2);
  EXPECT_EQ(run({"classify", "--e", "1", "--u", "3..1", "--v", "0..1"}).code, 2);
  EXPECT_EQ(run({"classify", "--e", "1", "--u", "1...3", "--v", "0..1"}).code, 2);
  EXPECT_EQ(run({"check", "--e", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--e", "1", "--line", "1,1", "--sum", "1,1;0,0"}).code, 2);
  EXPECT_EQ(run({"check", "--e", "1", "--ideal", "plane:1:1,1"}).code, 2);
  EXPECT_EQ(run({"audit", "--claims", "zz"}).code, 2);
  EXPECT_EQ(run({"coh", "--e", "1", "--class", "1,1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliExitCodes, DiagnosticNamesToken) {
  const Invocation r = run({"coh", "--e", "1", "--class", "1x1"});
  EXPECT_NE(r.err.find("'1x1'"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CliExitCodes, Domain) {
  EXPECT_EQ(run({"coh", "--e", "0", "--class", "1,1"}).code, 3);
  EXPECT_EQ(run({"check", "--e", "1", "--line", "1,1", "--wrt", "0,1"}).code, 3);
  EXPECT_EQ(run({"check", "--e", "1", "--ideal", "general:-1:1,1"}).code, 3);
  EXPECT_EQ(run({"construct", "--e", "1", "--u", "0", "--v", "-5", "--m", "0", "--s", "0"}).code, 3);
  EXPECT_EQ(run({"classify", "--e", "1", "--r", "3", "--u", "0..1", "--v", "0..1"}).code, 3);
  EXPECT_EQ(run({"oracle", "--e", "0..2", "--a", "0..1", "--b", "0..1"}).code, 3);
}

TEST(CliExitCodes, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
