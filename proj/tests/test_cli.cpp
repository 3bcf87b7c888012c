#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncsieve/cli.hpp"

using ncsieve::io::Json;
namespace cli = ncsieve::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ncsieve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> records(const std::string& jsonl) {
  std::vector<Json> out;
  std::istringstream in(jsonl);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

// Rebuilds json records from tsv rows (record, pointer, value).
std::vector<Json> from_tsv(const std::string& tsv) {
  std::vector<Json> out;
  std::istringstream in(tsv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "record\tpath\tvalue");
  while (std::getline(in, line)) {
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    const auto idx = std::stoul(line.substr(0, t1));
    if (idx >= out.size()) out.resize(idx + 1);
    const Json::json_pointer ptr(line.substr(t1 + 1, t2 - t1 - 1));
    out[idx][ptr] = Json::parse(line.substr(t2 + 1));
  }
  return out;
}

}  // namespace

TEST(Cli, EnumerateThree) {
  const auto r = run({"enumerate", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitPass);
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 5u);
  EXPECT_EQ(recs[0], Json::parse(R"({"n":3,"arcs":[],"balls":[]})"));
  EXPECT_EQ(recs[4], Json::parse(R"({"n":3,"arcs":[[1,2]],"balls":[]})"));
}

TEST(Cli, PolyQCatalan) {
  const auto r = run({"poly", "--which", "qcatalan", "--n", "2"});
  EXPECT_EQ(r.code, cli::kExitPass);
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["entries"][0]["coefficients"], Json::parse("[1,0,1]"));
  EXPECT_EQ(recs[0]["entries"][0]["terms"], Json::parse("[[0,1],[2,1]]"));
}

TEST(Cli, PolyBivariate) {
  const auto r = run({"poly", "--which", "fibonomial", "--n", "4", "--k", "2"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(records(r.out)[0]["entries"][0]["terms"], Json::parse("[[0,2,2],[2,1,3],[4,0,1]]"));
}

TEST(Cli, VerifyCspRange) {
  const auto r = run({"verify", "--target", "csp", "--n-from", "2", "--n-to", "13", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitPass);
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 12u);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i]["command"], "verify");
    EXPECT_EQ(recs[i]["parameters"]["n"], static_cast<int>(i) + 2);
    EXPECT_TRUE(recs[i]["verdict"].get<bool>());
    EXPECT_EQ(recs[i]["entries"].size(), i + 1);
  }
}

TEST(Cli, StatsAndBijection) {
  auto r = run({"stats", "--n-from", "1", "--n-to", "6"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(records(r.out).size(), 6u);

  r = run({"bijection", "--config", R"({"n":8,"arcs":[[1,3],[4,6]],"balls":[5,7]})"});
  EXPECT_EQ(r.code, cli::kExitPass);
  auto row = records(r.out).at(0);
  EXPECT_EQ(row["dyck"], "0001001110101101");
  EXPECT_EQ(row["cwt"], 38);
  EXPECT_EQ(row["ops"], Json::parse("[[1,3],[4,5],[5,6],[7,7]]"));

  r = run({"bijection", "--path", "0101"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(records(r.out).at(0)["configuration"], Json::parse(R"({"n":2,"arcs":[],"balls":[1]})"));

  r = run({"bijection", "--n", "5"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(records(r.out).size(), 42u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--target", "nope", "--n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--target", "csp"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--target", "csp", "--n-from", "5", "--n-to", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--target", "csp", "--n", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"enumerate", "--n", "16"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bijection", "--config", R"({"n":5,"arcs":[[1,3],[2,4]],"balls":[]})"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bijection", "--config", "not json"}).code, cli::kExitUsage);
  const auto r = run({"enumerate", "--n", "3", "--format", "xml"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, cli::kExitPass); }

TEST(Cli, DihedralSkipsOddN) {
  const auto r = run({"verify", "--target", "dihedral", "--n-from", "2", "--n-to", "6"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(records(r.out).size(), 3u);
  EXPECT_NE(r.err.find("skipping target dihedral at n=3"), std::string::npos);
}

TEST(Cli, TsvCarriesTheSameInformationAsJson) {
  const std::vector<std::vector<std::string>> invocations{
      {"verify", "--target", "all", "--n-from", "1", "--n-to", "6"},
      {"enumerate", "--n", "4"},
      {"bijection", "--n", "4"},
      {"poly", "--which", "fibcatalan", "--n", "3"}};
  for (auto args : invocations) {
    const auto json = run(args);
    args.insert(args.end(), {"--format", "tsv"});
    const auto tsv = run(args);
    EXPECT_EQ(json.code, tsv.code);
    EXPECT_EQ(records(json.out), from_tsv(tsv.out)) << args[0];
  }
}

TEST(Cli, TableFormatRuns) {
  const auto r = run({"verify", "--target", "csp", "--n", "4", "--format", "table"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_NE(r.out.find("fixed_count"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "--target", "all", "--n-from", "2", "--n-to", "7"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, cli::kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFileUnderOutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "ncsieve_cli_test";
  std::filesystem::create_directories(dir);
  ::setenv("NCSIEVE_OUT_DIR", dir.c_str(), 1);
  const auto r = run({"poly", "--which", "qint", "--n", "3", "--out", "qint.jsonl"});
  ::unsetenv("NCSIEVE_OUT_DIR");
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "qint.jsonl");
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(records(body.str()).at(0)["entries"][0]["coefficients"], Json::parse("[1,1,1]"));
  EXPECT_EQ(body.str().back(), '\n');
  std::filesystem::remove_all(dir);
}

TEST(Cli, MatchesGoldenFile) {
  std::ifstream in(std::string(NCSIEVE_GOLDEN_DIR) + "/verify_all_2_10.jsonl");
  ASSERT_TRUE(in) << "golden file missing";
  std::stringstream golden;
  golden << in.rdbuf();
  const auto r = run({"verify", "--target", "all", "--n-from", "2", "--n-to", "10"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(r.out, golden.str());
}

TEST(Cli, ExceptionsMapToExitCodes) {
  std::ostringstream err;
  EXPECT_EQ(cli::guarded(err, [] { return cli::kExitFail; }), cli::kExitFail);
  EXPECT_EQ(cli::guarded(err, []() -> int { throw ncsieve::InternalError("broken"); }), cli::kExitInternal);
  EXPECT_EQ(cli::guarded(err, []() -> int { throw std::invalid_argument("bad"); }), cli::kExitUsage);
  EXPECT_NE(err.str().find("internal error: broken"), std::string::npos);
}
