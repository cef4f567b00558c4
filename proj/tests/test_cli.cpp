#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rbl/cli.hpp"
#include "rbl/constructions.hpp"
#include "rbl/io.hpp"
#include "rbl/serialize.hpp"
#include "rbl/store.hpp"
#include "rbl/verifier.hpp"

using namespace rbl;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

auto run(std::vector<std::string> args) -> Run {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv(kStoreEnv);
    dir_ = fs::temp_directory_path() /
           ("rbl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv(kStoreEnv);
    fs::remove_all(dir_);
  }
  auto path(const std::string& name) const -> std::string { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ExactTrivialRainbow) {
  auto r = run({"exact", "--n", "2", "--s", "2", "--t", "2", "--q", "4"});
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "Exact");
  EXPECT_EQ(j["value"], 4);
}

TEST_F(CliTest, VerifyMonochromaticViolation) {
  write_text_file(path("mono3.json"), to_json(monochromatic(3)).dump());
  auto r = run({"verify", "--coloring", path("mono3.json"), "--s", "2", "--t", "2", "--q", "2"});
  EXPECT_EQ(r.code, 1);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "Violation");
  EXPECT_TRUE(j["witness"].is_object());
}

TEST_F(CliTest, VerifyVacuousAndValid) {
  write_text_file(path("r2.json"), to_json(rainbow(2)).dump());
  EXPECT_EQ(run({"verify", "--coloring", path("r2.json"), "--s", "1", "--t", "3", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--coloring", path("r2.json"), "--s", "2", "--t", "2", "--q", "4"}).code, 0);
}

TEST_F(CliTest, LemmaA1HasNoViolations) {
  auto r = run({"check-lemmas", "--which", "a1", "--s-max", "200", "--t-max", "600"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["violations"].empty());
}

TEST_F(CliTest, CorradiSeeds) {
  auto r = run({"check-lemmas", "--which", "gen-corradi", "--seeds", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["checked"], 50);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"exact", "--n", "2", "--bogus", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"exact", "--n", "2", "--s", "3", "--t", "2", "--q", "2"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"verify", "--coloring", path("missing.json"), "--s", "1", "--t", "1", "--q", "2"}).code,
            cli::kExitDomain);
  EXPECT_EQ(run({"energy", "--coloring", path("big.json"), "--r", "4"}).code, cli::kExitDomain);
  write_text_file(path("big.json"), to_json(rainbow(40)).dump());
  EXPECT_EQ(run({"energy", "--coloring", path("big.json"), "--r", "4"}).code, cli::kExitResource);
  EXPECT_EQ(run({"exact", "--n", "5", "--s", "2", "--t", "2", "--q", "3", "--node-limit", "3"}).code,
            cli::kExitResource);
}

TEST_F(CliTest, ConstructRoundTripMatchesInMemoryVerdicts) {
  struct K {
    std::vector<std::string> args;
    ConstructionResult direct;
  };
  std::vector<K> ks{
      {{"construct", "star-i", "--n", "6", "--t", "5", "--q", "3"}, star_upper_i(6, 5, 3)},
      {{"construct", "near-rainbow-pairs", "--n", "5", "--s", "3", "--t", "3"}, near_rainbow_pairs(5, 3, 3)},
      {{"construct", "k89", "--n", "9"}, k89_block(9)},
      {{"construct", "hypergraph", "--n", "6", "--s", "4", "--t", "4", "--seed", "5"},
       [] {
         HypergraphConfig cfg;
         cfg.n = 6;
         cfg.s = 4;
         cfg.t = 4;
         cfg.seed = 5;
         return hypergraph_coloring(cfg);
       }()},
  };
  for (auto& k : ks) {
    auto args = k.args;
    args.push_back("--out");
    args.push_back(path("c.json"));
    ASSERT_EQ(run(args).code, 0);
    auto j = read_json_file(path("c.json"));
    EXPECT_EQ(j["claim"]["palette"], k.direct.claimed_palette);
    const Coloring parsed = coloring_from_json(j["coloring"]);
    EXPECT_EQ(parsed, k.direct.coloring);
    for (int q = 2; q <= k.direct.claimed_spec.q; ++q) {
      const PatternSpec spec{k.direct.claimed_spec.s, k.direct.claimed_spec.t, q};
      EXPECT_EQ(verify(parsed, spec).status, verify(k.direct.coloring, spec).status);
    }
  }
}

TEST_F(CliTest, SeededPayloadsAreByteIdentical) {
  auto a = run({"construct", "hypergraph", "--n", "7", "--s", "4", "--t", "4", "--seed", "9"});
  auto b = run({"construct", "hypergraph", "--n", "7", "--s", "4", "--t", "4", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  write_text_file(path("c.json"), to_json(near_rainbow_pairs(6, 2, 2).coloring).dump());
  auto e1 = run({"energy", "--coloring", path("c.json"), "--pruned", "--seed", "4"});
  auto e2 = run({"energy", "--coloring", path("c.json"), "--pruned", "--seed", "4"});
  EXPECT_EQ(e1.code, 0);
  EXPECT_EQ(e1.out, e2.out);
}

TEST_F(CliTest, EnergyGraphEmission) {
  write_text_file(path("c.json"), to_json(monochromatic(2)).dump());
  auto r = run({"energy", "--coloring", path("c.json"), "--r", "2", "--emit", "graph"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["edges"].size(), 16u);
  EXPECT_EQ(j["edges"][0]["left"].size(), 2u);
}

TEST_F(CliTest, StoreAppendsAndReportUsesLatest) {
  const std::string store = path("store.jsonl");
  ASSERT_EQ(run({"exact", "--n", "4", "--s", "1", "--t", "4", "--q", "3", "--store", store}).code, 0);
  ASSERT_EQ(run({"exact", "--n", "4", "--s", "1", "--t", "4", "--q", "3", "--store", store}).code, 0);
  EXPECT_EQ(load_store(store).records.size(), 2u);
  auto rep = Json::parse(run({"report", "--store", store}).out);
  ASSERT_EQ(rep["rows"].size(), 1u);
  EXPECT_EQ(rep["rows"][0]["agreement"], "agree");
  EXPECT_EQ(rep["rows"][0]["predictions"][0]["value"], 3);
}

TEST_F(CliTest, EmptyStoreGivesEmptyTable) {
  auto rep = Json::parse(run({"report", "--store", path("none.jsonl")}).out);
  EXPECT_TRUE(rep["rows"].empty());
  EXPECT_EQ(run({"report"}).code, cli::kExitDomain);
}

TEST_F(CliTest, BracketIsInconclusiveAndMismatchesComeFirst) {
  const std::string store = path("store.jsonl");
  run({"exact", "--n", "5", "--s", "2", "--t", "2", "--q", "3", "--node-limit", "3", "--store", store});
  ResultRecord wrong{{3, 1, 3, 3, "exact", 0}, Json{{"status", "Exact"}, {"lo", 2}, {"hi", 2}, {"value", 2}}, "t"};
  append_record(store, wrong);
  ResultRecord right{{3, 1, 2, 2, "exact", 0}, Json{{"status", "Exact"}, {"lo", 3}, {"hi", 3}, {"value", 3}}, "t"};
  append_record(store, right);
  {
    std::ofstream out(store, std::ios::app);
    out << "{not json\n";
  }
  auto r = run({"report", "--store", store});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("corrupt"), std::string::npos);
  auto rows = Json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["agreement"], "mismatch");
  bool inconclusive = false;
  for (const auto& row : rows) inconclusive = inconclusive || row["agreement"] == "inconclusive";
  EXPECT_TRUE(inconclusive);
}

TEST_F(CliTest, EnvironmentOverridesStoreFlag) {
  const std::string env_store = path("env.jsonl");
  setenv(kStoreEnv, env_store.c_str(), 1);
  ASSERT_EQ(run({"bounds", "--s", "2", "--t", "2", "--q", "4", "--store", path("flag.jsonl")}).code, 0);
  EXPECT_TRUE(fs::exists(env_store));
  EXPECT_FALSE(fs::exists(path("flag.jsonl")));
}

TEST_F(CliTest, RecordsRoundTrip) {
  ResultRecord rec{{4, 1, 4, 3, "exact", 7, kToolVersion}, Json{{"status", "Exact"}, {"value", 3}}, "2026-01-01T00:00:00Z"};
  auto back = record_from_json(record_to_json(rec));
  EXPECT_EQ(back.key, rec.key);
  EXPECT_EQ(back.payload, rec.payload);
  EXPECT_THROW(record_from_json(Json{{"key", 1}}), std::exception);
}
