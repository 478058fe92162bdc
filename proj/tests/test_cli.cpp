#include <gtest/gtest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace sumprod::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sumprod_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST(CliParse, Examples) {
  const Command eval = parse({"eval", "--graph", "g.txt", "--labels", "l.txt"});
  EXPECT_EQ(eval.name, "eval");
  EXPECT_EQ(eval.get("graph"), "g.txt");
  EXPECT_EQ(parse({"table9"}).name, "table9");
  EXPECT_THROW(parse({"frobnicate"}), UsageError);
  EXPECT_THROW(parse({"table9", "--bogus"}), UsageError);
  EXPECT_THROW(parse({"euler"}), UsageError);
  EXPECT_THROW(parse({"construct"}), UsageError);
  EXPECT_THROW(parse({"euler", "--depth", "2", "--format", "xml"}), UsageError);
  const Command c = parse({"construct", "reduce", "--complete", "64", "--seed", "5"});
  EXPECT_EQ(c.name, "construct");
  EXPECT_EQ(c.mode, "reduce");
  EXPECT_EQ(c.seed, 5u);
  EXPECT_TRUE(c.seed_given);
  EXPECT_THROW(parse({"construct", "reduce"}), UsageError);
  EXPECT_THROW(parse({"table9", "--seed", "1"}), UsageError);
}

TEST(CliRun, Table9) {
  const Result r = call({"table9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("18 distinct labels, 3 sums, 3 products"), std::string::npos);
  EXPECT_NE(r.out.find("283815 17974425"), std::string::npos);
  const Result csv = call({"table9", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "x,y,sum,product");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 10);
}

TEST(CliRun, Euler) {
  const Result r = call({"euler", "--depth", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("191/60"), std::string::npos);
  EXPECT_NE(r.out.find("1175343361/1154457480"), std::string::npos);
  EXPECT_EQ(call({"euler", "--depth", "9"}).code, 1);
}

TEST(CliRun, ExitCodes) {
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"bounds", "kst", "--m", "10", "--k", "1", "--r", "1"}).code, 1);
  EXPECT_EQ(call({"bounds", "kst", "--m", "10", "--k", "2", "--r", "2"}).out, "38\n");
  EXPECT_EQ(call({"bounds", "genus", "--k", "5"}).out, "17\n");
  const Result help = call({"construct", "interval", "--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("CSV columns: x,y,sum,product"), std::string::npos);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliRun, StochasticFailureExitsTwo) {
  int failures = 0, successes = 0;
  for (int seed = 0; seed <= 40; ++seed) {
    const Result r = call({"construct", "reduce", "--complete", "26", "--retries", "1", "--seed",
                           std::to_string(seed)});
    if (r.code == 2) {
      ++failures;
      EXPECT_NE(r.err.find("1 attempts"), std::string::npos);
    } else {
      ASSERT_EQ(r.code, 0) << r.err;
      ++successes;
    }
  }
  EXPECT_GT(failures, 0);
  EXPECT_GT(successes, 0);
}

TEST(CliRun, DefaultSeedIsReported) {
  const Result r = call({"expander", "--n", "256", "--d", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("seed " + std::to_string(kDefaultSeed)), std::string::npos);
  EXPECT_NE(r.out.find("\"seed\": \"" + std::to_string(kDefaultSeed) + "\""), std::string::npos);
}

TEST_F(CliFiles, ReproducibleArtifacts) {
  const std::vector<std::vector<std::string>> commands = {
      {"expander", "--n", "1024", "--d", "56", "--seed", "7"},
      {"construct", "reduce", "--complete", "64", "--seed", "3"},
      {"construct", "real-matching", "--n", "12", "--seed", "3"},
  };
  int k = 0;
  for (auto args : commands) {
    auto a = args, b = args;
    const std::string pa = path("a" + std::to_string(k)), pb = path("b" + std::to_string(k));
    a.insert(a.end(), {"--out", pa});
    b.insert(b.end(), {"--out", pb});
    ASSERT_EQ(call(a).code, 0);
    ASSERT_EQ(call(b).code, 0);
    EXPECT_FALSE(slurp(pa).empty());
    EXPECT_EQ(slurp(pa), slurp(pb));
    ++k;
  }
}

TEST_F(CliFiles, ArtifactsVerifyOnReadBack) {
  const std::vector<std::vector<std::string>> producers = {
      {"expander", "--n", "1024", "--d", "56", "--seed", "7"},
      {"construct", "reduce", "--complete", "64", "--seed", "3"},
      {"construct", "interval", "--N", "1024", "--eps", "0.1"},
      {"construct", "family-matching", "--sums", "3", "--products", "3"},
      {"table9", "--format", "json"},
      {"construct", "triangles", "--m", "5"},
      {"curve", "--triple", "4/9,16/9,1/9", "--scan", "20"},
      {"translates", "curve", "--triple", "4/9,16/9,1/9", "--generator", "7,8", "--count", "5"},
  };
  int k = 0;
  for (auto args : producers) {
    const std::string p = path("artifact" + std::to_string(k++) + ".json");
    args.insert(args.end(), {"--out", p});
    const Result made = call(args);
    ASSERT_EQ(made.code, 0) << made.err;
    const Result check = call({"verify", "--file", p});
    EXPECT_EQ(check.code, 0) << args[0] << ": " << check.err;
    EXPECT_NE(check.out.find("verified"), std::string::npos);
  }
  std::ofstream(path("bad.json")) << "{\"alpha\": \"-63\", \"beta\": \"162\", \"points\": [[\"7\", \"9\"]]}";
  EXPECT_EQ(call({"verify", "--file", path("bad.json")}).code, 1);
  std::ofstream(path("bad_tri.json"))
      << "{\"construction\": \"triangles\", \"m\": \"3\", \"triangles\": \"1\", "
         "\"sum_count\": \"3\", \"product_count\": \"2\", \"odd_cycle_bound\": \"2\", "
         "\"labels\": [\"13\", \"-11\", \"19\"]}";
  EXPECT_EQ(call({"verify", "--file", path("bad_tri.json")}).code, 1);
}

TEST_F(CliFiles, EvalFixture) {
  const Result r = call({"eval", "--graph", SUMPROD_FIXTURES "/table9_graph.txt", "--labels",
                         SUMPROD_FIXTURES "/table9_labels.txt", "--odd-cycle", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"sp\": \"3\""), std::string::npos);
  EXPECT_NE(r.out.find("\"odd_cycle_bound\": \"0\""), std::string::npos);
  const Result missing = call({"eval", "--graph", path("none.txt"), "--labels", path("none.txt")});
  EXPECT_EQ(missing.code, 1);
}

}  // namespace
}  // namespace sumprod::cli
