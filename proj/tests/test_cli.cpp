#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unistd.h>

#include "mfio/cli.hpp"
#include "support.hpp"

using namespace mfio;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mfio_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    std::ofstream(dir_ / "overlay.txt") << fixture::kOverlayExample;
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

nlohmann::json without_timings(nlohmann::json doc) {
  doc.erase("timings");
  return doc;
}

}  // namespace

TEST_F(CliTest, MineOverlayExample) {
  const auto r = run({"mine", "--input", path("overlay.txt"), "--n", "3", "--quiet"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["itemset"], nlohmann::json::parse(R"(["1","2","3"])"));
  EXPECT_EQ(doc["t_best_exact"], "219/512");
  EXPECT_EQ(doc["solver"], "exact");
  EXPECT_EQ(doc["trace"].size(), 10u);
  EXPECT_TRUE(doc["timings"].contains("count_ms"));
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, MineQuboIsDeterministic) {
  const std::vector<std::string> args{"mine", "--input", path("overlay.txt"), "--n", "3", "--solver", "qubo",
                                      "--seed", "5", "--restarts", "4", "--sweeps", "100", "--quiet"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(without_timings(nlohmann::json::parse(a.out)), without_timings(nlohmann::json::parse(b.out)));
  EXPECT_EQ(nlohmann::json::parse(a.out)["itemset"], nlohmann::json::parse(R"(["1","2","3"])"));
}

TEST_F(CliTest, MineDumpsMatrixAndQubo) {
  const auto r = run({"mine", "--input", path("overlay.txt"), "--n", "3", "--dump-matrix", path("m.csv"),
                      "--dump-qubo", path("q.txt"), "--quiet"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream m(path("m.csv")), q(path("q.txt"));
  std::string header;
  std::getline(m, header);
  EXPECT_EQ(header, "i,j,count,rel");
  std::string first;
  std::getline(q, first);
  EXPECT_EQ(first, "0 0 -1");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"mine", "--input", path("overlay.txt"), "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"mine", "--input", path("overlay.txt"), "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"mine", "--input", path("missing.txt"), "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"mine", "--input", path("overlay.txt"), "--n", "2", "--solver", "greedy"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--preset", "config3", "--n", "16", "--i", "200", "--out", path("g.txt")}).code,
            kExitUsage);
  EXPECT_EQ(run({"bench", "--preset", "config2", "--grid", "25x4", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--preset", "config2", "--grid", "25,x4"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, MineWithoutCliqueExitsTwo) {
  std::ofstream(path("apart.txt")) << "a\nb\nc\n";
  const auto r = run({"mine", "--input", path("apart.txt"), "--n", "2", "--r", "5"});
  EXPECT_EQ(r.code, kExitNoClique);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["error"], "NoCliqueFound");
  EXPECT_EQ(doc["trace"].size(), 5u);
}

TEST_F(CliTest, GenWritesFileAndSidecar) {
  const auto r = run({"gen", "--preset", "config1", "--i", "25", "--n", "4", "--seed", "2", "--out", path("g.txt"),
                      "--json", "--quiet"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  std::ifstream side(path("g.txt.planted.json"));
  const auto planted = nlohmann::json::parse(side)["planted"];
  ASSERT_EQ(planted.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(std::to_string(planted[i].get<int>()), doc["planted"][i]);

  const auto again = run({"gen", "--preset", "config1", "--i", "25", "--n", "4", "--seed", "2", "--out",
                          path("h.txt"), "--quiet"});
  ASSERT_EQ(again.code, kExitOk);
  std::ifstream a(path("g.txt")), b(path("h.txt"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());

  const auto mined = run({"mine", "--input", path("g.txt"), "--n", "4", "--quiet"});
  ASSERT_EQ(mined.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(mined.out)["itemset"].size(), 4u);
}

TEST_F(CliTest, BenchWritesReports) {
  const auto r = run({"bench", "--preset", "config2", "--grid", "25x4", "--trials", "2", "--report",
                      path("rep"), "--quiet"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("config2"), std::string::npos);
  std::ifstream csv(path("rep.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "config,i,n,trial,seed,success,oracle_verified,t_best,count_ms,optimize_ms");
  EXPECT_TRUE(fs::exists(path("rep.md")));
}
