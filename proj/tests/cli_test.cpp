#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(GPA_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gpa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    graph_ = (dir_ / "g.txt").string();
    labels_ = (dir_ / "labels.txt").string();
    ASSERT_EQ(run("generate --nodes 120 --blocks 4 --p-in 0.2 --p-out 0.01 --seed 3 --out " +
                  graph_ + " --labels-out " + labels_)
                  .code,
              0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string graph_;
  std::string labels_;
};

constexpr const char* kSmall = " --dim 8 --walks 2 --length 10 --window 3 --abstract-walks 4 --abstract-length 8";

TEST_F(CliTest, InitWritesHeader) {
  const auto out = path("init.emb");
  ASSERT_EQ(run("init --input " + graph_ + " --seed 1 --out " + out).code, 0);
  std::istringstream in(slurp(out));
  std::size_t rows = 0, dim = 0;
  in >> rows >> dim;
  EXPECT_EQ(dim, 128u);
  EXPECT_GT(rows, 100u);
}

TEST_F(CliTest, PartitionWritesEveryNode) {
  const auto out = path("p.txt");
  ASSERT_EQ(run("partition --input " + graph_ + " --k 4 --out " + out).code, 0);
  EXPECT_EQ(data_lines(slurp(out)).size(), 120u);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("partition --input " + graph_ + " --k 0 --out " + path("p.txt")).code, 2);
  EXPECT_EQ(run("partition --input " + graph_ + " --bogus --out " + path("p.txt")).code, 2);
  EXPECT_EQ(run("embed").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST_F(CliTest, RuntimeErrorsExitOne) {
  EXPECT_EQ(run("partition --input " + path("missing.txt") + " --out " + path("p.txt")).code, 1);
  std::ofstream(path("bad.txt")) << "0 1\nnot an edge\n";
  EXPECT_EQ(run("partition --input " + path("bad.txt") + " --out " + path("p.txt")).code, 1);
  EXPECT_EQ(run("partition --input " + graph_ + " --k 500 --out " + path("p.txt")).code, 1);
}

TEST_F(CliTest, EvalLinkWritesRowPerSeed) {
  const auto out = path("report.csv");
  ASSERT_EQ(run("eval-link --input " + graph_ + " --seeds 3 --seed 5 --out " + out + kSmall).code, 0);
  const auto lines = data_lines(slurp(out));
  ASSERT_EQ(lines.size(), 1u + 3u + 2u);
  EXPECT_EQ(lines[1].rfind("5,", 0), 0u);
  EXPECT_EQ(lines[3].rfind("7,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("mean", 0), 0u);
}

TEST_F(CliTest, EvalClassifyRuns) {
  const auto out = path("report.csv");
  ASSERT_EQ(run("eval-classify --input " + graph_ + " --labels " + labels_ + " --seeds 2 --init random --out " +
                out + kSmall)
                .code,
            0);
  const auto lines = data_lines(slurp(out));
  ASSERT_EQ(lines.size(), 1u + 2u + 2u);
  EXPECT_NE(lines[0].find("micro_f1"), std::string::npos);
}

TEST_F(CliTest, SameSeedSameOutput) {
  const std::string args = "embed --input " + graph_ + " --seed 9" + std::string(" --dim 8 --walks 2 --length 10");
  ASSERT_EQ(run(args + " --out " + path("a.emb")).code, 0);
  ASSERT_EQ(run(args + " --out " + path("b.emb")).code, 0);
  EXPECT_EQ(slurp(path("a.emb")), slurp(path("b.emb")));
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
  const std::string args = "embed --input " + graph_ + " --dim 8 --walks 2 --length 10 --out ";
  ASSERT_EQ(run(args + path("env.emb"), "GPA_SEED=9").code, 0);
  ASSERT_EQ(run(args + path("flag.emb") + " --seed 9").code, 0);
  ASSERT_EQ(run(args + path("other.emb") + " --seed 10").code, 0);
  EXPECT_EQ(slurp(path("env.emb")), slurp(path("flag.emb")));
  EXPECT_NE(slurp(path("env.emb")), slurp(path("other.emb")));
}

TEST_F(CliTest, HyperlearnThenSelect) {
  const auto model = path("model.csv");
  ASSERT_EQ(run("hyperlearn --graphs 4 --min-nodes 50 --max-nodes 80 --grid-walks 2,4 --grid-lengths 5,10 "
                "--dim 8 --out " + model)
                .code,
            0);
  const auto abstract = path("abstract.txt");
  ASSERT_EQ(run("abstract --input " + graph_ + " --out " + abstract).code, 0);
  const Result r = run("select-hp --input " + abstract + " --model " + model + " --grid-walks 2,4 --grid-lengths 5,10");
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

}  // namespace
