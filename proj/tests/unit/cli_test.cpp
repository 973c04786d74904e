#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "sflow/cli.hpp"

namespace fs = std::filesystem;
using sflow::cli::run;
using sflow::cli::Status;

namespace {

std::string sample(const std::string& name) { return std::string(SFLOW_SAMPLES_DIR) + "/" + name; }

struct Ran {
  sflow::cli::CommandResult result;
  std::string out;
};

Ran call(const std::vector<std::string>& args) {
  std::ostringstream out;
  auto r = run(args, out);
  return {r, out.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sflow-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckReportsCertificates) {
  auto r = call({"check", sample("bouquet.sgf")});
  EXPECT_EQ(r.result.exit_code(), 0);
  EXPECT_EQ(r.out.rfind("result: ok\n", 0), 0u);
  EXPECT_NE(r.out.find("admissible: yes"), std::string::npos);
  EXPECT_NE(r.out.find("cert short-barbell"), std::string::npos);
  auto u = call({"check", sample("unbalanced_triangle.sgf")});
  EXPECT_NE(u.out.find("admissible: no"), std::string::npos);
  EXPECT_NE(u.out.find("edge 0: none"), std::string::npos);
}

TEST_F(Cli, FlowThenVerify) {
  const auto flow = path("k4.flow"), tr = path("k4.tr");
  auto r = call({"flow8", sample("k4_signed.sgf"), "--flow", flow, "--transcript", tr});
  ASSERT_EQ(r.result.exit_code(), 0) << r.out;
  EXPECT_NE(r.out.find("component 0: route cubic case 2.1"), std::string::npos);
  EXPECT_TRUE(fs::exists(tr));
  auto v = call({"verify", sample("k4_signed.sgf"), flow});
  EXPECT_EQ(v.result.exit_code(), 0) << v.out;
  EXPECT_NE(v.out.find("k: 8"), std::string::npos);
}

TEST_F(Cli, TamperedFlowNamesTheEdge) {
  const auto flow = path("k4.flow");
  ASSERT_EQ(call({"flow8", sample("k4_signed.sgf"), "--flow", flow}).result.exit_code(), 0);
  std::ifstream in(flow);
  std::ostringstream text;
  std::string line;
  while (std::getline(in, line)) text << (line.rfind("f 2 ", 0) == 0 ? "f 2 0" : line) << '\n';
  const auto bad = write("bad.flow", text.str());
  auto v = call({"verify", sample("k4_signed.sgf"), bad});
  EXPECT_EQ(v.result.exit_code(), 3);
  EXPECT_NE(v.out.find("edge: 2"), std::string::npos);
}

TEST_F(Cli, HypothesisFailure) {
  auto r = call({"flow8", sample("petersen_signed.sgf")});
  EXPECT_EQ(r.result.exit_code(), 2);
  EXPECT_EQ(r.out.rfind("result: hypothesis-failed\n", 0), 0u);
  EXPECT_EQ(call({"flow8", sample("unbalanced_triangle.sgf")}).result.exit_code(), 2);
}

TEST_F(Cli, MalformedInput) {
  const auto g = write("bad.sgf", "v 2\ne 0 1 x\n");
  auto r = call({"check", g});
  EXPECT_EQ(r.result.exit_code(), 5);
  EXPECT_NE(r.out.find("line 2"), std::string::npos);
  EXPECT_EQ(call({"check", path("missing.sgf")}).result.exit_code(), 5);
  EXPECT_EQ(call({"frobnicate"}).result.exit_code(), 5);
  EXPECT_EQ(call({"oracle", "flow", sample("bouquet.sgf")}).result.exit_code(), 5);
}

TEST_F(Cli, Oracles) {
  auto f = call({"oracle", "flow", sample("bouquet.sgf"), "--k", "2"});
  EXPECT_EQ(f.result.exit_code(), 0);
  EXPECT_EQ(f.out.rfind("result: found\n", 0), 0u);
  auto n = call({"oracle", "flownum", sample("long_barbell.sgf")});
  EXPECT_NE(n.out.find("flow-number: 3"), std::string::npos);
  auto a = call({"oracle", "flow", sample("unbalanced_triangle.sgf"), "--k", "5"});
  EXPECT_EQ(a.result.exit_code(), 3);
  EXPECT_EQ(a.out.rfind("result: absent\n", 0), 0u);
  auto b = call({"oracle", "flownum", sample("petersen_signed.sgf"), "--node-limit", "3"});
  EXPECT_EQ(b.result.exit_code(), 4);
  auto c = call({"oracle", "color", sample("k4_signed.sgf")});
  EXPECT_EQ(c.result.exit_code(), 0);
  EXPECT_NE(c.out.find("c 0 R"), std::string::npos);
}

TEST_F(Cli, Lemmas) {
  auto e = call({"lemma", "e2f", sample("bouquet.sgf")});
  EXPECT_EQ(e.result.exit_code(), 0);
  auto b = call({"lemma", "barbell", sample("long_barbell.sgf")});
  EXPECT_EQ(b.result.exit_code(), 0);
  EXPECT_NE(b.out.find("f 1 "), std::string::npos);
  auto be = call({"lemma", "barbell", sample("k4_signed.sgf"), "--edge", "0"});
  EXPECT_NE(be.out.find("cert "), std::string::npos);
  const auto k4 = write("k4.sgf", "v 4\ne 0 1 -\ne 0 2 -\ne 0 3 +\ne 1 2 -\ne 1 3 +\ne 2 3 +\n");
  auto hc = call({"lemma", "hc", k4, "--circuit", "0,3,1"});
  EXPECT_EQ(hc.result.exit_code(), 0) << hc.out;
  EXPECT_EQ(call({"lemma", "hc", k4, "--circuit", "0,5"}).result.exit_code(), 5);
  auto lift = call({"lemma", "lift", k4, "--edges", "0,3,1"});
  EXPECT_EQ(lift.result.exit_code(), 3);
}

TEST_F(Cli, GenWritesFiles) {
  auto r = call({"gen", "--family", "cubic3ec", "--n", "8", "--neg", "0.3", "--seed", "7", "--count", "4",
                 "--jobs", "3", "--out-dir", dir_.string()});
  ASSERT_EQ(r.result.exit_code(), 0) << r.out;
  EXPECT_EQ(r.result.payload.size(), 4u);
  EXPECT_TRUE(fs::exists(path("cubic3ec-n8-0003.sgf")));
  std::ifstream in(path("cubic3ec-n8-0000.sgf"));
  auto g = sflow::read_sgf(in);
  sflow::FamilySpec s{sflow::Family::cubic3ec, 8, 0.3, sflow::instance_seed(7, 0)};
  EXPECT_EQ(g, sflow::generate(s));
  EXPECT_EQ(call({"gen", "--family", "cubic3ec", "--n", "7", "--out-dir", dir_.string()}).result.exit_code(), 5);
}

TEST_F(Cli, BinaryExitCodes) {
  auto status = [&](const std::string& args) {
    const int raw = std::system((std::string(SFLOW_CLI) + " " + args + " > " + path("out.txt") + " 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("flow8 " + sample("bouquet.sgf")), 0);
  EXPECT_EQ(status("flow8 " + sample("petersen_signed.sgf")), 2);
  EXPECT_EQ(status("oracle flow " + sample("unbalanced_triangle.sgf") + " --k 4"), 3);
  EXPECT_EQ(status("oracle flownum " + sample("petersen_signed.sgf") + " --node-limit 3"), 4);
  EXPECT_EQ(status("check " + path("nothing.sgf")), 5);
}
