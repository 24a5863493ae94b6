#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "untangle/cli.hpp"

using namespace untangle;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("untangle_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, LemmaCheckGridPasses) {
  const auto r = run({"lemma-check", "--kmax", "4", "--smax", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
  const auto j = Json::parse(run({"--json", "lemma-check", "--kmax", "3", "--smax", "2"}).out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["rows"][5]["max_length"], 4);
}

TEST_F(CliTest, ConstructBoundUntangleVerify) {
  const auto h9 = path("h9.json"), redraw = path("redraw.json");
  ASSERT_EQ(run({"construct", "--family", "square", "--k", "3", "--out", h9}).code, 0);
  const auto bound = run({"bound", "--instance", h9});
  ASSERT_EQ(bound.code, 0) << bound.err;
  EXPECT_EQ(Json::parse(bound.out)["certified_fixed_upper"], 7);

  const auto u = run({"untangle", "--instance", h9, "--fix-face", "--out", redraw});
  ASSERT_EQ(u.code, 0) << u.err;
  const auto gd = graph_drawing_from_json(read_json_file(redraw));
  EXPECT_EQ(count_crossings(gd.graph, gd.drawing), 0u);

  const auto v = run({"verify", "--instance", h9, "--redraw", redraw});
  EXPECT_EQ(v.code, 0);
  const auto vj = Json::parse(v.out);
  EXPECT_TRUE(vj["pass"].get<bool>());
  EXPECT_GE(vj["fixed_count"].get<int>(), 3);

  // Redrawing the bad drawing itself is not plane and fails verification.
  EXPECT_EQ(run({"verify", "--instance", h9, "--redraw", h9}).code, 1);
}

TEST_F(CliTest, ChainBoundMethods) {
  const auto f = path("chain.json");
  ASSERT_EQ(run({"construct", "--family", "chain", "--k", "3", "--s", "2", "--style", "strip", "--out", f}).code, 0);
  EXPECT_EQ(Json::parse(run({"bound", "--instance", f}).out)["certified_moved_lower"], 4);
  EXPECT_EQ(Json::parse(run({"bound", "--instance", f, "--method", "circle"}).out)["certified_fixed_upper"], 9);
  const auto sq = path("sq.json");
  ASSERT_EQ(run({"construct", "--k", "3", "--out", sq}).code, 0);
  const auto bad = run({"bound", "--instance", sq, "--method", "persistence"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("chain"), std::string::npos);
}

TEST_F(CliTest, UntangleWithoutFixFaceAndStdout) {
  const auto r = run({"construct", "--family", "chain", "--k", "3", "--s", "1"});
  ASSERT_EQ(r.code, 0);
  const auto inst = instance_from_json(Json::parse(r.out));
  EXPECT_EQ(inst.vertex_count(), 12);
  const auto f = path("c.json");
  write_json_file(f, Json::parse(r.out));
  const auto u = run({"untangle", "--instance", f});
  ASSERT_EQ(u.code, 0) << u.err;
  const auto gd = graph_drawing_from_json(Json::parse(u.out));
  EXPECT_TRUE(is_plane_drawing(gd.graph, gd.drawing));
}

TEST_F(CliTest, PlayLogReplaysSession) {
  const auto f = path("h.json"), log = path("s.jsonl");
  ASSERT_EQ(run({"construct", "--k", "3", "--layout", "circle", "--out", f}).code, 0);
  auto state = new_game(InstanceSource{instance_from_json(read_json_file(f))});
  const auto plan = solver_plan(state);
  {
    std::ofstream out(log);
    for (std::size_t i = 0; i < plan.size(); ++i) out << log_line(plan[i], static_cast<long>(i)) << '\n';
  }
  const auto r = run({"--json", "play-log", "--instance", f, "--log", log});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "solved");
  EXPECT_EQ(j, to_json(replay(state, plan)));
  const auto text = run({"play-log", "--instance", f, "--log", log});
  EXPECT_NE(text.out.find("solved"), std::string::npos);
  const auto bad = path("bad.jsonl");
  std::ofstream(bad) << log_line({99, Point(1, 1)}, 0) << '\n';
  EXPECT_EQ(run({"play-log", "--preset", "random(12,7)", "--log", bad}).code, 2);
}

TEST_F(CliTest, UsageErrorsExitNonzero) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"construct"}).code, 2);
  EXPECT_EQ(run({"construct", "--k", "3", "--family", "triangle"}).code, 2);
  EXPECT_EQ(run({"construct", "--k", "3", "--s", "2"}).code, 2);
  EXPECT_EQ(run({"bound", "--instance", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"lemma-check", "--kmax", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
