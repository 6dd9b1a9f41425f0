#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "passeval/io.hpp"
#include "golden.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace passeval;

namespace {

const fs::path kData = fs::path(PASSEVAL_SOURCE_DIR) / "data" / "fixtures";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "passeval");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string first_play_id() {
  std::ifstream in(kData / "plays.jsonl");
  std::string line;
  std::getline(in, line);
  return nlohmann::json::parse(line)["id"].get<std::string>();
}

}  // namespace

TEST_CASE("play json round trip") {
  std::ifstream in(kData / "plays.jsonl");
  const auto plays = read_plays(in);
  REQUIRE(plays.size() == 12);
  for (const auto& l : plays) {
    REQUIRE(l.play.has_value());
    const PassPlay back = play_from_json(nlohmann::json::parse(play_to_json(*l.play).dump()));
    CHECK(play_to_json(back).dump() == play_to_json(*l.play).dump());
    CHECK(back.actual_speed == l.play->actual_speed);
  }
  std::istringstream bad("{\"id\": \"x\"}\nnot json\n\n");
  const auto broken = read_plays(bad);
  REQUIRE(broken.size() == 2);
  CHECK(broken[0].id == "x");
  CHECK_FALSE(broken[0].play.has_value());
  CHECK(broken[1].id == "line-2");
}

TEST_CASE("validate: clean fixture") {
  const auto dir = testing::scratch_dir("validate");
  const auto r = run({"validate", "--tracking", (kData / "tracking.csv").string(), "--events",
                      (kData / "events.csv").string(), "--game", "synthetic", "--out", (dir / "plays.jsonl").string(),
                      "--report", (dir / "report.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("12 accepted, 0 rejected") != std::string::npos);
  // the bundled plays file is exactly what ingestion produces
  CHECK(testing::read_file(dir / "plays.jsonl") == testing::read_file(kData / "plays.jsonl"));
  const auto report = nlohmann::json::parse(testing::read_file(dir / "report.json"));
  CHECK(report["accepted"] == 12);
}

TEST_CASE("validate: rejections are listed, bad input exits 2") {
  const auto dir = testing::scratch_dir("validate-bad");
  {
    std::ofstream t(dir / "tracking.csv");
    t << "period,frame_id,clock,team,jersey,x,y\n1,1,9.99,Away,2,160,40\n1,1,9.99,Away,3,170,40\n";
    std::ofstream e(dir / "events.csv");
    e << "period,clock,team,player,event,x,y,detail_1,player_2,x_2,y_2,clock_2\n"
      << "1,10,Home,7,Play,150,30,Direct,8,170,50,10.5\n";
    std::ofstream m(dir / "missing.csv");
    m << "period,frame_id,clock,team,jersey,x\n";
  }
  const auto r = run({"validate", "--tracking", (dir / "tracking.csv").string(), "--events", (dir / "events.csv").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 accepted, 1 rejected") != std::string::npos);
  CHECK(r.out.find("one team only") != std::string::npos);

  CHECK(run({"validate", "--tracking", (dir / "missing.csv").string(), "--events", (dir / "events.csv").string()}).code == 2);
  CHECK(run({"validate", "--tracking", (dir / "nope.csv").string(), "--events", (dir / "events.csv").string()}).code == 2);
  CHECK(run({"validate", "--tracking", (dir / "tracking.csv").string()}).code == 2);
}

TEST_CASE("evaluate: outputs and selector errors") {
  const auto dir = testing::scratch_dir("evaluate");
  const std::string plays = (kData / "plays.jsonl").string();
  const std::string id = first_play_id();
  const auto r = run({"evaluate", "--plays", plays, "--play", id, "--grids", "--resolution", "5", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto ev = nlohmann::json::parse(testing::read_file(dir / "evaluation.json"));
  CHECK(ev["play_id"] == id);
  CHECK(ev["best_outcome"].get<double>() >= ev["actual_value"].get<double>());
  CHECK(ev["surfaces"].size() == 4);
  CHECK(ev["angles"].size() == 126);
  int csvs = 0;
  for (const auto& e : fs::directory_iterator(dir)) csvs += e.path().extension() == ".csv" ? 1 : 0;
  CHECK(csvs == 7);
  for (const char* name : {"control_grid.csv", "scoring_grid.csv", "location_value_grid.csv", "clv_triplets.csv",
                           "lpv_triplets.csv", "success_map.csv", "pass_surface.csv"})
    CHECK(fs::exists(dir / name));
  CHECK(lines_of(testing::read_file(dir / "control_grid.csv")).size() == 1 + 40 * 17);
  CHECK(lines_of(testing::read_file(dir / "pass_surface.csv")).front() == "angle,speed,success,best_case,expected");

  CHECK(run({"evaluate", "--plays", plays, "--play", "no-such-play", "--out", dir.string()}).code == 3);

  const auto dup = testing::scratch_dir("evaluate-dup");
  {
    std::ofstream o(dup / "plays.jsonl");
    const std::string line = lines_of(testing::read_file(plays)).front();
    o << line << "\n" << line << "\n";
  }
  CHECK(run({"evaluate", "--plays", (dup / "plays.jsonl").string(), "--play", id, "--out", dup.string()}).code == 3);
}

TEST_CASE("evaluate: custom speeds and svg overlays") {
  const auto dir = testing::scratch_dir("evaluate-svg");
  const auto r = run({"evaluate", "--plays", (kData / "plays.jsonl").string(), "--play", first_play_id(), "--speeds",
                      "50,70", "--svg", "--resolution", "4", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto ev = nlohmann::json::parse(testing::read_file(dir / "evaluation.json"));
  CHECK(ev["surfaces"].size() == 3);
  CHECK(ev["surfaces"][0]["speed"] == 50.0);
  for (const char* name : {"control.svg", "scoring.svg", "location_value.svg", "success_polar.svg",
                           "best_case_polar.svg", "expected_polar.svg"}) {
    const std::string svg = testing::read_file(dir / name);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("href=\"http") == std::string::npos);
  }
}

TEST_CASE("batch: determinism, manifest, partial failures, empty input") {
  const auto dir = testing::scratch_dir("batch");
  const std::string plays = (kData / "plays.jsonl").string();
  const auto one = run({"batch", "--plays", plays, "--jobs", "1", "--run-dir", (dir / "j1").string()});
  const auto eight = run({"batch", "--plays", plays, "--jobs", "8", "--run-dir", (dir / "j8").string()});
  REQUIRE(one.code == 0);
  REQUIRE(eight.code == 0);
  const std::string a = testing::read_file(dir / "j1" / "evaluations.jsonl");
  CHECK(a == testing::read_file(dir / "j8" / "evaluations.jsonl"));
  CHECK(lines_of(a).size() == 12);

  const auto manifest = nlohmann::json::parse(testing::read_file(dir / "j1" / "manifest.json"));
  CHECK(manifest["version"] == cli::kVersion);
  CHECK(manifest["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(manifest["plays"].size() == 12);
  CHECK(manifest["config"]["gamma"] == 1.3);

  // timestamped run directory under --out when no --run-dir is given
  const auto auto_dir = run({"batch", "--plays", plays, "--out", (dir / "runs").string()});
  REQUIRE(auto_dir.code == 0);
  int runs = 0;
  for (const auto& e : fs::directory_iterator(dir / "runs")) runs += e.is_directory() ? 1 : 0;
  CHECK(runs == 1);

  // one corrupt line
  auto text = lines_of(testing::read_file(plays));
  text[5] = text[5].substr(0, text[5].size() / 2);
  {
    std::ofstream o(dir / "corrupt.jsonl");
    for (const auto& l : text) o << l << "\n";
  }
  const auto c = run({"batch", "--plays", (dir / "corrupt.jsonl").string(), "--run-dir", (dir / "c").string()});
  CHECK(c.code == 0);
  int ok = 0, rejected = 0;
  for (const auto& l : lines_of(testing::read_file(dir / "c" / "evaluations.jsonl"))) {
    const auto j = nlohmann::json::parse(l);
    (j["status"] == "ok" ? ok : rejected) += 1;
  }
  CHECK(ok == 11);
  CHECK(rejected == 1);

  { std::ofstream o(dir / "empty.jsonl"); }
  CHECK(run({"batch", "--plays", (dir / "empty.jsonl").string(), "--run-dir", (dir / "e").string()}).code == 4);
}

TEST_CASE("summarize: rows, thresholds, reruns") {
  const auto dir = testing::scratch_dir("summarize");
  REQUIRE(run({"batch", "--plays", (kData / "plays.jsonl").string(), "--run-dir", (dir / "run").string()}).code == 0);
  const std::string evals = (dir / "run" / "evaluations.jsonl").string();

  const auto r = run({"summarize", "--evaluations", evals, "--out", (dir / "s1").string()});
  REQUIRE(r.code == 0);
  const auto rows = lines_of(testing::read_file(dir / "s1" / "decision_summary.csv"));
  CHECK(rows.size() == 3);  // header + two passers with three passes each
  CHECK(lines_of(testing::read_file(dir / "s1" / "outcome_summary.csv")).size() == 3);
  CHECK(fs::exists(dir / "s1" / "summary.svg"));

  REQUIRE(run({"summarize", "--evaluations", evals, "--out", (dir / "s2").string()}).code == 0);
  for (const char* f : {"decision_summary.csv", "outcome_summary.csv", "summary.svg"})
    CHECK(testing::read_file(dir / "s1" / f) == testing::read_file(dir / "s2" / f));

  const auto none = run({"summarize", "--evaluations", evals, "--min-passes", "10", "--out", (dir / "s3").string()});
  CHECK(none.code == 0);
  CHECK(none.err.find("warning") != std::string::npos);
  CHECK(lines_of(testing::read_file(dir / "s3" / "decision_summary.csv")).size() == 1);
}

TEST_CASE("config comes from the flag, then the environment") {
  const auto dir = testing::scratch_dir("config");
  { std::ofstream(dir / "bad.json") << R"({"gamma": 0})"; }
  { std::ofstream(dir / "good.json") << R"({"candidate_speeds": [60]})"; }
  const std::string plays = (kData / "plays.jsonl").string();

  CHECK(run({"batch", "--plays", plays, "--config", (dir / "bad.json").string(), "--run-dir", (dir / "a").string()})
            .code == 2);

  ::setenv(cli::kConfigEnv, (dir / "bad.json").string().c_str(), 1);
  CHECK(run({"batch", "--plays", plays, "--run-dir", (dir / "b").string()}).code == 2);
  // the flag wins over the environment
  const auto flagged = run({"evaluate", "--plays", plays, "--play", first_play_id(), "--config",
                            (dir / "good.json").string(), "--out", (dir / "c").string()});
  ::unsetenv(cli::kConfigEnv);
  REQUIRE(flagged.code == 0);
  const auto ev = nlohmann::json::parse(testing::read_file(dir / "c" / "evaluation.json"));
  CHECK(ev["surfaces"].size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(cli::kVersion) != std::string::npos);
}

TEST_CASE("svg renders match the golden files and are stable") {
  const auto first = testing::golden_renders();
  const auto second = testing::golden_renders();
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].svg == second[i].svg);
    CHECK(testing::check_golden(first[i]) == "");
  }
}
