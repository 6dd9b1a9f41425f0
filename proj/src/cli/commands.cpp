#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hash.hpp"
#include "passeval/analysis.hpp"
#include "passeval/config.hpp"
#include "passeval/control.hpp"
#include "passeval/ingestion.hpp"
#include "passeval/io.hpp"
#include "passeval/metrics.hpp"
#include "passeval/scoring.hpp"
#include "passeval/svg.hpp"

namespace passeval::cli {

namespace fs = std::filesystem;

namespace {

// Raised inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Common {
  std::string config_path;
};

Config resolve_config(const Common& common) {
  std::string path = common.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') path = env;
  }
  if (path.empty()) return validate_config(Config{});
  try {
    return load_config(path);
  } catch (const ConfigError& e) {
    throw Exit{kInputError, e.what()};
  }
}

std::string config_source(const Common& common) {
  if (!common.config_path.empty()) return common.config_path;
  if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') return env;
  return "";
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Exit{kInputError, fmt::format("cannot read {}", path)};
  return in;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Exit{kInputError, fmt::format("cannot write {}", path.string())};
  out << content;
}

template <typename Writer>
void write_with(const fs::path& path, Writer&& writer) {
  std::ostringstream buf;
  writer(buf);
  write_file(path, buf.str());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Exit{kInputError, fmt::format("cannot create {}: {}", dir.string(), ec.message())};
}

std::vector<PlayLine> load_plays(const std::string& path) {
  auto in = open_input(path);
  return read_plays(in);
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  Common common;
  std::string tracking;
  std::string events;
  std::string game;
  std::string out;
  std::string report;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(a.common);
  auto tracking_in = open_input(a.tracking);
  auto events_in = open_input(a.events);
  ParseResult<TrackingRecord> tracking;
  ParseResult<EventRecord> events;
  try {
    tracking = parse_tracking(tracking_in, cfg);
    events = parse_events(events_in, cfg);
  } catch (const IngestError& e) {
    throw Exit{kInputError, e.what()};
  }
  for (const auto& w : tracking.warnings) fmt::print(err, "warning: {}\n", w);
  for (const auto& w : events.warnings) fmt::print(err, "warning: {}\n", w);

  const std::string game = a.game.empty() ? fs::path(a.tracking).stem().string() : a.game;
  const IngestResult result = build_pass_plays(tracking.records, events.records, game, cfg);

  fmt::print(out, "{} accepted, {} rejected\n", result.report.accepted, result.report.rejected.size());
  for (const auto& [why, n] : result.report.counts()) fmt::print(out, "  {}: {}\n", to_string(why), n);
  for (const auto& r : result.report.rejected)
    fmt::print(out, "  rejected {} ({}{}{})\n", r.key, to_string(r.reason), r.detail.empty() ? "" : ": ", r.detail);
  fmt::print(out, "skipped rows: {} tracking, {} events; velocity clamps: {}; injected players: {}\n",
             tracking.skipped, events.skipped, result.report.velocity_clamps, result.report.injected_players);

  if (!a.out.empty()) write_with(a.out, [&](std::ostream& o) { write_plays(o, result.plays); });
  if (!a.report.empty()) write_file(a.report, ingest_report_to_json(result.report).dump(2) + "\n");
  return kOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  Common common;
  std::string plays;
  std::string play_id;
  std::vector<double> speeds;
  bool grids = false;
  bool svg = false;
  double resolution = 2.0;
  std::string out;
};

void write_grids(const fs::path& dir, const PassPlay& play, const PlayEvaluation& ev, double resolution,
                 const Config& cfg, bool csv, bool svg) {
  const Snapshot& snap = play.snapshot;
  const ControlGrid control = control_grid(snap, resolution, 0.0, cfg);
  ControlGrid scoring = make_grid(resolution, 0.0, cfg);
  ControlGrid lv = scoring;
  for (std::size_t iy = 0; iy < scoring.ny; ++iy)
    for (std::size_t ix = 0; ix < scoring.nx; ++ix) {
      const Vec2 c = scoring.cell_center(ix, iy);
      const std::size_t k = iy * scoring.nx + ix;
      scoring.values[k] = scoring_probability(c.x, c.y, cfg);
      lv.values[k] = scoring.values[k] * control.values[k];
    }

  if (csv) {
    write_with(dir / "control_grid.csv", [&](std::ostream& o) { write_grid_csv(o, control); });
    write_with(dir / "scoring_grid.csv", [&](std::ostream& o) { write_grid_csv(o, scoring); });
    write_with(dir / "location_value_grid.csv", [&](std::ostream& o) { write_grid_csv(o, lv); });
    write_with(dir / "clv_triplets.csv", [&](std::ostream& o) { write_triplet_csv(o, ev.surface, TripletMetric::clv); });
    write_with(dir / "lpv_triplets.csv", [&](std::ostream& o) { write_triplet_csv(o, ev.surface, TripletMetric::lpv); });
    write_with(dir / "success_map.csv", [&](std::ostream& o) { write_success_map_csv(o, ev.surface); });
    write_with(dir / "pass_surface.csv", [&](std::ostream& o) { write_surface_csv(o, ev.surface); });
  }
  if (svg) {
    // red marks defensive control
    write_file(dir / "control.svg", svg::render_heatmap(control, &snap, {"Rink control (red = defence)", true, 1.0}, cfg));
    write_file(dir / "scoring.svg", svg::render_heatmap(scoring, nullptr, {"Scoring probability", false, 0.5}, cfg));
    write_file(dir / "location_value.svg", svg::render_heatmap(lv, &snap, {"Location value", false, 0.5}, cfg));
    write_file(dir / "success_polar.svg",
               svg::render_polar(ev.surface, snap, svg::SurfaceMetric::success, "Successful pass probability", cfg));
    write_file(dir / "best_case_polar.svg",
               svg::render_polar(ev.surface, snap, svg::SurfaceMetric::best_case, "Best case pass value", cfg));
    write_file(dir / "expected_polar.svg",
               svg::render_polar(ev.surface, snap, svg::SurfaceMetric::expected, "Expected pass value", cfg));
  }
}

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream&) {
  Config cfg = resolve_config(a.common);
  if (!a.speeds.empty()) {
    cfg.candidate_speeds = a.speeds;
    try {
      cfg = validate_config(cfg);
    } catch (const ConfigError& e) {
      throw Exit{kInputError, e.what()};
    }
  }
  const auto lines = load_plays(a.plays);
  std::vector<const PlayLine*> matches;
  for (const auto& l : lines)
    if (l.id == a.play_id) matches.push_back(&l);
  if (matches.empty()) throw Exit{kSelectorError, fmt::format("no play with id \"{}\"", a.play_id)};
  if (matches.size() > 1) throw Exit{kSelectorError, fmt::format("play id \"{}\" is ambiguous", a.play_id)};
  const PlayLine& line = *matches.front();
  if (!line.play) throw Exit{kInputError, fmt::format("play \"{}\" is unreadable: {}", a.play_id, line.error)};

  PlayEvaluation ev;
  try {
    ev = evaluate_play(*line.play, cfg);
  } catch (const PlayRejected& e) {
    throw Exit{kInputError, fmt::format("play \"{}\" rejected: {}", a.play_id, e.what())};
  }

  const fs::path dir(a.out);
  ensure_dir(dir);
  write_file(dir / "evaluation.json", evaluation_to_json(ev).dump(2) + "\n");
  if (a.grids || a.svg) write_grids(dir, *line.play, ev, a.resolution, cfg, a.grids, a.svg);

  fmt::print(out, "{}: best_outcome {:.6f} ({}), actual_value {:.6f}, relative_outcome {:.4f}\n", ev.play_id,
             ev.best_outcome, to_string(ev.best.kind), ev.actual_value, ev.relative_outcome);
  return kOk;
}

// ---------------------------------------------------------------- batch

struct BatchArgs {
  Common common;
  std::string plays;
  int jobs = 1;
  std::string out = "runs";
  std::string run_dir;
  std::uint64_t seed = 0;
  bool surfaces = false;
};

struct BatchResult {
  std::string id;
  std::string status;
  std::string line;  // serialized evaluation line
};

std::string utc_stamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

int cmd_batch(const BatchArgs& a, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(a.common);
  std::string plays_hash;
  try {
    plays_hash = sha256_file(a.plays);
  } catch (const std::runtime_error& e) {
    throw Exit{kInputError, e.what()};
  }
  const auto lines = load_plays(a.plays);
  if (lines.empty()) throw Exit{kEmptyWork, fmt::format("{} contains no plays", a.plays)};

  std::vector<BatchResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      const PlayLine& l = lines[i];
      BatchResult r;
      r.id = l.id;
      ojson doc;
      if (!l.play) {
        r.status = "rejected";
        doc = {{"play_id", l.id}, {"status", "rejected"}, {"reason", "unreadable: " + l.error}};
      } else {
        try {
          doc = evaluation_to_json(evaluate_play(*l.play, cfg), a.surfaces);
          r.status = "ok";
        } catch (const std::exception& e) {
          r.status = "rejected";
          doc = {{"play_id", l.id}, {"status", "rejected"}, {"reason", e.what()}};
        }
      }
      r.line = doc.dump();
      results[i] = std::move(r);
    }
  };
  const int jobs = std::max(1, a.jobs);
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  std::string evaluations;
  std::size_t ok = 0;
  for (const auto& r : results) {
    evaluations += r.line;
    evaluations += '\n';
    if (r.status == "ok") ++ok;
  }

  const std::string config_dump = config_to_json(cfg).dump();
  const std::string run_hash = sha256_hex(plays_hash + config_dump + kVersion).substr(0, 12);
  const fs::path dir = a.run_dir.empty() ? fs::path(a.out) / (utc_stamp() + "-" + run_hash) : fs::path(a.run_dir);
  ensure_dir(dir);
  write_file(dir / "evaluations.jsonl", evaluations);

  ojson manifest;
  manifest["tool"] = "passeval";
  manifest["version"] = kVersion;
  manifest["command"] = "batch";
  manifest["seed"] = a.seed;
  manifest["jobs"] = jobs;
  ojson inputs = ojson::array();
  inputs.push_back({{"role", "plays"}, {"path", a.plays}, {"sha256", plays_hash}});
  if (const std::string src = config_source(a.common); !src.empty())
    inputs.push_back({{"role", "config"}, {"path", src}, {"sha256", sha256_file(src)}});
  manifest["inputs"] = std::move(inputs);
  manifest["config"] = nlohmann::json::parse(config_dump);
  manifest["config_sha256"] = sha256_hex(config_dump);
  manifest["output_dir"] = dir.string();
  ojson statuses = ojson::array();
  for (const auto& r : results) statuses.push_back({{"play_id", r.id}, {"status", r.status}});
  manifest["plays"] = std::move(statuses);
  manifest["outputs"] = {{{"path", "evaluations.jsonl"}, {"sha256", sha256_hex(evaluations)}}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  fmt::print(out, "{}\n", dir.string());
  fmt::print(err, "{} evaluated, {} rejected\n", ok, results.size() - ok);
  return ok > 0 ? kOk : kInputError;
}

// ---------------------------------------------------------------- summarize

struct SummarizeArgs {
  std::string evaluations;
  std::size_t min_passes = 3;
  std::string out;
  std::optional<double> success_threshold;
  std::optional<double> value_threshold;
};

int cmd_summarize(const SummarizeArgs& a, std::ostream& out, std::ostream& err) {
  auto in = open_input(a.evaluations);
  std::vector<EvaluationRecord> records;
  try {
    records = read_evaluations(in);
  } catch (const std::exception& e) {
    throw Exit{kInputError, e.what()};
  }
  const auto decision = decision_summary(records, a.min_passes, {a.success_threshold, a.value_threshold});
  const auto outcome = outcome_summary(records, a.min_passes);
  if (decision.empty()) fmt::print(err, "warning: no player has at least {} evaluated passes\n", a.min_passes);

  const fs::path dir(a.out);
  ensure_dir(dir);
  write_with(dir / "decision_summary.csv", [&](std::ostream& o) { write_summary_csv(o, decision); });
  write_with(dir / "outcome_summary.csv", [&](std::ostream& o) { write_summary_csv(o, outcome); });
  write_file(dir / "summary.svg", svg::render_summary(decision, outcome));
  fmt::print(out, "{} players summarized from {} evaluations\n", decision.size(), records.size());
  return kOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pass evaluation for hockey tracking data", "passeval"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Ingest tracking + event CSVs and report accepted/rejected passes");
  validate->add_option("--tracking", va.tracking, "Tracking CSV")->required();
  validate->add_option("--events", va.events, "Event CSV")->required();
  validate->add_option("--config", va.common.config_path, "Configuration JSON");
  validate->add_option("--game", va.game, "Game id used in play ids (default: tracking file stem)");
  validate->add_option("--out", va.out, "Write accepted plays as JSON lines");
  validate->add_option("--report", va.report, "Write the rejection report as JSON");

  EvaluateArgs ea;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate one play");
  evaluate->add_option("--plays", ea.plays, "Plays file (JSON lines)")->required();
  evaluate->add_option("--play", ea.play_id, "Play id")->required();
  evaluate->add_option("--config", ea.common.config_path, "Configuration JSON");
  evaluate->add_option("--speeds", ea.speeds, "Candidate pass speeds, ft/s")->delimiter(',');
  evaluate->add_flag("--grids", ea.grids, "Write grid and surface CSVs");
  evaluate->add_flag("--svg", ea.svg, "Write SVG rink overlays");
  evaluate->add_option("--resolution", ea.resolution, "Grid cell size, ft")->check(CLI::PositiveNumber);
  evaluate->add_option("--out", ea.out, "Output directory")->required();

  BatchArgs ba;
  auto* batch = app.add_subcommand("batch", "Evaluate every play of a plays file");
  batch->add_option("--plays", ba.plays, "Plays file (JSON lines)")->required();
  batch->add_option("--config", ba.common.config_path, "Configuration JSON");
  batch->add_option("--jobs", ba.jobs, "Worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--out", ba.out, "Parent directory for the run directory");
  batch->add_option("--run-dir", ba.run_dir, "Exact run directory (overrides the timestamped name)");
  batch->add_option("--seed", ba.seed, "Seed recorded in the manifest");
  batch->add_flag("--surfaces", ba.surfaces, "Include per-speed surfaces in each evaluation");

  SummarizeArgs sa;
  auto* summarize = app.add_subcommand("summarize", "Per-player decision and outcome summaries");
  summarize->add_option("--evaluations", sa.evaluations, "Evaluations file from batch")->required();
  summarize->add_option("--min-passes", sa.min_passes, "Minimum evaluated passes per player")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--out", sa.out, "Output directory")->required();
  summarize->add_option("--success-threshold", sa.success_threshold, "Fixed split on avg success probability");
  summarize->add_option("--value-threshold", sa.value_threshold, "Fixed split on avg best case value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(va, out, err);
    if (*evaluate) return cmd_evaluate(ea, out, err);
    if (*batch) return cmd_batch(ba, out, err);
    if (*summarize) return cmd_summarize(sa, out, err);
  } catch (const Exit& e) {
    if (!e.message.empty()) fmt::print(err, "error: {}\n", e.message);
    return e.code;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace passeval::cli
