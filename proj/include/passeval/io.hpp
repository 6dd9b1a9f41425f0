#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "passeval/analysis.hpp"
#include "passeval/control.hpp"
#include "passeval/ingestion.hpp"
#include "passeval/metrics.hpp"
#include "passeval/passing.hpp"
#include "passeval/types.hpp"

namespace passeval {

using ojson = nlohmann::ordered_json;

ojson snapshot_to_json(const Snapshot& snap);
Snapshot snapshot_from_json(const nlohmann::json& doc);

ojson play_to_json(const PassPlay& play);
PassPlay play_from_json(const nlohmann::json& doc);

// One line of a plays file: either a parsed play or the reason it could not be read.
struct PlayLine {
  std::size_t line = 0;
  std::string id;
  std::optional<PassPlay> play;
  std::string error;
};

std::vector<PlayLine> read_plays(std::istream& in);
void write_plays(std::ostream& out, const std::vector<PassPlay>& plays);

ojson trajectory_to_json(const PassTrajectory& traj);
ojson pickup_field_to_json(const PickupField& field);
ojson ingest_report_to_json(const IngestReport& report);

ojson evaluation_to_json(const PlayEvaluation& ev, bool with_surface = true);
EvaluationRecord evaluation_record_from_json(const nlohmann::json& doc);

// Reads an evaluations file, keeping only entries with status "ok".
std::vector<EvaluationRecord> read_evaluations(std::istream& in);

// CSV exports. Numbers use the shortest representation that round-trips.
void write_grid_csv(std::ostream& out, const ControlGrid& grid);
void write_surface_csv(std::ostream& out, const PassSurface& surface);
void write_success_map_csv(std::ostream& out, const PassSurface& surface);

enum class TripletMetric { clv, lpv };
void write_triplet_csv(std::ostream& out, const PassSurface& surface, TripletMetric metric);

void write_summary_csv(std::ostream& out, const std::vector<PlayerSummary>& summaries);

}  // namespace passeval
