#include "passeval/io.hpp"

#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "csv.hpp"

namespace passeval {

using json = nlohmann::json;

namespace {

ojson vec_json(Vec2 v) { return ojson::array({v.x, v.y}); }

Vec2 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [x, y]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

ojson snapshot_to_json(const Snapshot& snap) {
  ojson players = ojson::array();
  for (const auto& p : snap.players) {
    ojson jp;
    jp["id"] = p.id;
    jp["team"] = to_string(p.team);
    jp["position"] = vec_json(p.position);
    jp["velocity"] = vec_json(p.velocity);
    jp["goalie"] = p.is_goalie;
    players.push_back(std::move(jp));
  }
  ojson out;
  out["frame_time"] = snap.frame_time;
  out["puck"] = vec_json(snap.puck);
  out["passer_id"] = snap.passer_id;
  out["players"] = std::move(players);
  return out;
}

Snapshot snapshot_from_json(const json& doc) {
  Snapshot snap;
  snap.frame_time = doc.at("frame_time").get<double>();
  snap.puck = vec_from(doc.at("puck"));
  snap.passer_id = doc.at("passer_id").get<std::string>();
  for (const auto& jp : doc.at("players")) {
    PlayerState p;
    p.id = jp.at("id").get<std::string>();
    p.team = team_from_string(jp.at("team").get<std::string>());
    p.position = vec_from(jp.at("position"));
    p.velocity = vec_from(jp.at("velocity"));
    p.is_goalie = jp.value("goalie", false);
    snap.players.push_back(std::move(p));
  }
  return snap;
}

ojson play_to_json(const PassPlay& play) {
  ojson out;
  out["id"] = play.id;
  out["game"] = play.game;
  out["period"] = play.period;
  out["clock"] = play.clock;
  out["actual_angle"] = play.actual_angle;
  out["actual_speed"] = play.actual_speed;
  out["receiver_id"] = play.receiver_id;
  out["completed"] = play.completed;
  out["snapshot"] = snapshot_to_json(play.snapshot);
  return out;
}

PassPlay play_from_json(const json& doc) {
  PassPlay play;
  play.id = doc.at("id").get<std::string>();
  play.game = doc.at("game").get<std::string>();
  play.period = doc.at("period").get<int>();
  play.clock = doc.at("clock").get<double>();
  play.actual_angle = doc.at("actual_angle").get<double>();
  play.actual_speed = doc.at("actual_speed").get<double>();
  play.receiver_id = doc.at("receiver_id").get<std::string>();
  play.completed = doc.at("completed").get<bool>();
  play.snapshot = snapshot_from_json(doc.at("snapshot"));
  return play;
}

std::vector<PlayLine> read_plays(std::istream& in) {
  std::vector<PlayLine> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (csv::trim(line).empty()) continue;
    PlayLine pl;
    pl.line = n;
    pl.id = fmt::format("line-{}", n);
    try {
      const json doc = json::parse(line);
      if (doc.is_object() && doc.contains("id") && doc["id"].is_string()) pl.id = doc["id"].get<std::string>();
      pl.play = play_from_json(doc);
    } catch (const std::exception& e) {
      pl.error = e.what();
    }
    out.push_back(std::move(pl));
  }
  return out;
}

void write_plays(std::ostream& out, const std::vector<PassPlay>& plays) {
  for (const auto& p : plays) out << play_to_json(p).dump() << '\n';
}

ojson trajectory_to_json(const PassTrajectory& traj) {
  ojson pts = ojson::array();
  for (const auto& t : traj.triplets) pts.push_back(ojson::array({t.x, t.y, t.t}));
  ojson out;
  out["angle"] = traj.angle;
  out["speed"] = traj.speed;
  out["termination"] = to_string(traj.termination);
  out["triplets"] = std::move(pts);
  return out;
}

ojson pickup_field_to_json(const PickupField& f) {
  ojson out;
  out["players"] = f.players;
  ojson teams = ojson::array();
  for (Team t : f.teams) teams.push_back(to_string(t));
  out["teams"] = std::move(teams);
  out["triplet_count"] = f.triplet_count;
  out["distance"] = f.distance;
  out["conditional"] = f.conditional;
  out["unconditional"] = f.unconditional;
  out["off_conditional"] = f.off_conditional;
  out["def_conditional"] = f.def_conditional;
  out["off"] = f.off;
  out["def"] = f.def;
  out["survival"] = f.survival;
  return out;
}

ojson ingest_report_to_json(const IngestReport& report) {
  ojson out;
  out["pass_events"] = report.pass_events;
  out["accepted"] = report.accepted;
  out["rejected"] = report.rejected.size();
  out["velocity_clamps"] = report.velocity_clamps;
  out["injected_players"] = report.injected_players;
  ojson reasons = ojson::object();
  for (const auto& [why, n] : report.counts()) reasons[to_string(why)] = n;
  out["reasons"] = std::move(reasons);
  ojson list = ojson::array();
  for (const auto& r : report.rejected) list.push_back({{"key", r.key}, {"reason", to_string(r.reason)}, {"detail", r.detail}});
  out["rejections"] = std::move(list);
  return out;
}

ojson evaluation_to_json(const PlayEvaluation& ev, bool with_surface) {
  ojson out;
  out["play_id"] = ev.play_id;
  out["status"] = "ok";
  out["passer_id"] = ev.passer_id;
  out["actual_angle"] = ev.actual_angle;
  out["actual_speed"] = ev.actual_speed;
  out["best_outcome"] = ev.best_outcome;
  out["no_pass_value"] = ev.no_pass_value;
  out["actual_value"] = ev.actual_value;
  out["relative_outcome"] = ev.relative_outcome;
  ojson best;
  best["kind"] = to_string(ev.best.kind);
  if (ev.best.kind == OptionKind::no_pass) {
    best["angle"] = nullptr;
    best["speed"] = nullptr;
  } else {
    best["angle"] = ev.best.angle;
    best["speed"] = ev.best.speed;
  }
  best["value"] = ev.best.value;
  out["argmax"] = std::move(best);
  out["actual_best_angle"] = ev.actual_best_angle;
  out["actual_success"] = ev.actual_success;
  out["actual_best_case"] = ev.actual_best_case;
  if (with_surface) {
    ojson surfaces = ojson::array();
    const std::size_t na = ev.surface.angles.size();
    for (std::size_t s = 0; s < ev.surface.speeds.size(); ++s) {
      std::vector<double> success(na), best_case(na), expected(na);
      for (std::size_t a = 0; a < na; ++a) {
        const PassCell& c = ev.surface.at(s, a);
        success[a] = c.success;
        best_case[a] = c.best_case;
        expected[a] = c.expected;
      }
      ojson js;
      js["speed"] = ev.surface.speeds[s];
      js["success"] = success;
      js["best_case"] = best_case;
      js["expected"] = expected;
      surfaces.push_back(std::move(js));
    }
    out["angles"] = ev.surface.angles;
    out["surfaces"] = std::move(surfaces);
  }
  return out;
}

EvaluationRecord evaluation_record_from_json(const json& doc) {
  EvaluationRecord r;
  r.play_id = doc.at("play_id").get<std::string>();
  r.passer_id = doc.at("passer_id").get<std::string>();
  r.actual_success = doc.at("actual_success").get<double>();
  r.actual_best_case = doc.at("actual_best_case").get<double>();
  r.best_outcome = doc.at("best_outcome").get<double>();
  r.relative_outcome = doc.at("relative_outcome").get<double>();
  return r;
}

std::vector<EvaluationRecord> read_evaluations(std::istream& in) {
  std::vector<EvaluationRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (csv::trim(line).empty()) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(fmt::format("evaluations line {}: {}", n, e.what()));
    }
    if (doc.value("status", "") != "ok") continue;
    out.push_back(evaluation_record_from_json(doc));
  }
  return out;
}

void write_grid_csv(std::ostream& out, const ControlGrid& grid) {
  out << "x,y,value\n";
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Vec2 c = grid.cell_center(ix, iy);
      fmt::print(out, "{},{},{}\n", c.x, c.y, grid.at(ix, iy));
    }
}

void write_surface_csv(std::ostream& out, const PassSurface& surface) {
  out << "angle,speed,success,best_case,expected\n";
  for (std::size_t s = 0; s < surface.speeds.size(); ++s)
    for (std::size_t a = 0; a < surface.angles.size(); ++a) {
      const PassCell& c = surface.at(s, a);
      fmt::print(out, "{},{},{},{},{}\n", c.angle, c.speed, c.success, c.best_case, c.expected);
    }
}

void write_success_map_csv(std::ostream& out, const PassSurface& surface) {
  out << "angle,speed,success\n";
  for (std::size_t s = 0; s < surface.speeds.size(); ++s)
    for (std::size_t a = 0; a < surface.angles.size(); ++a) {
      const PassCell& c = surface.at(s, a);
      fmt::print(out, "{},{},{}\n", c.angle, c.speed, c.success);
    }
}

void write_triplet_csv(std::ostream& out, const PassSurface& surface, TripletMetric metric) {
  out << "angle,speed,x,y,t,value\n";
  for (const auto& c : surface.cells)
    for (const auto& v : c.triplets)
      fmt::print(out, "{},{},{},{},{},{}\n", c.angle, c.speed, v.at.x, v.at.y, v.at.t,
                 metric == TripletMetric::clv ? v.clv : v.lpv);
}

void write_summary_csv(std::ostream& out, const std::vector<PlayerSummary>& summaries) {
  out << "player_id,pass_count,avg_success_probability,avg_best_case_value,avg_best_outcome,"
         "avg_relative_outcome,quadrant\n";
  for (const auto& s : summaries)
    fmt::print(out, "{},{},{},{},{},{},{}\n", csv::quote(s.player_id), s.pass_count, s.avg_success_probability,
               s.avg_best_case_value, s.avg_best_outcome, s.avg_relative_outcome, to_string(s.quadrant));
}

}  // namespace passeval
