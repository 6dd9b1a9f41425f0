#include "passeval/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include <fmt/format.h>

namespace passeval {

namespace {

using json = nlohmann::json;

struct DoubleField {
  const char* name;
  double Config::*member;
};

constexpr DoubleField kDoubleFields[] = {
    {"gamma", &Config::gamma},
    {"v_max", &Config::v_max},
    {"frame_rate", &Config::frame_rate},
    {"t_reaction", &Config::t_reaction},
    {"goalie_radius", &Config::goalie_radius},
    {"kappa", &Config::kappa},
    {"mu_decel", &Config::mu_decel},
    {"dt", &Config::dt},
    {"d_alpha", &Config::d_alpha},
    {"puck_stop_speed", &Config::puck_stop_speed},
    {"t_max", &Config::t_max},
    {"beta", &Config::beta},
    {"tau_floor", &Config::tau_floor},
    {"reach", &Config::reach},
    {"coverage_window", &Config::coverage_window},
    {"t_intercept_off", &Config::t_intercept_off},
    {"t_intercept_def", &Config::t_intercept_def},
    {"ell_x", &Config::ell_x},
    {"ell_y", &Config::ell_y},
    {"goal_x", &Config::goal_x},
    {"goal_y", &Config::goal_y},
    {"rink_length", &Config::rink_length},
    {"rink_width", &Config::rink_width},
    {"blue_line_x", &Config::blue_line_x},
    {"actual_angle_window", &Config::actual_angle_window},
    {"max_frame_gap", &Config::max_frame_gap},
    {"pass_speed_min", &Config::pass_speed_min},
    {"pass_speed_max", &Config::pass_speed_max},
};

struct BoolField {
  const char* name;
  bool Config::*member;
};

constexpr BoolField kBoolFields[] = {
    {"control_includes_passer", &Config::control_includes_passer},
    {"swap_intercept_constants", &Config::swap_intercept_constants},
};

SurvivalMode survival_mode_from_string(const std::string& s) {
  if (s == "all_players") return SurvivalMode::all_players;
  if (s == "per_player") return SurvivalMode::per_player;
  throw ConfigError({fmt::format("survival_mode must be \"all_players\" or \"per_player\", got \"{}\"", s)});
}

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration:";
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

double Config::intercept_constant(Team side) const {
  const bool offence = (side == Team::offence) != swap_intercept_constants;
  return offence ? t_intercept_off : t_intercept_def;
}

Vec2 Config::clamp_to_rink(Vec2 p) const {
  return {std::clamp(p.x, 0.0, rink_length), std::clamp(p.y, 0.0, rink_width)};
}

const char* to_string(SurvivalMode m) {
  return m == SurvivalMode::all_players ? "all_players" : "per_player";
}

Config validate_config(const Config& cfg) {
  std::vector<std::string> problems;
  auto positive = [&](const char* name, double v) {
    if (!(std::isfinite(v) && v > 0.0)) problems.push_back(fmt::format("{} must be positive", name));
  };
  auto non_negative = [&](const char* name, double v) {
    if (!(std::isfinite(v) && v >= 0.0)) problems.push_back(fmt::format("{} must be non-negative", name));
  };

  positive("gamma", cfg.gamma);
  positive("v_max", cfg.v_max);
  positive("frame_rate", cfg.frame_rate);
  non_negative("t_reaction", cfg.t_reaction);
  positive("goalie_radius", cfg.goalie_radius);
  positive("kappa", cfg.kappa);
  positive("mu_decel", cfg.mu_decel);
  positive("dt", cfg.dt);
  positive("d_alpha", cfg.d_alpha);
  positive("puck_stop_speed", cfg.puck_stop_speed);
  positive("t_max", cfg.t_max);
  non_negative("beta", cfg.beta);
  positive("tau_floor", cfg.tau_floor);
  positive("reach", cfg.reach);
  positive("coverage_window", cfg.coverage_window);
  positive("t_intercept_off", cfg.t_intercept_off);
  positive("t_intercept_def", cfg.t_intercept_def);
  positive("ell_x", cfg.ell_x);
  positive("ell_y", cfg.ell_y);
  positive("rink_length", cfg.rink_length);
  positive("rink_width", cfg.rink_width);
  non_negative("actual_angle_window", cfg.actual_angle_window);
  positive("max_frame_gap", cfg.max_frame_gap);
  positive("pass_speed_min", cfg.pass_speed_min);
  positive("pass_speed_max", cfg.pass_speed_max);

  if (cfg.dt > cfg.coverage_window) problems.push_back("dt must not exceed coverage_window");
  if (std::isfinite(cfg.d_alpha) && cfg.d_alpha > 0.0) {
    const double cells = 2.0 * std::numbers::pi / cfg.d_alpha;
    if (std::round(cells) < 4.0) problems.push_back("d_alpha must split the circle into at least 4 angles");
  }
  if (!(cfg.goal_x > 0.0 && cfg.goal_x < cfg.rink_length && cfg.goal_y > 0.0 && cfg.goal_y < cfg.rink_width))
    problems.push_back("goal_x/goal_y must lie inside the rink");
  if (!(cfg.blue_line_x > 0.0 && cfg.blue_line_x < cfg.rink_length))
    problems.push_back("blue_line_x must lie inside the rink");
  if (cfg.candidate_speeds.empty()) problems.push_back("candidate_speeds must not be empty");
  for (double v : cfg.candidate_speeds)
    if (!(std::isfinite(v) && v > 0.0)) problems.push_back("candidate_speeds must all be positive");
  if (cfg.actual_angle_samples < 1) problems.push_back("actual_angle_samples must be at least 1");
  if (cfg.pass_speed_min >= cfg.pass_speed_max) problems.push_back("pass_speed_min must be below pass_speed_max");

  if (!problems.empty()) throw ConfigError(std::move(problems));
  return cfg;
}

Config config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError({"configuration must be a JSON object"});
  Config cfg;
  std::vector<std::string> problems;
  std::set<std::string> known;

  for (const auto& f : kDoubleFields) {
    known.insert(f.name);
    if (auto it = doc.find(f.name); it != doc.end()) {
      if (it->is_number()) cfg.*f.member = it->get<double>();
      else problems.push_back(fmt::format("{} must be a number", f.name));
    }
  }
  for (const auto& f : kBoolFields) {
    known.insert(f.name);
    if (auto it = doc.find(f.name); it != doc.end()) {
      if (it->is_boolean()) cfg.*f.member = it->get<bool>();
      else problems.push_back(fmt::format("{} must be a boolean", f.name));
    }
  }

  known.insert("survival_mode");
  if (auto it = doc.find("survival_mode"); it != doc.end()) {
    if (!it->is_string()) problems.push_back("survival_mode must be a string");
    else {
      try {
        cfg.survival_mode = survival_mode_from_string(it->get<std::string>());
      } catch (const ConfigError& e) {
        problems.insert(problems.end(), e.problems().begin(), e.problems().end());
      }
    }
  }

  known.insert("candidate_speeds");
  if (auto it = doc.find("candidate_speeds"); it != doc.end()) {
    if (!it->is_array()) problems.push_back("candidate_speeds must be an array of numbers");
    else {
      cfg.candidate_speeds.clear();
      for (const auto& v : *it) {
        if (v.is_number()) cfg.candidate_speeds.push_back(v.get<double>());
        else problems.push_back("candidate_speeds must be an array of numbers");
      }
    }
  }

  known.insert("actual_angle_samples");
  if (auto it = doc.find("actual_angle_samples"); it != doc.end()) {
    if (it->is_number_integer()) cfg.actual_angle_samples = it->get<int>();
    else problems.push_back("actual_angle_samples must be an integer");
  }

  known.insert("column_map");
  if (auto it = doc.find("column_map"); it != doc.end()) {
    if (!it->is_object()) problems.push_back("column_map must be an object of strings");
    else {
      for (const auto& [k, v] : it->items()) {
        if (v.is_string()) cfg.column_map[k] = v.get<std::string>();
        else problems.push_back(fmt::format("column_map.{} must be a string", k));
      }
    }
  }

  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) problems.push_back(fmt::format("unknown configuration key \"{}\"", key));

  if (!problems.empty()) throw ConfigError(std::move(problems));
  return validate_config(cfg);
}

json config_to_json(const Config& cfg) {
  json out;
  for (const auto& f : kDoubleFields) out[f.name] = cfg.*f.member;
  for (const auto& f : kBoolFields) out[f.name] = cfg.*f.member;
  out["survival_mode"] = to_string(cfg.survival_mode);
  out["candidate_speeds"] = cfg.candidate_speeds;
  out["actual_angle_samples"] = cfg.actual_angle_samples;
  out["column_map"] = cfg.column_map;
  return out;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({fmt::format("cannot open configuration file {}", path)});
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({fmt::format("{}: {}", path, e.what())});
  }
  return config_from_json(doc);
}

std::vector<double> angle_grid(const Config& cfg) {
  const auto n = static_cast<std::size_t>(std::lround(2.0 * std::numbers::pi / cfg.d_alpha));
  std::vector<double> angles(n);
  const double count = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    angles[k] = std::numbers::pi * (2.0 * static_cast<double>(k + 1) - count) / count;
  return angles;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

Vec2 mirror_to_right_half(Vec2 p, const Config& cfg) {
  return {cfg.rink_length - p.x, cfg.rink_width - p.y};
}

}  // namespace passeval
