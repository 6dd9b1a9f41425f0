#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "passeval/types.hpp"

namespace passeval {

// How the along-trajectory survival is accumulated when removing the
// conditioning on puck arrival.
enum class SurvivalMode {
  all_players,  // every player's earlier pick-ups block later triplets
  per_player,   // only the player's own earlier pick-ups (literal reading)
};

// Every model constant. Units: feet, seconds, radians.
struct Config {
  // player motion
  double gamma = 1.3;
  double v_max = 35.5;
  double frame_rate = 30.0;
  double t_reaction = 0.189;
  double goalie_radius = 8.0;

  // puck motion
  double kappa = 0.05;
  double mu_decel = 3.217;  // friction coefficient times g
  double dt = 0.05;
  double d_alpha = 0.05;
  double puck_stop_speed = 1.0;
  double t_max = 5.0;

  // rink control
  double beta = 2.5;
  double tau_floor = 0.05;
  bool control_includes_passer = true;

  // pick-up
  double reach = 6.5;
  double coverage_window = 0.1;
  double t_intercept_off = 0.189;
  double t_intercept_def = 0.289;
  bool swap_intercept_constants = false;
  SurvivalMode survival_mode = SurvivalMode::all_players;

  // scoring
  double ell_x = 2000.0;
  double ell_y = 500.0;
  double goal_x = 189.0;
  double goal_y = 42.5;

  // rink
  double rink_length = 200.0;
  double rink_width = 85.0;
  double blue_line_x = 125.0;

  // evaluation
  std::vector<double> candidate_speeds{45.0, 65.0, 85.0};
  double actual_angle_window = 0.10;
  int actual_angle_samples = 9;

  // ingestion
  double max_frame_gap = 1.0;
  double pass_speed_min = 20.0;
  double pass_speed_max = 120.0;
  // "tracking.<column>" / "events.<column>" -> header name in the input file
  std::map<std::string, std::string> column_map;

  Vec2 goal() const { return {goal_x, goal_y}; }
  double intercept_constant(Team side) const;
  bool inside_rink(Vec2 p) const {
    return p.x >= 0.0 && p.x <= rink_length && p.y >= 0.0 && p.y <= rink_width;
  }
  Vec2 clamp_to_rink(Vec2 p) const;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Throws ConfigError naming every violated invariant.
Config validate_config(const Config& cfg);

// Flat JSON object; absent keys keep their defaults, unknown keys are errors.
Config config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const Config& cfg);
Config load_config(const std::string& path);

const char* to_string(SurvivalMode m);

// Pass directions over (-pi, pi]: round(2*pi/d_alpha) evenly spaced angles.
std::vector<double> angle_grid(const Config& cfg);

// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

// Reflects a point through the rink center so play runs toward the right goal.
Vec2 mirror_to_right_half(Vec2 p, const Config& cfg);

}  // namespace passeval
