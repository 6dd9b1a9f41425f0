#include "passeval/scoring.hpp"

#include <cmath>

#include "passeval/control.hpp"

namespace passeval {

double raw_scoring_probability(double x, double y, const Config& cfg) {
  const double dx = x - cfg.goal_x;
  const double dy = y - cfg.goal_y;
  return std::exp(-(dx * dx / cfg.ell_x + dy * dy / cfg.ell_y));
}

double goal_line_sine(double x, double y, const Config& cfg) {
  const double dx = x - cfg.goal_x;
  const double r = std::hypot(dx, y - cfg.goal_y);
  if (r == 0.0) return 1.0;
  return std::abs(dx) / r;
}

double scoring_probability(double x, double y, const Config& cfg) {
  const double angle_factor = goal_line_sine(x, y, cfg) + 1.0;
  const double scale = x < cfg.goal_x ? 0.25 : 0.125;
  return raw_scoring_probability(x, y, cfg) * angle_factor * scale;
}

double location_value(const Snapshot& snap, const Triplet& at, const Config& cfg) {
  return scoring_probability(at.x, at.y, cfg) * rink_control(snap, at, cfg);
}

}  // namespace passeval
