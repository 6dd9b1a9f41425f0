#include "passeval/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "passeval/motion.hpp"

namespace passeval {

double rink_control_from_times(const std::vector<double>& reach_times, const std::vector<double>& labels,
                               double puck_time, const Config& cfg) {
  if (reach_times.empty()) return 0.5;
  // Weights tau^-beta, rescaled by the smallest tau so large beta cannot overflow.
  double log_min = std::numeric_limits<double>::infinity();
  std::vector<double> log_tau(reach_times.size());
  for (std::size_t i = 0; i < reach_times.size(); ++i) {
    log_tau[i] = std::log(std::max(reach_times[i] - puck_time, cfg.tau_floor));
    log_min = std::min(log_min, log_tau[i]);
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < reach_times.size(); ++i) {
    const double w = cfg.beta == 0.0 ? 1.0 : std::exp(-cfg.beta * (log_tau[i] - log_min));
    num += labels[i] * w;
    den += w;
  }
  return std::clamp(0.5 * (num / den + 1.0), 0.0, 1.0);
}

double rink_control(const Snapshot& snap, const Triplet& at, const Config& cfg) {
  std::vector<double> times;
  std::vector<double> labels;
  times.reserve(snap.players.size());
  labels.reserve(snap.players.size());
  for (const auto& p : snap.players) {
    if (!cfg.control_includes_passer && p.id == snap.passer_id) continue;
    times.push_back(time_to_reach(p, at.position(), cfg).t);
    labels.push_back(team_label(p.team));
  }
  return rink_control_from_times(times, labels, at.t, cfg);
}

ControlGrid make_grid(double resolution, double t, const Config& cfg) {
  if (!(resolution > 0.0)) throw std::invalid_argument("grid resolution must be positive");
  ControlGrid g;
  g.nx = static_cast<std::size_t>(std::max(1L, std::lround(cfg.rink_length / resolution)));
  g.ny = static_cast<std::size_t>(std::max(1L, std::lround(cfg.rink_width / resolution)));
  g.cell_x = cfg.rink_length / static_cast<double>(g.nx);
  g.cell_y = cfg.rink_width / static_cast<double>(g.ny);
  g.t = t;
  g.values.assign(g.nx * g.ny, 0.0);
  return g;
}

ControlGrid control_grid(const Snapshot& snap, double resolution, double t, const Config& cfg) {
  ControlGrid g = make_grid(resolution, t, cfg);
  for (std::size_t iy = 0; iy < g.ny; ++iy)
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const Vec2 c = g.cell_center(ix, iy);
      g.values[iy * g.nx + ix] = rink_control(snap, {c.x, c.y, t}, cfg);
    }
  return g;
}

}  // namespace passeval
