#include "passeval/motion.hpp"

#include <algorithm>
#include <cmath>

namespace passeval {

namespace {

constexpr double kReachTolerance = 1e-4;
constexpr double kScanStep = 0.02;
constexpr double kGoalieScanStep = 0.05;

// (1 - e^{-g t}) / g, the drift integral of the motion model.
double drift_factor(double rate, double t) { return -std::expm1(-rate * t) / rate; }

// (e^{-x} - 1 + x) / x^2, stable near zero.
double second_order_factor(double x) {
  if (std::abs(x) < 1e-2) return 0.5 - x / 6.0 + x * x / 24.0 - x * x * x / 120.0 + x * x * x * x / 720.0;
  return (std::expm1(-x) + x) / (x * x);
}

ReachableDisk free_disk(const PlayerState& s, double t, const Config& cfg) {
  const double coast = std::min(t, cfg.t_reaction);
  const double steer = std::max(t - cfg.t_reaction, 0.0);
  const double f = drift_factor(cfg.gamma, steer);
  return {s.position + s.velocity * coast + s.velocity * f, cfg.v_max * (steer - f), t};
}

// Largest disk contained in the intersection of `reach` with the crease disk.
ReachableDisk tether(const ReachableDisk& reach, Vec2 net, double crease) {
  const Vec2 offset = net - reach.center;
  const double d = offset.norm();
  if (d == 0.0) return {reach.center, std::min(reach.radius, crease), reach.t};
  const Vec2 u = offset * (1.0 / d);
  const double lo = std::max(-reach.radius, d - crease);
  const double hi = std::min(reach.radius, d + crease);
  if (lo > hi) return {reach.center + u * reach.radius, 0.0, reach.t};
  return {reach.center + u * (0.5 * (lo + hi)), 0.5 * (hi - lo), reach.t};
}

double gap(const PlayerState& s, Vec2 target, double t, const Config& cfg) {
  const ReachableDisk disk = reachable_disk(s, t, cfg);
  return distance(target, disk.center) - disk.radius;
}

double bisect_first_reach(const PlayerState& s, Vec2 target, double lo, double hi, const Config& cfg) {
  // invariant: gap(lo) > 0, gap(hi) <= 0
  while (hi - lo > kReachTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (gap(s, target, mid, cfg) <= 0.0) hi = mid;
    else lo = mid;
  }
  return hi;
}

}  // namespace

Vec2 own_net(Team team, const Config& cfg) {
  return team == Team::defence ? cfg.goal() : mirror_to_right_half(cfg.goal(), cfg);
}

Vec2 player_position(const PlayerState& state, double phi, double t, const Config& cfg) {
  if (t < cfg.t_reaction) return state.position + state.velocity * t;
  const Vec2 start = state.position + state.velocity * cfg.t_reaction;
  const double steer = t - cfg.t_reaction;
  const double f = drift_factor(cfg.gamma, steer);
  return start + unit_vector(phi) * (cfg.v_max * (steer - f)) + state.velocity * f;
}

ReachableDisk reachable_disk(const PlayerState& state, double t, const Config& cfg) {
  const ReachableDisk disk = free_disk(state, t, cfg);
  if (!state.is_goalie) return disk;
  return tether(disk, own_net(state.team, cfg), cfg.goalie_radius);
}

double min_distance(const PlayerState& state, Vec2 target, double t, const Config& cfg) {
  return std::max(0.0, gap(state, target, t, cfg));
}

ReachTime time_to_reach(const PlayerState& state, Vec2 target, const Config& cfg) {
  if (gap(state, target, 0.0, cfg) <= 0.0) return {0.0, false};

  // While coasting the disk is a point sliding along the velocity line.
  const double speed = state.velocity.norm();
  if (speed > 0.0 && cfg.t_reaction > 0.0) {
    const double along = (target - state.position).dot(state.velocity) / (speed * speed);
    if (along > 0.0 && along <= cfg.t_reaction && gap(state, target, along, cfg) <= 1e-12) return {along, false};
  }

  const double start = std::min(cfg.t_reaction, cfg.t_max);
  if (gap(state, target, start, cfg) <= 0.0) return {start, false};

  // Past the settle time the radius grows faster than the center drifts, so
  // the gap is non-increasing and bisection is safe. Before it, scan.
  double settle = cfg.t_max;
  double step = kGoalieScanStep;
  if (!state.is_goalie) {
    settle = std::min(cfg.t_max, start + std::log1p(speed / cfg.v_max) / cfg.gamma);
    step = kScanStep;
  }
  double prev = start;
  while (prev < settle) {
    const double next = std::min(prev + step, settle);
    if (gap(state, target, next, cfg) <= 0.0)
      return {bisect_first_reach(state, target, prev, next, cfg), false};
    prev = next;
  }
  if (gap(state, target, cfg.t_max, cfg) > 0.0) return {cfg.t_max, true};
  return {bisect_first_reach(state, target, prev, cfg.t_max, cfg), false};
}

double puck_stop_time(double speed, const Config& cfg) {
  return std::log1p(cfg.kappa * speed / cfg.mu_decel) / cfg.kappa;
}

double puck_travel_distance(double speed, double t, const Config& cfg) {
  const double tc = std::min(t, puck_stop_time(speed, cfg));
  return speed * drift_factor(cfg.kappa, tc) - cfg.mu_decel * tc * tc * second_order_factor(cfg.kappa * tc);
}

double puck_speed_at(double speed, double t, const Config& cfg) {
  if (t >= puck_stop_time(speed, cfg)) return 0.0;
  return std::max(0.0, speed * std::exp(-cfg.kappa * t) - cfg.mu_decel * drift_factor(cfg.kappa, t));
}

PuckState puck_state(Vec2 p0, Vec2 v0, double t, const Config& cfg) {
  const double speed = v0.norm();
  if (!(speed > 0.0)) throw MotionError("puck at rest has no trajectory");
  const Vec2 dir = v0 * (1.0 / speed);
  return {p0 + dir * puck_travel_distance(speed, t, cfg), dir * puck_speed_at(speed, t, cfg)};
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::board: return "board";
    case Termination::stopped: return "stopped";
    case Termination::time_cap: return "time_cap";
  }
  return "unknown";
}

PassTrajectory pass_trajectory(Vec2 puck, double speed, double angle, const Config& cfg) {
  if (!(speed > 0.0)) throw MotionError("puck at rest has no trajectory");
  PassTrajectory out{angle, speed, {}, Termination::time_cap};
  const Vec2 dir = unit_vector(angle);
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    if (t > cfg.t_max) {
      out.termination = Termination::time_cap;
      break;
    }
    const Vec2 p = puck + dir * puck_travel_distance(speed, t, cfg);
    if (!cfg.inside_rink(p)) {
      out.termination = Termination::board;
      break;
    }
    if (puck_speed_at(speed, t, cfg) < cfg.puck_stop_speed) {
      out.termination = Termination::stopped;
      break;
    }
    out.triplets.push_back({p.x, p.y, t});
  }
  return out;
}

}  // namespace passeval
