#include "passeval/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "passeval/control.hpp"
#include "passeval/passing.hpp"
#include "passeval/scoring.hpp"

namespace passeval {

double conditional_location_value(const Snapshot& snap, const Triplet& at, double p_off_given_arrival,
                                  const Config& cfg) {
  return location_value(snap, at, cfg) * p_off_given_arrival;
}

double location_pass_value(const Snapshot& snap, const Triplet& at, double p_off, const Config& cfg) {
  return location_value(snap, at, cfg) * p_off;
}

SliceValue best_case_pass_value(std::span<const TripletValue> slice) {
  if (slice.empty()) return {0.0, true};
  double best = slice.front().clv;
  for (const auto& v : slice) best = std::max(best, v.clv);
  return {best, false};
}

SliceValue expected_pass_value(std::span<const TripletValue> slice) {
  if (slice.empty()) return {0.0, true};
  // Neumaier summation
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& v : slice) {
    const double t = sum + v.lpv;
    if (std::abs(sum) >= std::abs(v.lpv)) carry += (sum - t) + v.lpv;
    else carry += (v.lpv - t) + sum;
    sum = t;
  }
  return {sum + carry, false};
}

PassCell evaluate_pass(const Snapshot& snap, double speed, double angle, const Config& cfg) {
  const PassTrajectory traj = pass_trajectory(snap.puck, speed, angle, cfg);
  const PickupField field = trajectory_pickup(snap, traj, cfg);

  PassCell cell;
  cell.angle = angle;
  cell.speed = speed;
  cell.termination = traj.termination;
  cell.triplets.reserve(traj.triplets.size());
  for (std::size_t j = 0; j < traj.triplets.size(); ++j) {
    TripletValue v;
    v.at = traj.triplets[j];
    v.rink_control = rink_control(snap, v.at, cfg);
    v.location_value = scoring_probability(v.at.x, v.at.y, cfg) * v.rink_control;
    v.off_conditional = field.off_conditional[j];
    v.off = field.off[j];
    v.clv = v.location_value * v.off_conditional;
    v.lpv = v.location_value * v.off;
    cell.triplets.push_back(v);
  }
  cell.success = success_probability(field);
  const SliceValue best = best_case_pass_value(cell.triplets);
  cell.best_case = best.value;
  cell.expected = expected_pass_value(cell.triplets).value;
  cell.empty = best.empty;
  return cell;
}

PassSurface pass_surface(const Snapshot& snap, std::span<const double> speeds, const Config& cfg) {
  PassSurface s;
  s.angles = angle_grid(cfg);
  s.speeds.assign(speeds.begin(), speeds.end());
  s.cells.reserve(s.angles.size() * s.speeds.size());
  for (double speed : s.speeds)
    for (double angle : s.angles) s.cells.push_back(evaluate_pass(snap, speed, angle, cfg));
  return s;
}

const char* to_string(OptionKind k) {
  switch (k) {
    case OptionKind::surface: return "surface";
    case OptionKind::actual_window: return "actual_window";
    case OptionKind::no_pass: return "no_pass";
  }
  return "unknown";
}

std::vector<double> actual_window_angles(double actual_angle, const Config& cfg) {
  const int n = cfg.actual_angle_samples;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(wrap_angle(actual_angle));
    return out;
  }
  const double w = cfg.actual_angle_window;
  for (int k = 0; k < n; ++k) {
    // the middle sample of an odd count is the recorded angle itself
    const double offset = w * (2.0 * k - (n - 1)) / (n - 1);
    out.push_back(offset == 0.0 ? wrap_angle(actual_angle) : wrap_angle(actual_angle + offset));
  }
  return out;
}

PlayEvaluation evaluate_snapshot(const Snapshot& snap, double actual_angle, double actual_speed, const Config& cfg) {
  PlayEvaluation ev;
  ev.passer_id = snap.passer_id;
  ev.actual_angle = actual_angle;
  ev.actual_speed = actual_speed;

  std::vector<double> speeds = cfg.candidate_speeds;
  speeds.push_back(actual_speed);
  ev.surface = pass_surface(snap, speeds, cfg);

  const Vec2 here = snap.passer().position;
  ev.no_pass_value = location_value(snap, {here.x, here.y, 0.0}, cfg);
  ev.best = {OptionKind::no_pass, 0.0, 0.0, ev.no_pass_value};

  for (const auto& cell : ev.surface.cells) {
    if (cell.expected > ev.best.value) ev.best = {OptionKind::surface, cell.angle, cell.speed, cell.expected};
  }

  bool first = true;
  for (double angle : actual_window_angles(actual_angle, cfg)) {
    const PassCell cell = evaluate_pass(snap, actual_speed, angle, cfg);
    if (first || cell.expected > ev.actual_value) {
      ev.actual_value = cell.expected;
      ev.actual_best_angle = angle;
      ev.actual_success = cell.success;
      ev.actual_best_case = cell.best_case;
      first = false;
    }
  }
  if (ev.actual_value > ev.best.value)
    ev.best = {OptionKind::actual_window, ev.actual_best_angle, actual_speed, ev.actual_value};

  ev.best_outcome = ev.best.value;
  ev.relative_outcome = ev.best_outcome > 0.0 ? ev.actual_value / ev.best_outcome : 0.0;
  return ev;
}

PlayEvaluation evaluate_play(const PassPlay& play, const Config& cfg) {
  if (auto problem = check_snapshot(play.snapshot, cfg)) throw PlayRejected(*problem);
  if (!(play.actual_speed > 0.0) || !std::isfinite(play.actual_speed))
    throw PlayRejected(fmt::format("actual speed {} is not positive", play.actual_speed));
  if (!std::isfinite(play.actual_angle)) throw PlayRejected("actual angle is not finite");
  PlayEvaluation ev = evaluate_snapshot(play.snapshot, play.actual_angle, play.actual_speed, cfg);
  ev.play_id = play.id;
  return ev;
}

}  // namespace passeval
