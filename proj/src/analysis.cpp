#include "passeval/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace passeval {

namespace {

struct Totals {
  std::size_t count = 0;
  // per-play values kept sorted before summing so results do not depend on input order
  std::vector<double> success, best_case, best_outcome, relative;
};

double ordered_mean(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

std::vector<PlayerSummary> aggregate(std::span<const EvaluationRecord> evaluations, std::size_t min_passes) {
  if (min_passes < 1) throw std::invalid_argument("min_passes must be at least 1");
  std::map<PlayerId, Totals> by_player;
  for (const auto& e : evaluations) {
    Totals& t = by_player[e.passer_id];
    ++t.count;
    t.success.push_back(e.actual_success);
    t.best_case.push_back(e.actual_best_case);
    t.best_outcome.push_back(e.best_outcome);
    t.relative.push_back(e.relative_outcome);
  }
  std::vector<PlayerSummary> out;
  for (auto& [id, t] : by_player) {
    if (t.count < min_passes) continue;
    PlayerSummary s;
    s.player_id = id;
    s.pass_count = t.count;
    s.avg_success_probability = ordered_mean(std::move(t.success));
    s.avg_best_case_value = ordered_mean(std::move(t.best_case));
    s.avg_best_outcome = ordered_mean(std::move(t.best_outcome));
    s.avg_relative_outcome = ordered_mean(std::move(t.relative));
    out.push_back(std::move(s));
  }
  return out;
}

template <typename XAxis, typename YAxis>
void assign_quadrants(std::vector<PlayerSummary>& cohort, QuadrantThresholds thresholds, XAxis x_of, YAxis y_of) {
  if (cohort.empty()) return;
  std::vector<double> xs, ys;
  for (const auto& s : cohort) {
    xs.push_back(x_of(s));
    ys.push_back(y_of(s));
  }
  const double x_split = thresholds.x.value_or(median(xs));
  const double y_split = thresholds.y.value_or(median(ys));
  for (auto& s : cohort) s.quadrant = classify(x_of(s), y_of(s), x_split, y_split);
}

}  // namespace

const char* to_string(Quadrant q) {
  switch (q) {
    case Quadrant::best: return "best";
    case Quadrant::conservative: return "conservative";
    case Quadrant::aggressive: return "aggressive";
    case Quadrant::worst: return "worst";
  }
  return "unknown";
}

Quadrant classify(double x, double y, double x_split, double y_split) {
  const bool high_x = x >= x_split;
  const bool high_y = y >= y_split;
  if (high_x && high_y) return Quadrant::best;
  if (high_x) return Quadrant::conservative;
  if (high_y) return Quadrant::aggressive;
  return Quadrant::worst;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<PlayerSummary> decision_summary(std::span<const EvaluationRecord> evaluations, std::size_t min_passes,
                                            QuadrantThresholds thresholds) {
  std::vector<PlayerSummary> cohort = aggregate(evaluations, min_passes);
  assign_quadrants(
      cohort, thresholds, [](const PlayerSummary& s) { return s.avg_success_probability; },
      [](const PlayerSummary& s) { return s.avg_best_case_value; });
  return cohort;
}

std::vector<PlayerSummary> outcome_summary(std::span<const EvaluationRecord> evaluations, std::size_t min_passes,
                                           QuadrantThresholds thresholds) {
  std::vector<PlayerSummary> cohort = aggregate(evaluations, min_passes);
  assign_quadrants(
      cohort, thresholds, [](const PlayerSummary& s) { return s.avg_relative_outcome; },
      [](const PlayerSummary& s) { return s.avg_best_outcome; });
  return cohort;
}

}  // namespace passeval
