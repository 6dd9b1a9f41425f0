#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "passeval/types.hpp"

namespace passeval {

// What analysis needs from one evaluated play.
struct EvaluationRecord {
  std::string play_id;
  PlayerId passer_id;
  double actual_success = 0.0;
  double actual_best_case = 0.0;
  double best_outcome = 0.0;
  double relative_outcome = 0.0;
};

enum class Quadrant { best, conservative, aggressive, worst };
const char* to_string(Quadrant q);

struct PlayerSummary {
  PlayerId player_id;
  std::size_t pass_count = 0;
  double avg_success_probability = 0.0;
  double avg_best_case_value = 0.0;
  double avg_best_outcome = 0.0;
  double avg_relative_outcome = 0.0;
  Quadrant quadrant = Quadrant::worst;
};

// Fixed split points; unset axes split at the cohort median.
struct QuadrantThresholds {
  std::optional<double> x;
  std::optional<double> y;
};

// Quadrant from a "safety" axis x and a "value" axis y: high/high is best,
// high x only is conservative, high y only is aggressive.
Quadrant classify(double x, double y, double x_split, double y_split);

double median(std::vector<double> values);

// Risk/reward split: x = mean success probability, y = mean best-case value
// of the attempted passes. Sorted by player id.
std::vector<PlayerSummary> decision_summary(std::span<const EvaluationRecord> evaluations, std::size_t min_passes,
                                            QuadrantThresholds thresholds = {});

// Capitalization split: x = mean relative outcome, y = mean best outcome.
std::vector<PlayerSummary> outcome_summary(std::span<const EvaluationRecord> evaluations, std::size_t min_passes,
                                           QuadrantThresholds thresholds = {});

}  // namespace passeval
