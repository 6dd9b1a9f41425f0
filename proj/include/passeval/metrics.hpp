#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "passeval/config.hpp"
#include "passeval/motion.hpp"
#include "passeval/types.hpp"

namespace passeval {

double conditional_location_value(const Snapshot& snap, const Triplet& at, double p_off_given_arrival,
                                  const Config& cfg);
double location_pass_value(const Snapshot& snap, const Triplet& at, double p_off, const Config& cfg);

// Per-triplet values along one candidate pass.
struct TripletValue {
  Triplet at;
  double rink_control = 0.0;
  double location_value = 0.0;
  double off_conditional = 0.0;  // offensive pick-up given arrival
  double off = 0.0;              // offensive pick-up including arrival
  double clv = 0.0;
  double lpv = 0.0;
};

struct SliceValue {
  double value = 0.0;
  bool empty = false;  // trajectory had no triplets
};

// Highest conditional location value along the pass.
SliceValue best_case_pass_value(std::span<const TripletValue> slice);
// Compensated sum of location pass values along the pass.
SliceValue expected_pass_value(std::span<const TripletValue> slice);

struct PassCell {
  double angle = 0.0;
  double speed = 0.0;
  double success = 0.0;
  double best_case = 0.0;
  double expected = 0.0;
  bool empty = false;
  Termination termination = Termination::board;
  std::vector<TripletValue> triplets;
};

PassCell evaluate_pass(const Snapshot& snap, double speed, double angle, const Config& cfg);

// Metrics over angle_grid(cfg) x speeds; cells stored speed-major.
struct PassSurface {
  std::vector<double> angles;
  std::vector<double> speeds;
  std::vector<PassCell> cells;

  const PassCell& at(std::size_t speed_index, std::size_t angle_index) const {
    return cells[speed_index * angles.size() + angle_index];
  }
};

PassSurface pass_surface(const Snapshot& snap, std::span<const double> speeds, const Config& cfg);

enum class OptionKind { surface, actual_window, no_pass };
const char* to_string(OptionKind k);

struct PassOption {
  OptionKind kind = OptionKind::no_pass;
  double angle = 0.0;  // meaningless for no_pass
  double speed = 0.0;
  double value = 0.0;
};

struct PlayEvaluation {
  std::string play_id;
  PlayerId passer_id;
  double actual_angle = 0.0;
  double actual_speed = 0.0;

  double best_outcome = 0.0;
  double no_pass_value = 0.0;
  double actual_value = 0.0;
  double relative_outcome = 0.0;
  PassOption best;

  // The direction inside the actual-angle window that scored actual_value,
  // and the other metrics of that pass.
  double actual_best_angle = 0.0;
  double actual_success = 0.0;
  double actual_best_case = 0.0;

  PassSurface surface;  // candidate speeds followed by the actual speed
};

// Angles sampled across the window around the recorded direction.
std::vector<double> actual_window_angles(double actual_angle, const Config& cfg);

// Evaluates a frame without enforcing snapshot invariants.
PlayEvaluation evaluate_snapshot(const Snapshot& snap, double actual_angle, double actual_speed, const Config& cfg);

class PlayRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validates the play's snapshot (throws PlayRejected) and evaluates it.
PlayEvaluation evaluate_play(const PassPlay& play, const Config& cfg);

}  // namespace passeval
