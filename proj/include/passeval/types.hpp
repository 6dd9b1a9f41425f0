#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace passeval {

// Plane vector in rink coordinates (feet, or feet/sec for velocities).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double k) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

enum class Team { offence, defence };

inline const char* to_string(Team t) { return t == Team::offence ? "offence" : "defence"; }
Team team_from_string(const std::string& s);

// +1 for offence, -1 for defence.
inline double team_label(Team t) { return t == Team::offence ? 1.0 : -1.0; }

using PlayerId = std::string;

struct PlayerState {
  PlayerId id;
  Team team = Team::offence;
  Vec2 position;
  Vec2 velocity;
  bool is_goalie = false;
};

// One frame of play, already normalized so the offence attacks the goal at
// (goal_x, goal_y).
struct Snapshot {
  std::vector<PlayerState> players;
  Vec2 puck;
  PlayerId passer_id;
  double frame_time = 0.0;

  const PlayerState* find(const PlayerId& id) const;
  const PlayerState& passer() const;
  std::size_t count(Team team) const;
};

// Sample along a pass: position plus time since release.
struct Triplet {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  Vec2 position() const { return {x, y}; }
};

// A recorded pass joined with the frame it was made from.
struct PassPlay {
  std::string id;  // "<game>:<period>:<clock>"
  std::string game;
  int period = 0;
  double clock = 0.0;
  Snapshot snapshot;
  double actual_angle = 0.0;
  double actual_speed = 0.0;
  PlayerId receiver_id;
  bool completed = false;
};

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config;

struct SnapshotChecks {
  bool team_counts = true;  // at least two players on each team
};

// Returns a description of the first violated invariant, or nullopt.
std::optional<std::string> check_snapshot(const Snapshot& snap, const Config& cfg,
                                          SnapshotChecks checks = {});

}  // namespace passeval
