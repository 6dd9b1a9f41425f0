#pragma once

#include <stdexcept>
#include <vector>

#include "passeval/config.hpp"
#include "passeval/types.hpp"

namespace passeval {

class MotionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Position of a skater who coasts through the reaction time and then
// accelerates toward heading `phi` against linear drag.
Vec2 player_position(const PlayerState& state, double phi, double t, const Config& cfg);

// Set of points a skater can occupy at time t. For goalies this is the largest
// disk inside the intersection with the crease constraint around their net.
struct ReachableDisk {
  Vec2 center;
  double radius = 0.0;
  double t = 0.0;
};

ReachableDisk reachable_disk(const PlayerState& state, double t, const Config& cfg);

// Distance from target to the reachable disk at time t (0 when inside).
double min_distance(const PlayerState& state, Vec2 target, double t, const Config& cfg);

struct ReachTime {
  double t = 0.0;
  bool capped = false;  // not reachable before cfg.t_max
};

// Earliest time the skater can be on the target, bisected to 1e-4 s.
ReachTime time_to_reach(const PlayerState& state, Vec2 target, const Config& cfg);

// Net a goalie is tethered to: the attacked goal for defence, its mirror for offence.
Vec2 own_net(Team team, const Config& cfg);

struct PuckState {
  Vec2 position;
  Vec2 velocity;
};

// Puck sliding under Stokes drag plus constant ice friction. Position is
// frozen once the puck stops. Throws MotionError when v0 is zero.
PuckState puck_state(Vec2 p0, Vec2 v0, double t, const Config& cfg);

// Distance covered along the release direction by time t (stop-capped).
double puck_travel_distance(double speed, double t, const Config& cfg);
double puck_speed_at(double speed, double t, const Config& cfg);
double puck_stop_time(double speed, const Config& cfg);

enum class Termination { board, stopped, time_cap };
const char* to_string(Termination t);

struct PassTrajectory {
  double angle = 0.0;
  double speed = 0.0;
  std::vector<Triplet> triplets;
  Termination termination = Termination::board;
};

// Samples the puck every cfg.dt until it leaves the rink, slows below
// cfg.puck_stop_speed or passes cfg.t_max. The terminating sample is dropped.
PassTrajectory pass_trajectory(Vec2 puck, double speed, double angle, const Config& cfg);

}  // namespace passeval
