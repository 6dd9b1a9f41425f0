#pragma once

#include <span>
#include <vector>

#include "passeval/config.hpp"
#include "passeval/motion.hpp"
#include "passeval/types.hpp"

namespace passeval {

// Chance a player `d` feet short of the puck gathers it `t` seconds after
// release, per time step of cfg.dt.
double base_pickup(double d, double t, Team side, const Config& cfg);

// Turns base probabilities listed in order of arrival into conditional
// pick-up probabilities: each player only gets what earlier arrivals left.
std::vector<double> chain_pickup(std::span<const double> ranked_bases);

struct PickupCandidate {
  PlayerId id;
  double distance = 0.0;
  double base = 0.0;
};

// Ranks candidates by distance (ties by id) and returns the conditional
// pick-up probability of each, in input order.
std::vector<double> ordered_pickup(std::span<const PickupCandidate> candidates);

// Pick-up probabilities of every non-passer along one trajectory.
// Per-player arrays are indexed [triplet * players.size() + player].
struct PickupField {
  std::vector<PlayerId> players;
  std::vector<Team> teams;
  std::size_t triplet_count = 0;

  std::vector<double> distance;
  std::vector<double> conditional;    // given the puck arrives at the triplet
  std::vector<double> unconditional;  // including the chance it gets there

  std::vector<double> off_conditional;
  std::vector<double> def_conditional;
  std::vector<double> off;
  std::vector<double> def;
  std::vector<double> survival;  // triplet_count + 1 entries, survival[0] = 1

  std::size_t index(std::size_t triplet, std::size_t player) const { return triplet * players.size() + player; }
  double total_unconditional() const;
};

PickupField trajectory_pickup(const Snapshot& snap, const PassTrajectory& traj, const Config& cfg);

// Probability an offensive player gathers the pass somewhere along it.
double success_probability(const PickupField& field);
double success_probability(const Snapshot& snap, double speed, double angle, const Config& cfg);

// Success probability for every direction of angle_grid(cfg).
std::vector<double> success_map(const Snapshot& snap, double speed, const Config& cfg);

}  // namespace passeval
