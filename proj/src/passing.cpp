#include "passeval/passing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace passeval {

namespace {

// Phi(a) - Phi(b) for a >= b, using whichever tail keeps precision.
double normal_mass(double a, double b) {
  constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  if (b >= 0.0) return 0.5 * (std::erfc(b * inv_sqrt2) - std::erfc(a * inv_sqrt2));
  if (a <= 0.0) return 0.5 * (std::erfc(-a * inv_sqrt2) - std::erfc(-b * inv_sqrt2));
  return 1.0 - 0.5 * (std::erfc(a * inv_sqrt2) + std::erfc(-b * inv_sqrt2));
}

}  // namespace

double base_pickup(double d, double t, Team side, const Config& cfg) {
  const double s = cfg.reach;
  const double spatial = normal_mass((d + s) / s, (d - s) / s);
  const double penalty = std::exp(-t / cfg.intercept_constant(side));
  return spatial * penalty * (cfg.dt / cfg.coverage_window);
}

std::vector<double> chain_pickup(std::span<const double> ranked_bases) {
  std::vector<double> out(ranked_bases.size());
  double taken = 0.0;
  for (std::size_t k = 0; k < ranked_bases.size(); ++k) {
    out[k] = ranked_bases[k] * (1.0 - taken);
    taken += out[k];
  }
  return out;
}

std::vector<double> ordered_pickup(std::span<const PickupCandidate> candidates) {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (candidates[a].distance != candidates[b].distance) return candidates[a].distance < candidates[b].distance;
    return candidates[a].id < candidates[b].id;
  });
  std::vector<double> ranked(candidates.size());
  for (std::size_t k = 0; k < order.size(); ++k) ranked[k] = candidates[order[k]].base;
  const std::vector<double> chained = chain_pickup(ranked);
  std::vector<double> out(candidates.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = chained[k];
  return out;
}

double PickupField::total_unconditional() const {
  return std::accumulate(unconditional.begin(), unconditional.end(), 0.0);
}

PickupField trajectory_pickup(const Snapshot& snap, const PassTrajectory& traj, const Config& cfg) {
  PickupField f;
  std::vector<const PlayerState*> takers;
  for (const auto& p : snap.players) {
    if (p.id == snap.passer_id) continue;
    takers.push_back(&p);
    f.players.push_back(p.id);
    f.teams.push_back(p.team);
  }
  const std::size_t n = takers.size();
  const std::size_t k_count = traj.triplets.size();
  f.triplet_count = k_count;
  f.distance.assign(n * k_count, 0.0);
  f.conditional.assign(n * k_count, 0.0);
  f.unconditional.assign(n * k_count, 0.0);
  f.off_conditional.assign(k_count, 0.0);
  f.def_conditional.assign(k_count, 0.0);
  f.off.assign(k_count, 0.0);
  f.def.assign(k_count, 0.0);
  f.survival.assign(k_count + 1, 1.0);

  std::vector<PickupCandidate> candidates(n);
  std::vector<double> own_taken(n, 0.0);
  double all_taken = 0.0;

  for (std::size_t j = 0; j < k_count; ++j) {
    const Triplet& tr = traj.triplets[j];
    for (std::size_t i = 0; i < n; ++i) {
      const double d = min_distance(*takers[i], tr.position(), tr.t, cfg);
      candidates[i] = {takers[i]->id, d, base_pickup(d, tr.t, takers[i]->team, cfg)};
      f.distance[f.index(j, i)] = d;
    }
    const std::vector<double> cond = ordered_pickup(candidates);

    const double survive = f.survival[j];
    double taken_here = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t idx = f.index(j, i);
      f.conditional[idx] = cond[i];
      const double reach_prob =
          cfg.survival_mode == SurvivalMode::all_players ? survive : 1.0 - own_taken[i];
      f.unconditional[idx] = cond[i] * reach_prob;
      own_taken[i] += f.unconditional[idx];
      taken_here += f.unconditional[idx];
      if (f.teams[i] == Team::offence) {
        f.off_conditional[j] += cond[i];
        f.off[j] += f.unconditional[idx];
      } else {
        f.def_conditional[j] += cond[i];
        f.def[j] += f.unconditional[idx];
      }
    }
    all_taken += taken_here;
    f.survival[j + 1] = std::max(0.0, cfg.survival_mode == SurvivalMode::all_players ? survive - taken_here : 1.0 - all_taken);
  }
  return f;
}

double success_probability(const PickupField& field) {
  return std::accumulate(field.off.begin(), field.off.end(), 0.0);
}

double success_probability(const Snapshot& snap, double speed, double angle, const Config& cfg) {
  return success_probability(trajectory_pickup(snap, pass_trajectory(snap.puck, speed, angle, cfg), cfg));
}

std::vector<double> success_map(const Snapshot& snap, double speed, const Config& cfg) {
  const std::vector<double> angles = angle_grid(cfg);
  std::vector<double> out(angles.size());
  for (std::size_t a = 0; a < angles.size(); ++a) out[a] = success_probability(snap, speed, angles[a], cfg);
  return out;
}

}  // namespace passeval
