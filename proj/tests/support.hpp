#pragma once

// Test-side helpers and independent oracles. Nothing here calls the closed
// forms under test.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "passeval/config.hpp"
#include "passeval/types.hpp"

namespace testing {

using passeval::Config;
using passeval::PlayerState;
using passeval::Snapshot;
using passeval::Team;
using passeval::Vec2;

inline PlayerState player(const std::string& id, Team team, Vec2 pos, Vec2 vel = {}, bool goalie = false) {
  return {id, team, pos, vel, goalie};
}

inline Snapshot snapshot(std::vector<PlayerState> players, Vec2 puck, const std::string& passer) {
  Snapshot s;
  s.players = std::move(players);
  s.puck = puck;
  s.passer_id = passer;
  return s;
}

// Classic RK4 on a 4-vector state (x, y, vx, vy).
struct State4 {
  double x, y, vx, vy;
};

template <typename Deriv>
State4 rk4(State4 s, double t_end, double h, Deriv f) {
  double t = 0.0;
  auto add = [](State4 a, State4 d, double k) {
    return State4{a.x + k * d.x, a.y + k * d.y, a.vx + k * d.vx, a.vy + k * d.vy};
  };
  while (t < t_end - 1e-15) {
    const double step = std::min(h, t_end - t);
    const State4 k1 = f(s);
    const State4 k2 = f(add(s, k1, step / 2));
    const State4 k3 = f(add(s, k2, step / 2));
    const State4 k4 = f(add(s, k3, step));
    s.x += step / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    s.y += step / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
    s.vx += step / 6 * (k1.vx + 2 * k2.vx + 2 * k3.vx + k4.vx);
    s.vy += step / 6 * (k1.vy + 2 * k2.vy + 2 * k3.vy + k4.vy);
    t += step;
  }
  return s;
}

// Player: constant velocity during the reaction time, then
// dv/dt = gamma (v_max u - v).
inline Vec2 player_oracle(const PlayerState& p, double phi, double t, const Config& cfg, double h = 1e-3) {
  const double coast = std::min(t, cfg.t_reaction);
  State4 s{p.position.x + p.velocity.x * coast, p.position.y + p.velocity.y * coast, p.velocity.x, p.velocity.y};
  const double ux = std::cos(phi), uy = std::sin(phi);
  s = rk4(s, t - coast, h, [&](State4 q) {
    return State4{q.vx, q.vy, cfg.gamma * (cfg.v_max * ux - q.vx), cfg.gamma * (cfg.v_max * uy - q.vy)};
  });
  return {s.x, s.y};
}

// Puck: dv/dt = -kappa v - mu v/|v| while moving. The RK4 run stops at the
// analytic stop instant of the speed ODE, found here by integrating the
// scalar speed equation with bisection on its sign.
inline Vec2 puck_oracle(Vec2 p0, Vec2 v0, double t, const Config& cfg, double h = 1e-3) {
  // scalar speed ODE ds/dt = -kappa s - mu has s(T)=0; march it with RK4,
  // then bisect the final sub-step where the speed changes sign
  auto step = [&](double s, double st) {
    auto f = [&](double v) { return -cfg.kappa * v - cfg.mu_decel; };
    const double a = f(s), b = f(s + st / 2 * a), c = f(s + st / 2 * b), d = f(s + st * c);
    return s + st / 6 * (a + 2 * b + 2 * c + d);
  };
  double speed = v0.norm();
  double k = 0.0;
  while (step(speed, h) > 0.0) {
    speed = step(speed, h);
    k += h;
  }
  double lo_sub = 0.0, hi_sub = h;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo_sub + hi_sub);
    (step(speed, mid) > 0.0 ? lo_sub : hi_sub) = mid;
  }
  const double lo = k + lo_sub;
  const double t_run = std::min(t, lo);
  State4 s{p0.x, p0.y, v0.x, v0.y};
  s = rk4(s, t_run, h, [&](State4 q) {
    const double n = std::hypot(q.vx, q.vy);
    const double ax = n > 0 ? -cfg.kappa * q.vx - cfg.mu_decel * q.vx / n : 0.0;
    const double ay = n > 0 ? -cfg.kappa * q.vy - cfg.mu_decel * q.vy / n : 0.0;
    return State4{q.vx, q.vy, ax, ay};
  });
  return {s.x, s.y};
}

inline double normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); }

// Sequential pick-up simulation: at each triplet the ranked players try in
// order, each succeeding with its base probability; the first success ends
// the pass. Returns per-player pick-up frequencies.
inline std::vector<double> simulate_pickups(const std::vector<std::vector<double>>& ranked_bases_per_triplet,
                                            const std::vector<std::vector<int>>& rank_to_player, int players,
                                            long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<long> hits(players, 0);
  for (long n = 0; n < trials; ++n) {
    bool taken = false;
    for (std::size_t j = 0; j < ranked_bases_per_triplet.size() && !taken; ++j) {
      const auto& bases = ranked_bases_per_triplet[j];
      for (std::size_t r = 0; r < bases.size(); ++r) {
        if (u(rng) < bases[r]) {
          ++hits[rank_to_player[j][r]];
          taken = true;
          break;
        }
      }
    }
  }
  std::vector<double> freq(players);
  for (int i = 0; i < players; ++i) freq[i] = static_cast<double>(hits[i]) / static_cast<double>(trials);
  return freq;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("passeval-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
