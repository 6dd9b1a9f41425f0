#include <cmath>
#include <numbers>

#include "doctest.h"
#include "passeval/config.hpp"
#include "passeval/types.hpp"
#include "support.hpp"

using namespace passeval;

namespace {

bool mentions(const ConfigError& e, const std::string& text) {
  for (const auto& p : e.problems())
    if (p.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("defaults validate and come back unchanged") {
  const Config cfg;
  const Config out = validate_config(cfg);
  CHECK(config_to_json(out) == config_to_json(cfg));
  CHECK(cfg.gamma == 1.3);
  CHECK(cfg.v_max == 35.5);
  CHECK(cfg.t_reaction == 0.189);
  CHECK(cfg.goalie_radius == 8.0);
  CHECK(cfg.mu_decel == doctest::Approx(0.1 * 32.17));
  CHECK(cfg.beta == 2.5);
  CHECK(cfg.reach == 6.5);
  CHECK(cfg.ell_x == 2000.0);
  CHECK(cfg.ell_y == 500.0);
  CHECK(cfg.goal_x == 189.0);
  CHECK(cfg.goal_y == 42.5);
  CHECK(cfg.candidate_speeds == std::vector<double>{45, 65, 85});
}

TEST_CASE("zero gamma is rejected by name") {
  Config cfg;
  cfg.gamma = 0.0;
  try {
    validate_config(cfg);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "gamma must be positive"));
  }
}

TEST_CASE("dt above the coverage window is rejected") {
  Config cfg;
  cfg.dt = 0.2;
  cfg.coverage_window = 0.1;
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("every violation is reported at once") {
  Config cfg;
  cfg.v_max = -1;
  cfg.kappa = 0;
  cfg.goal_x = 500;
  try {
    validate_config(cfg);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "v_max"));
    CHECK(mentions(e, "kappa"));
    CHECK(mentions(e, "goal_x"));
    CHECK(e.problems().size() >= 3);
  }
}

TEST_CASE("config json: absent keys default, unknown keys fail, round trip is exact") {
  const Config c = config_from_json(nlohmann::json::parse(R"({"beta": 3.0, "candidate_speeds": [50, 70]})"));
  CHECK(c.beta == 3.0);
  CHECK(c.gamma == 1.3);
  CHECK(c.candidate_speeds == std::vector<double>{50, 70});

  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"gama": 1.0})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"gamma": "fast"})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"([1, 2])")), ConfigError);

  const Config d;
  const std::string text = config_to_json(d).dump();
  const Config back = config_from_json(nlohmann::json::parse(text));
  CHECK(config_to_json(back).dump() == text);
  CHECK(back.mu_decel == d.mu_decel);
  CHECK(back.t_intercept_def == d.t_intercept_def);
}

TEST_CASE("mirror to the right half") {
  const Config cfg;
  CHECK(mirror_to_right_half({60, 30}, cfg).x == 140.0);
  CHECK(mirror_to_right_half({60, 30}, cfg).y == 55.0);
  CHECK(mirror_to_right_half({100, 42.5}, cfg).x == 100.0);
  CHECK(mirror_to_right_half({100, 42.5}, cfg).y == 42.5);
  const Vec2 g = mirror_to_right_half({11, 42.5}, cfg);
  CHECK(g.x == cfg.goal_x);
  CHECK(g.y == cfg.goal_y);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0, cfg.rink_length), uy(0, cfg.rink_width);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 p{ux(rng), uy(rng)};
    const Vec2 q = mirror_to_right_half(mirror_to_right_half(p, cfg), cfg);
    // 200 - (200 - x) can drop bits below one ulp of the rink size
    CHECK(std::abs(q.x - p.x) <= (std::nextafter(cfg.rink_length, 1e9) - cfg.rink_length));
    CHECK(std::abs(q.y - p.y) <= (std::nextafter(cfg.rink_width, 1e9) - cfg.rink_width));
    // points on the rink's coarse lattice round-trip exactly
    const Vec2 r{std::round(p.x * 8) / 8, std::round(p.y * 8) / 8};
    const Vec2 rr = mirror_to_right_half(mirror_to_right_half(r, cfg), cfg);
    CHECK(rr.x == r.x);
    CHECK(rr.y == r.y);
  }
}

TEST_CASE("angle grid covers (-pi, pi] with exact 0 and pi") {
  const Config cfg;
  const auto a = angle_grid(cfg);
  CHECK(a.size() == static_cast<std::size_t>(std::lround(2 * std::numbers::pi / cfg.d_alpha)));
  CHECK(a.size() == 126);
  CHECK(a.back() == std::numbers::pi);
  CHECK(std::count(a.begin(), a.end(), 0.0) == 1);
  CHECK(a.front() > -std::numbers::pi);
  for (std::size_t k = 1; k < a.size(); ++k) CHECK(a[k] - a[k - 1] == doctest::Approx(2 * std::numbers::pi / 126));
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
  CHECK(wrap_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(wrap_angle(3 * std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(wrap_angle(0.5) == 0.5);
  CHECK(wrap_angle(-0.5 - 2 * std::numbers::pi) == doctest::Approx(-0.5));
}

TEST_CASE("intercept constants honour the swap switch") {
  Config cfg;
  CHECK(cfg.intercept_constant(Team::offence) == 0.189);
  CHECK(cfg.intercept_constant(Team::defence) == 0.289);
  cfg.swap_intercept_constants = true;
  CHECK(cfg.intercept_constant(Team::offence) == 0.289);
  CHECK(cfg.intercept_constant(Team::defence) == 0.189);
}

TEST_CASE("snapshot checks") {
  const Config cfg;
  using testing::player;
  Snapshot s = testing::snapshot({player("a", Team::offence, {150, 40}), player("b", Team::offence, {160, 40}),
                                  player("c", Team::defence, {170, 40}), player("d", Team::defence, {180, 40})},
                                 {150, 40}, "a");
  CHECK_FALSE(check_snapshot(s, cfg).has_value());
  CHECK(s.passer().id == "a");

  Snapshot dup = s;
  dup.players[1].id = "a";
  CHECK(check_snapshot(dup, cfg).has_value());

  Snapshot nobody = s;
  nobody.passer_id = "zz";
  CHECK(check_snapshot(nobody, cfg).has_value());
  CHECK_THROWS_AS(nobody.passer(), SnapshotError);

  Snapshot out = s;
  out.puck = {250, 40};
  CHECK(check_snapshot(out, cfg).has_value());

  Snapshot thin = s;
  thin.players.pop_back();
  CHECK(check_snapshot(thin, cfg).has_value());
  CHECK_FALSE(check_snapshot(thin, cfg, {.team_counts = false}).has_value());

  CHECK_THROWS_AS(team_from_string("goalies"), std::invalid_argument);
  CHECK(team_from_string(to_string(Team::defence)) == Team::defence);
}
