#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "passeval/analysis.hpp"
#include "passeval/io.hpp"

using namespace passeval;

namespace {

EvaluationRecord rec(const std::string& who, double success, double best_case, double best_outcome, double relative) {
  static int n = 0;
  return {"play-" + std::to_string(++n), who, success, best_case, best_outcome, relative};
}

std::vector<EvaluationRecord> random_cohort(std::mt19937_64& rng, int players, int max_passes) {
  std::uniform_real_distribution<double> u(0, 1), v(0, 0.3);
  std::uniform_int_distribution<int> k(1, max_passes);
  std::vector<EvaluationRecord> out;
  for (int p = 0; p < players; ++p) {
    const int passes = k(rng);
    for (int i = 0; i < passes; ++i) out.push_back(rec("p" + std::to_string(p), u(rng), v(rng), v(rng), u(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("means of one player's plays") {
  const std::vector<EvaluationRecord> e{rec("a", 0.4, 0.1, 0.2, 0.5), rec("a", 0.4, 0.1, 0.2, 0.5),
                                        rec("a", 0.4, 0.1, 0.2, 0.5)};
  const auto d = decision_summary(e, 3);
  REQUIRE(d.size() == 1);
  CHECK(d[0].pass_count == 3);
  CHECK(d[0].avg_success_probability == doctest::Approx(0.4));
  CHECK(d[0].avg_best_case_value == doctest::Approx(0.1));
}

TEST_CASE("players below the pass threshold are left out") {
  const std::vector<EvaluationRecord> e{rec("a", 0.4, 0.1, 0.2, 0.5), rec("a", 0.4, 0.1, 0.2, 0.5),
                                        rec("b", 0.4, 0.1, 0.2, 0.5), rec("b", 0.4, 0.1, 0.2, 0.5),
                                        rec("b", 0.4, 0.1, 0.2, 0.5)};
  const auto d = decision_summary(e, 3);
  REQUIRE(d.size() == 1);
  CHECK(d[0].player_id == "b");
  CHECK(decision_summary(e, 10).empty());
  CHECK(outcome_summary({}, 3).empty());
  CHECK_THROWS_AS(decision_summary(e, 0), std::invalid_argument);
}

TEST_CASE("median split puts mirrored players in opposite quadrants") {
  std::vector<EvaluationRecord> e;
  for (int i = 0; i < 3; ++i) {
    e.push_back(rec("hi", 0.6, 0.3, 0, 0));
    e.push_back(rec("lo", 0.2, 0.1, 0, 0));
    e.push_back(rec("safe", 0.6, 0.1, 0, 0));
    e.push_back(rec("bold", 0.2, 0.3, 0, 0));
  }
  const auto d = decision_summary(e, 3);
  std::map<std::string, Quadrant> q;
  for (const auto& s : d) q[s.player_id] = s.quadrant;
  CHECK(q["hi"] == Quadrant::best);
  CHECK(q["lo"] == Quadrant::worst);
  CHECK(q["safe"] == Quadrant::conservative);
  CHECK(q["bold"] == Quadrant::aggressive);

  // fixed thresholds override the medians
  const auto fixed = decision_summary(e, 3, {0.1, 0.05});
  for (const auto& s : fixed) CHECK(s.quadrant == Quadrant::best);
}

TEST_CASE("relative outcome extremes") {
  std::vector<EvaluationRecord> e;
  for (int i = 0; i < 4; ++i) {
    e.push_back(rec("always", 0.5, 0.1, 0.2, 1.0));
    e.push_back(rec("never", 0.0, 0.0, 0.1, 0.0));
  }
  const auto o = outcome_summary(e, 3);
  REQUIRE(o.size() == 2);
  CHECK(o[0].player_id == "always");
  CHECK(o[0].avg_relative_outcome == 1.0);
  CHECK(o[1].avg_relative_outcome == 0.0);
}

TEST_CASE("summary means agree with a streaming recomputation from JSON") {
  std::mt19937_64 rng(31);
  const auto cohort = random_cohort(rng, 12, 9);
  std::ostringstream file;
  for (const auto& r : cohort) {
    ojson j;
    j["play_id"] = r.play_id;
    j["status"] = "ok";
    j["passer_id"] = r.passer_id;
    j["actual_success"] = r.actual_success;
    j["actual_best_case"] = r.actual_best_case;
    j["best_outcome"] = r.best_outcome;
    j["relative_outcome"] = r.relative_outcome;
    file << j.dump() << "\n";
  }
  file << R"({"play_id":"x","status":"rejected","reason":"bad"})" << "\n";

  // independent pass: running means straight off the text
  struct Running {
    std::size_t n = 0;
    double s = 0, b = 0, o = 0, r = 0;
  };
  std::map<std::string, Running> run;
  std::istringstream lines(file.str());
  std::string line;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["status"] != "ok") continue;
    Running& m = run[j["passer_id"].get<std::string>()];
    ++m.n;
    const double k = static_cast<double>(m.n);
    m.s += (j["actual_success"].get<double>() - m.s) / k;
    m.b += (j["actual_best_case"].get<double>() - m.b) / k;
    m.o += (j["best_outcome"].get<double>() - m.o) / k;
    m.r += (j["relative_outcome"].get<double>() - m.r) / k;
  }

  std::istringstream in(file.str());
  const auto records = read_evaluations(in);
  CHECK(records.size() == cohort.size());
  const auto d = decision_summary(records, 3);
  const auto o = outcome_summary(records, 3);
  REQUIRE(d.size() == o.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Running& m = run.at(d[i].player_id);
    CHECK(d[i].pass_count == m.n);
    CHECK(o[i].player_id == d[i].player_id);
    CHECK(o[i].pass_count == d[i].pass_count);
    CHECK(std::abs(d[i].avg_success_probability - m.s) <= 1e-12);
    CHECK(std::abs(d[i].avg_best_case_value - m.b) <= 1e-12);
    CHECK(std::abs(o[i].avg_best_outcome - m.o) <= 1e-12);
    CHECK(std::abs(o[i].avg_relative_outcome - m.r) <= 1e-12);
  }
}

TEST_CASE("summaries ignore play order") {
  std::mt19937_64 rng(32);
  auto cohort = random_cohort(rng, 15, 8);
  const auto d = decision_summary(cohort, 3);
  const auto o = outcome_summary(cohort, 3);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(cohort.begin(), cohort.end(), rng);
    const auto d2 = decision_summary(cohort, 3);
    const auto o2 = outcome_summary(cohort, 3);
    REQUIRE(d2.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d2[i].avg_success_probability == d[i].avg_success_probability);
      CHECK(d2[i].avg_best_case_value == d[i].avg_best_case_value);
      CHECK(d2[i].quadrant == d[i].quadrant);
      CHECK(o2[i].avg_relative_outcome == o[i].avg_relative_outcome);
      CHECK(o2[i].quadrant == o[i].quadrant);
    }
  }
}

TEST_CASE("quadrants survive a strictly monotone rescaling") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    auto cohort = random_cohort(rng, 9, 6);
    const auto d = decision_summary(cohort, 1);
    // rescale the per-player means directly: quadrants depend only on the ranks
    std::vector<double> xs, ys;
    for (const auto& s : d) {
      xs.push_back(s.avg_success_probability);
      ys.push_back(s.avg_best_case_value);
    }
    auto f = [](double v) { return v * v * v + 2 * v + 7; };
    std::vector<double> fx, fy;
    for (double v : xs) fx.push_back(f(v));
    for (double v : ys) fy.push_back(f(v));
    const double mx = median(fx), my = median(fy);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(classify(fx[i], fy[i], mx, my) == d[i].quadrant);
  }
}
