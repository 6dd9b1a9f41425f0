#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "passeval/config.hpp"
#include "passeval/types.hpp"

namespace passeval {

// Fatal input problem (unreadable file, missing header or column).
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrackingRecord {
  int period = 0;
  long frame_id = 0;
  double clock = 0.0;  // seconds elapsed in the period
  std::string team;
  int jersey = 0;
  double x = 0.0;
  double y = 0.0;
  std::optional<bool> goalie;
};

struct EventRecord {
  int period = 0;
  double clock = 0.0;
  std::string team;
  std::string player;
  std::string event_type;
  double x = 0.0;
  double y = 0.0;
  std::string detail;
  std::optional<std::string> player_2;
  std::optional<double> x2;
  std::optional<double> y2;
  std::optional<double> clock2;  // reception time
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

ParseResult<TrackingRecord> parse_tracking(std::istream& in, const Config& cfg);
ParseResult<EventRecord> parse_events(std::istream& in, const Config& cfg);

// Finite-difference velocity; zero when there is no previous frame.
Vec2 estimate_velocity(std::optional<Vec2> prev, Vec2 curr, double frame_rate);

// Release speed that makes the puck cover `distance` in `travel_time`,
// clamped to [cfg.pass_speed_min, cfg.pass_speed_max].
double infer_pass_speed(double distance, double travel_time, const Config& cfg);

PlayerId make_player_id(const std::string& team, const std::string& jersey);

enum class Rejection {
  not_direct,
  outside_offensive_zone,
  missing_receiver,
  invalid_travel_time,
  no_tracking_frame,
  one_team_only,
  too_few_players,
  zero_length_pass,
  invalid_snapshot,
};
const char* to_string(Rejection r);

struct RejectedPass {
  std::string key;
  Rejection reason = Rejection::invalid_snapshot;
  std::string detail;
};

struct IngestReport {
  std::size_t pass_events = 0;
  std::size_t accepted = 0;
  std::vector<RejectedPass> rejected;
  std::size_t velocity_clamps = 0;
  std::size_t injected_players = 0;

  std::map<Rejection, std::size_t> counts() const;
};

struct IngestResult {
  std::vector<PassPlay> plays;
  IngestReport report;
};

bool is_pass_event(const EventRecord& e);

IngestResult build_pass_plays(const std::vector<TrackingRecord>& tracking, const std::vector<EventRecord>& events,
                              const std::string& game, const Config& cfg);

}  // namespace passeval
