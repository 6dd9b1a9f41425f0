#include "passeval/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <set>
#include <span>
#include <unordered_map>

#include <fmt/format.h>

#include "csv.hpp"
#include "passeval/motion.hpp"

namespace passeval {

namespace {

constexpr const char* kTrackingRequired[] = {"period", "frame_id", "clock", "team", "jersey", "x", "y"};
constexpr const char* kEventsRequired[] = {"period", "clock",  "team",     "player", "event", "x",
                                           "y",      "detail_1", "player_2", "x_2",    "y_2",   "clock_2"};

class Header {
 public:
  Header(const std::string& line, const std::string& prefix, const Config& cfg) : prefix_(prefix), cfg_(cfg) {
    const auto names = csv::split_line(line);
    for (std::size_t i = 0; i < names.size(); ++i) index_[csv::trim(names[i])] = i;
  }

  std::string source_name(const std::string& canonical) const {
    if (auto it = cfg_.column_map.find(prefix_ + "." + canonical); it != cfg_.column_map.end()) return it->second;
    return canonical;
  }

  std::optional<std::size_t> find(const std::string& canonical) const {
    if (auto it = index_.find(source_name(canonical)); it != index_.end()) return it->second;
    return std::nullopt;
  }

  std::size_t require(const std::string& canonical) const {
    if (auto i = find(canonical)) return *i;
    throw IngestError(fmt::format("{} file is missing column \"{}\"", prefix_, source_name(canonical)));
  }

 private:
  std::string prefix_;
  const Config& cfg_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct RowError {
  std::string message;
};

const std::string& field(const std::vector<std::string>& row, std::size_t i, const char* name) {
  if (i >= row.size()) throw RowError{fmt::format("missing value for {}", name)};
  return row[i];
}

double parse_double(const std::string& raw, const char* name) {
  const std::string s = csv::trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw RowError{fmt::format("bad {} \"{}\"", name, raw)};
  return v;
}

long parse_long(const std::string& raw, const char* name) {
  const std::string s = csv::trim(raw);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw RowError{fmt::format("bad {} \"{}\"", name, raw)};
  return v;
}

std::optional<double> parse_optional_double(const std::string& raw, const char* name) {
  if (csv::trim(raw).empty()) return std::nullopt;
  return parse_double(raw, name);
}

std::optional<bool> parse_flag(const std::string& raw) {
  std::string s = csv::trim(raw);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s.empty()) return std::nullopt;
  if (s == "1" || s == "true" || s == "yes" || s == "y" || s == "g") return true;
  if (s == "0" || s == "false" || s == "no" || s == "n") return false;
  throw RowError{fmt::format("bad goalie flag \"{}\"", raw)};
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

template <typename Record, typename RowParser>
ParseResult<Record> parse_rows(std::istream& in, const std::string& prefix, const Config& cfg,
                               std::span<const char* const> required, RowParser parse_row) {
  std::string line;
  while (std::getline(in, line))
    if (!csv::trim(line).empty()) break;
  if (csv::trim(line).empty()) throw IngestError(fmt::format("{} file: missing header", prefix));

  const Header header(line, prefix, cfg);
  std::vector<std::size_t> columns;
  for (const char* name : required) columns.push_back(header.require(name));

  ParseResult<Record> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv::trim(line).empty()) continue;
    const auto row = csv::split_line(line);
    try {
      out.records.push_back(parse_row(row, columns, header));
    } catch (const RowError& e) {
      ++out.skipped;
      out.warnings.push_back(fmt::format("{} line {}: {}", prefix, line_no, e.message));
    }
  }
  return out;
}

struct FrameKey {
  int period;
  long frame_id;
  bool operator<(const FrameKey& o) const { return std::tie(period, frame_id) < std::tie(o.period, o.frame_id); }
};

}  // namespace

ParseResult<TrackingRecord> parse_tracking(std::istream& in, const Config& cfg) {
  return parse_rows<TrackingRecord>(
      in, "tracking", cfg, kTrackingRequired,
      [](const std::vector<std::string>& row, const std::vector<std::size_t>& c, const Header& header) {
        TrackingRecord r;
        r.period = static_cast<int>(parse_long(field(row, c[0], "period"), "period"));
        r.frame_id = parse_long(field(row, c[1], "frame_id"), "frame_id");
        r.clock = parse_double(field(row, c[2], "clock"), "clock");
        r.team = csv::trim(field(row, c[3], "team"));
        if (r.team.empty()) throw RowError{"empty team"};
        r.jersey = static_cast<int>(parse_long(field(row, c[4], "jersey"), "jersey"));
        r.x = parse_double(field(row, c[5], "x"), "x");
        r.y = parse_double(field(row, c[6], "y"), "y");
        if (auto g = header.find("goalie"); g && *g < row.size()) r.goalie = parse_flag(row[*g]);
        return r;
      });
}

ParseResult<EventRecord> parse_events(std::istream& in, const Config& cfg) {
  return parse_rows<EventRecord>(
      in, "events", cfg, kEventsRequired,
      [](const std::vector<std::string>& row, const std::vector<std::size_t>& c, const Header&) {
        EventRecord e;
        e.period = static_cast<int>(parse_long(field(row, c[0], "period"), "period"));
        e.clock = parse_double(field(row, c[1], "clock"), "clock");
        e.team = csv::trim(field(row, c[2], "team"));
        e.player = csv::trim(field(row, c[3], "player"));
        e.event_type = csv::trim(field(row, c[4], "event"));
        e.x = parse_double(field(row, c[5], "x"), "x");
        e.y = parse_double(field(row, c[6], "y"), "y");
        e.detail = csv::trim(field(row, c[7], "detail_1"));
        if (auto p2 = csv::trim(field(row, c[8], "player_2")); !p2.empty()) e.player_2 = p2;
        e.x2 = parse_optional_double(field(row, c[9], "x_2"), "x_2");
        e.y2 = parse_optional_double(field(row, c[10], "y_2"), "y_2");
        e.clock2 = parse_optional_double(field(row, c[11], "clock_2"), "clock_2");
        return e;
      });
}

Vec2 estimate_velocity(std::optional<Vec2> prev, Vec2 curr, double frame_rate) {
  if (!prev) return {0.0, 0.0};
  return (curr - *prev) * frame_rate;
}

double infer_pass_speed(double distance, double travel_time, const Config& cfg) {
  double lo = cfg.pass_speed_min;
  double hi = cfg.pass_speed_max;
  if (puck_travel_distance(lo, travel_time, cfg) >= distance) return lo;
  if (puck_travel_distance(hi, travel_time, cfg) <= distance) return hi;
  for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (puck_travel_distance(mid, travel_time, cfg) < distance) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

PlayerId make_player_id(const std::string& team, const std::string& jersey) { return team + "#" + jersey; }

const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::not_direct: return "not direct";
    case Rejection::outside_offensive_zone: return "outside offensive zone";
    case Rejection::missing_receiver: return "missing receiver";
    case Rejection::invalid_travel_time: return "invalid travel time";
    case Rejection::no_tracking_frame: return "no tracking frame";
    case Rejection::one_team_only: return "one team only";
    case Rejection::too_few_players: return "too few players";
    case Rejection::zero_length_pass: return "zero length pass";
    case Rejection::invalid_snapshot: return "invalid snapshot";
  }
  return "unknown";
}

std::map<Rejection, std::size_t> IngestReport::counts() const {
  std::map<Rejection, std::size_t> out;
  for (const auto& r : rejected) ++out[r.reason];
  return out;
}

bool is_pass_event(const EventRecord& e) {
  const std::string t = lower(e.event_type);
  return t == "play" || t == "incomplete play";
}

IngestResult build_pass_plays(const std::vector<TrackingRecord>& tracking, const std::vector<EventRecord>& events,
                              const std::string& game, const Config& cfg) {
  std::map<FrameKey, std::vector<const TrackingRecord*>> frames;
  for (const auto& r : tracking) frames[{r.period, r.frame_id}].push_back(&r);
  // frames of each period ordered by clock, for the "nearest not after" lookup
  std::map<int, std::vector<std::pair<double, long>>> by_clock;
  for (const auto& [key, recs] : frames) by_clock[key.period].emplace_back(recs.front()->clock, key.frame_id);
  for (auto& [period, list] : by_clock) std::sort(list.begin(), list.end());

  IngestResult out;
  std::set<std::string> used_ids;

  for (const auto& e : events) {
    if (!is_pass_event(e)) continue;
    ++out.report.pass_events;
    std::string key = fmt::format("{}:{}:{:.2f}", game, e.period, e.clock);
    // keep ids unique when two passes share a clock value
    for (int n = 2; used_ids.contains(key); ++n) key = fmt::format("{}:{}:{:.2f}#{}", game, e.period, e.clock, n);
    used_ids.insert(key);

    auto reject = [&](Rejection why, std::string detail = {}) {
      out.report.rejected.push_back({key, why, std::move(detail)});
    };

    if (lower(e.detail) != "direct") {
      reject(Rejection::not_direct, e.detail);
      continue;
    }
    if (!e.player_2 || !e.x2 || !e.y2) {
      reject(Rejection::missing_receiver);
      continue;
    }
    if (!e.clock2 || !(*e.clock2 > e.clock)) {
      reject(Rejection::invalid_travel_time);
      continue;
    }

    const bool mirrored = e.x < 0.5 * cfg.rink_length;
    auto normalize = [&](Vec2 p) { return mirrored ? mirror_to_right_half(p, cfg) : p; };
    const Vec2 origin = normalize({e.x, e.y});
    const Vec2 target = normalize({*e.x2, *e.y2});
    if (origin.x < cfg.blue_line_x) {
      reject(Rejection::outside_offensive_zone, fmt::format("x = {:.1f}", origin.x));
      continue;
    }

    const auto period_frames = by_clock.find(e.period);
    if (period_frames == by_clock.end()) {
      reject(Rejection::no_tracking_frame, "no frames in period");
      continue;
    }
    const auto& list = period_frames->second;
    auto it = std::upper_bound(list.begin(), list.end(), std::make_pair(e.clock, std::numeric_limits<long>::max()));
    if (it == list.begin() || e.clock - std::prev(it)->first > cfg.max_frame_gap) {
      reject(Rejection::no_tracking_frame, "no frame within gap before event");
      continue;
    }
    const auto [frame_clock, frame_id] = *std::prev(it);
    const auto& recs = frames.at({e.period, frame_id});

    std::set<std::string> teams;
    for (const auto* r : recs) teams.insert(r->team);
    if (teams.size() < 2) {
      reject(Rejection::one_team_only, teams.empty() ? "" : *teams.begin());
      continue;
    }

    Snapshot snap;
    snap.frame_time = frame_clock;
    snap.puck = cfg.clamp_to_rink(origin);
    snap.passer_id = make_player_id(e.team, e.player);
    const auto prev_frame = frames.find({e.period, frame_id - 1});
    bool any_goalie_flag = false;
    for (const auto* r : recs) {
      PlayerState p;
      p.id = make_player_id(r->team, std::to_string(r->jersey));
      if (snap.find(p.id) != nullptr) continue;  // duplicate track in one frame
      p.team = r->team == e.team ? Team::offence : Team::defence;
      p.position = cfg.clamp_to_rink(normalize({r->x, r->y}));

      std::optional<Vec2> prev;
      if (prev_frame != frames.end()) {
        for (const auto* q : prev_frame->second)
          if (q->team == r->team && q->jersey == r->jersey) prev = Vec2{q->x, q->y};
      }
      Vec2 v = estimate_velocity(prev, {r->x, r->y}, cfg.frame_rate);
      if (mirrored) v = v * -1.0;
      const double limit = 1.5 * cfg.v_max;
      if (v.norm() > limit) {
        v = v * (limit / v.norm());
        ++out.report.velocity_clamps;
      }
      p.velocity = v;
      if (r->goalie) {
        any_goalie_flag = true;
        p.is_goalie = *r->goalie;
      }
      snap.players.push_back(std::move(p));
    }
    if (!any_goalie_flag) {
      PlayerState* keeper = nullptr;
      double best = std::numeric_limits<double>::infinity();
      for (auto& p : snap.players) {
        if (p.team != Team::defence) continue;
        const double d = distance(p.position, cfg.goal());
        if (d < best) {
          best = d;
          keeper = &p;
        }
      }
      if (keeper != nullptr) keeper->is_goalie = true;
    }

    if (snap.find(snap.passer_id) == nullptr) {
      snap.players.push_back({snap.passer_id, Team::offence, snap.puck, {}, false});
      ++out.report.injected_players;
    }
    const PlayerId receiver = make_player_id(e.team, *e.player_2);
    if (snap.find(receiver) == nullptr) {
      snap.players.push_back({receiver, Team::offence, cfg.clamp_to_rink(target), {}, false});
      ++out.report.injected_players;
    }

    if (snap.count(Team::offence) < 2 || snap.count(Team::defence) < 2) {
      reject(Rejection::too_few_players, fmt::format("{} offence, {} defence", snap.count(Team::offence),
                                                     snap.count(Team::defence)));
      continue;
    }

    const Vec2 delta = target - origin;
    if (delta.norm() < 1e-6) {
      reject(Rejection::zero_length_pass);
      continue;
    }
    if (auto problem = check_snapshot(snap, cfg)) {
      reject(Rejection::invalid_snapshot, *problem);
      continue;
    }

    PassPlay play;
    play.id = key;
    play.game = game;
    play.period = e.period;
    play.clock = e.clock;
    play.snapshot = std::move(snap);
    play.actual_angle = wrap_angle(std::atan2(delta.y, delta.x));
    play.actual_speed = infer_pass_speed(delta.norm(), *e.clock2 - e.clock, cfg);
    play.receiver_id = receiver;
    play.completed = lower(e.event_type) == "play";
    out.plays.push_back(std::move(play));
    ++out.report.accepted;
  }
  return out;
}

}  // namespace passeval
