#include "passeval/types.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "passeval/config.hpp"

namespace passeval {

Team team_from_string(const std::string& s) {
  if (s == "offence") return Team::offence;
  if (s == "defence") return Team::defence;
  throw std::invalid_argument(fmt::format("unknown team \"{}\"", s));
}

const PlayerState* Snapshot::find(const PlayerId& id) const {
  auto it = std::find_if(players.begin(), players.end(), [&](const PlayerState& p) { return p.id == id; });
  return it == players.end() ? nullptr : &*it;
}

const PlayerState& Snapshot::passer() const {
  const PlayerState* p = find(passer_id);
  if (p == nullptr) throw SnapshotError(fmt::format("passer {} not in snapshot", passer_id));
  return *p;
}

std::size_t Snapshot::count(Team team) const {
  return static_cast<std::size_t>(
      std::count_if(players.begin(), players.end(), [&](const PlayerState& p) { return p.team == team; }));
}

std::optional<std::string> check_snapshot(const Snapshot& snap, const Config& cfg, SnapshotChecks checks) {
  const auto passers = std::count_if(snap.players.begin(), snap.players.end(),
                                     [&](const PlayerState& p) { return p.id == snap.passer_id; });
  if (passers != 1) return fmt::format("expected exactly one passer \"{}\", found {}", snap.passer_id, passers);
  if (!std::isfinite(snap.puck.x) || !std::isfinite(snap.puck.y) || !cfg.inside_rink(snap.puck))
    return std::string("puck outside rink");
  for (const auto& p : snap.players) {
    if (!std::isfinite(p.position.x) || !std::isfinite(p.position.y) || !std::isfinite(p.velocity.x) ||
        !std::isfinite(p.velocity.y))
      return fmt::format("player {} has non-finite state", p.id);
    if (!cfg.inside_rink(p.position)) return fmt::format("player {} outside rink", p.id);
  }
  for (std::size_t i = 0; i < snap.players.size(); ++i)
    for (std::size_t j = i + 1; j < snap.players.size(); ++j)
      if (snap.players[i].id == snap.players[j].id) return fmt::format("duplicate player id {}", snap.players[i].id);
  if (checks.team_counts) {
    if (snap.count(Team::offence) < 2 || snap.count(Team::defence) < 2)
      return std::string("fewer than two players on a team");
  }
  return std::nullopt;
}

}  // namespace passeval
