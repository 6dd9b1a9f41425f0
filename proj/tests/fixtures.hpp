#pragma once

// Hand-built frames shared by the unit and acceptance tests.

#include <cmath>

#include "support.hpp"

namespace testing {

// Passer on the half wall, one open teammate in the slot, one teammate
// across the zone with a defender standing on the lane to her.
struct TwoOnOne {
  Snapshot snap;
  Vec2 open_receiver;
  Vec2 blocked_receiver;
  double open_bearing;
  double blocked_bearing;
};

inline TwoOnOne two_on_one() {
  TwoOnOne f;
  const Vec2 passer{140, 20};
  f.open_receiver = {172, 38};
  f.blocked_receiver = {140, 70};
  f.snap = snapshot({player("passer", Team::offence, passer), player("open", Team::offence, f.open_receiver),
                     player("blocked", Team::offence, f.blocked_receiver),
                     player("defender", Team::defence, {140, 45})},
                    passer, "passer");
  f.open_bearing = std::atan2(f.open_receiver.y - passer.y, f.open_receiver.x - passer.x);
  f.blocked_bearing = std::atan2(f.blocked_receiver.y - passer.y, f.blocked_receiver.x - passer.x);
  return f;
}

}  // namespace testing
