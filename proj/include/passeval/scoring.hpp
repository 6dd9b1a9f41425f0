#pragma once

#include "passeval/config.hpp"
#include "passeval/types.hpp"

namespace passeval {

// Squared-exponential decay with distance from the goal center.
double raw_scoring_probability(double x, double y, const Config& cfg);

// Sine of the angle between the goal line and the segment to the goal center.
// Defined as 1 at the goal center.
double goal_line_sine(double x, double y, const Config& cfg);

// Raw value scaled by (sin + 1)/4 in front of the goal line and (sin + 1)/8
// from the goal line back.
double scoring_probability(double x, double y, const Config& cfg);

// Scoring probability weighted by rink control at the triplet.
double location_value(const Snapshot& snap, const Triplet& at, const Config& cfg);

}  // namespace passeval
