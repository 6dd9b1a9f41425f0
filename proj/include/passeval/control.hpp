#pragma once

#include <vector>

#include "passeval/config.hpp"
#include "passeval/types.hpp"

namespace passeval {

// Offensive share of control of a location at the puck's arrival time:
// 0 is full defensive control, 1 full offensive control.
double rink_control(const Snapshot& snap, const Triplet& at, const Config& cfg);

// Same, from precomputed arrival times; `labels` holds +1/-1 per player.
double rink_control_from_times(const std::vector<double>& reach_times, const std::vector<double>& labels,
                               double puck_time, const Config& cfg);

// Row-major grid of cell-center values covering the rink rectangle.
struct ControlGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double cell_x = 0.0;  // ft
  double cell_y = 0.0;  // ft
  double t = 0.0;
  std::vector<double> values;

  double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
  Vec2 cell_center(std::size_t ix, std::size_t iy) const {
    return {(static_cast<double>(ix) + 0.5) * cell_x, (static_cast<double>(iy) + 0.5) * cell_y};
  }
};

// Empty grid geometry: round(length/resolution) x round(width/resolution) cells.
ControlGrid make_grid(double resolution, double t, const Config& cfg);

ControlGrid control_grid(const Snapshot& snap, double resolution, double t, const Config& cfg);

}  // namespace passeval
