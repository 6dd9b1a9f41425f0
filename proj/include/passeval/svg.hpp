#pragma once

#include <string>
#include <vector>

#include "passeval/analysis.hpp"
#include "passeval/config.hpp"
#include "passeval/control.hpp"
#include "passeval/metrics.hpp"

namespace passeval::svg {

// Diverging blue (0) -> white (0.5) -> red (1) scale; inputs are clamped.
std::string color(double value);

struct HeatmapStyle {
  std::string title;
  bool invert = false;  // color 1 - value
  double max_value = 1.0;  // values are divided by this before coloring
};

// Rink outline with a cell heatmap and the players of `snap` overlaid.
std::string render_heatmap(const ControlGrid& grid, const Snapshot* snap, const HeatmapStyle& style,
                           const Config& cfg);

enum class SurfaceMetric { success, best_case, expected };

// Wedges around the puck, one ring per speed (slowest innermost).
std::string render_polar(const PassSurface& surface, const Snapshot& snap, SurfaceMetric metric,
                         const std::string& title, const Config& cfg);

// Two panels: success vs best-case (decision) and relative vs best outcome.
std::string render_summary(const std::vector<PlayerSummary>& decision, const std::vector<PlayerSummary>& outcome);

}  // namespace passeval::svg
