#pragma once

// Deterministic renders checked against files under tests/golden.
// Set PASSEVAL_UPDATE_GOLDEN=1 to rewrite them.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "passeval/svg.hpp"

namespace testing {

using passeval::ControlGrid;
using passeval::PassSurface;
namespace svg = passeval::svg;

struct GoldenRender {
  std::string name;
  std::string svg;
};

inline std::vector<GoldenRender> golden_renders() {
  const Config cfg;
  const auto f = two_on_one();
  const ControlGrid grid = control_grid(f.snap, 5.0, 0.0, cfg);
  const std::vector<double> speeds{45, 85};
  const PassSurface surf = pass_surface(f.snap, speeds, cfg);
  return {
      {"control.svg", svg::render_heatmap(grid, &f.snap, {"Rink control", true, 1.0}, cfg)},
      {"expected_polar.svg", svg::render_polar(surf, f.snap, svg::SurfaceMetric::expected, "Expected pass value", cfg)},
  };
}

inline std::filesystem::path golden_dir() { return std::filesystem::path(PASSEVAL_SOURCE_DIR) / "tests" / "golden"; }

// Empty string when the render matches; otherwise what went wrong.
inline std::string check_golden(const GoldenRender& r) {
  const auto path = golden_dir() / r.name;
  if (std::getenv("PASSEVAL_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << r.svg;
    return {};
  }
  if (!std::filesystem::exists(path)) return "missing " + path.string();
  if (read_file(path) != r.svg) return r.name + " differs from golden";
  return {};
}

}  // namespace testing
