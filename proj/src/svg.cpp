#include "passeval/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace passeval::svg {

namespace {

constexpr double kScale = 4.0;  // px per ft
constexpr double kMargin = 20.0;
constexpr double kTitleBand = 24.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct RinkCanvas {
  const Config& cfg;

  double px(double x) const { return kMargin + x * kScale; }
  double py(double y) const { return kTitleBand + kMargin + (cfg.rink_width - y) * kScale; }
  double width() const { return 2.0 * kMargin + cfg.rink_length * kScale; }
  double height() const { return kTitleBand + 2.0 * kMargin + cfg.rink_width * kScale; }

  std::string open(const std::string& title) const {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n"
        "<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" style=\"fill:#ffffff\"/>\n"
        "<text x=\"{:.1f}\" y=\"18\" style=\"font-family:sans-serif;font-size:14px;fill:#222222\">{}</text>\n",
        width(), height(), width(), height(), width(), height(), kMargin, escape(title));
  }

  std::string clip() const {
    const double corner = std::min(28.0, 0.5 * std::min(cfg.rink_length, cfg.rink_width));
    return fmt::format(
        "<defs><clipPath id=\"rink\"><rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" rx=\"{:.2f}\"/>"
        "</clipPath></defs>\n",
        px(0), py(cfg.rink_width), cfg.rink_length * kScale, cfg.rink_width * kScale, corner * kScale);
  }

  std::string markings() const {
    const double corner = std::min(28.0, 0.5 * std::min(cfg.rink_length, cfg.rink_width));
    std::string out;
    auto vline = [&](double x, const char* colour, double w) {
      out += fmt::format(
          "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" style=\"stroke:{};stroke-width:{:.1f}\" "
          "clip-path=\"url(#rink)\"/>\n",
          px(x), py(cfg.rink_width), px(x), py(0), colour, w);
    };
    vline(0.5 * cfg.rink_length, "#cc0000", 2.0);
    vline(cfg.blue_line_x, "#0033aa", 3.0);
    vline(cfg.rink_length - cfg.blue_line_x, "#0033aa", 3.0);
    vline(cfg.goal_x, "#cc0000", 1.0);
    vline(cfg.rink_length - cfg.goal_x, "#cc0000", 1.0);
    for (double gx : {cfg.goal_x, cfg.rink_length - cfg.goal_x})
      out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" style=\"fill:none;stroke:#cc0000\"/>\n",
                         px(gx), py(cfg.goal_y), 3.0 * kScale);
    out += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" rx=\"{:.2f}\" "
        "style=\"fill:none;stroke:#000000;stroke-width:2\"/>\n",
        px(0), py(cfg.rink_width), cfg.rink_length * kScale, cfg.rink_width * kScale, corner * kScale);
    return out;
  }

  std::string players(const Snapshot& snap) const {
    std::string out;
    for (const auto& p : snap.players) {
      const char* fill = p.team == Team::offence ? "#1f4e9c" : "#b2182b";
      const Vec2 tip = p.position + p.velocity * 0.5;
      out += fmt::format(
          "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" style=\"stroke:{};stroke-width:1.5\"/>\n",
          px(p.position.x), py(p.position.y), px(tip.x), py(tip.y), fill);
      out += fmt::format(
          "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" style=\"fill:{};stroke:{};stroke-width:{}\"/>\n",
          px(p.position.x), py(p.position.y), 1.6 * kScale, fill,
          p.id == snap.passer_id ? "#000000" : (p.is_goalie ? "#ffcc00" : "#ffffff"), p.id == snap.passer_id ? 2 : 1);
    }
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" style=\"fill:#000000\"/>\n", px(snap.puck.x),
                       py(snap.puck.y), 0.8 * kScale);
    return out;
  }
};

}  // namespace

std::string color(double value) {
  const double v = std::isfinite(value) ? std::clamp(value, 0.0, 1.0) : 0.0;
  // blue #2166ac, white, red #b2182b
  auto mix = [](double a, double b, double t) { return static_cast<int>(std::lround(a + (b - a) * t)); };
  int r, g, b;
  if (v < 0.5) {
    const double t = v / 0.5;
    r = mix(0x21, 0xff, t);
    g = mix(0x66, 0xff, t);
    b = mix(0xac, 0xff, t);
  } else {
    const double t = (v - 0.5) / 0.5;
    r = mix(0xff, 0xb2, t);
    g = mix(0xff, 0x18, t);
    b = mix(0xff, 0x2b, t);
  }
  return fmt::format("#{:02x}{:02x}{:02x}", r, g, b);
}

std::string render_heatmap(const ControlGrid& grid, const Snapshot* snap, const HeatmapStyle& style,
                           const Config& cfg) {
  const RinkCanvas canvas{cfg};
  std::string out = canvas.open(style.title);
  out += canvas.clip();
  out += "<g clip-path=\"url(#rink)\">\n";
  const double norm = style.max_value > 0.0 ? style.max_value : 1.0;
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      double v = grid.at(ix, iy) / norm;
      if (style.invert) v = 1.0 - v;
      const double x0 = static_cast<double>(ix) * grid.cell_x;
      const double y1 = static_cast<double>(iy + 1) * grid.cell_y;
      out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" style=\"fill:{}\"/>\n",
                         canvas.px(x0), canvas.py(y1), grid.cell_x * kScale, grid.cell_y * kScale, color(v));
    }
  out += "</g>\n";
  out += canvas.markings();
  if (snap != nullptr) out += canvas.players(*snap);
  out += "</svg>\n";
  return out;
}

std::string render_polar(const PassSurface& surface, const Snapshot& snap, SurfaceMetric metric,
                         const std::string& title, const Config& cfg) {
  auto value_of = [&](const PassCell& c) {
    switch (metric) {
      case SurfaceMetric::success: return c.success;
      case SurfaceMetric::best_case: return c.best_case;
      case SurfaceMetric::expected: return c.expected;
    }
    return 0.0;
  };
  double peak = 0.0;
  for (const auto& c : surface.cells) peak = std::max(peak, value_of(c));
  const double norm = peak > 0.0 ? peak : 1.0;

  const RinkCanvas canvas{cfg};
  std::string out = canvas.open(fmt::format("{} (max {:.4f})", title, peak));
  out += canvas.markings();
  const double inner = 4.0;
  const double ring = 5.0;
  const std::size_t na = surface.angles.size();
  const double half = na > 0 ? std::numbers::pi / static_cast<double>(na) : 0.0;
  for (std::size_t s = 0; s < surface.speeds.size(); ++s) {
    const double r0 = inner + ring * static_cast<double>(s);
    const double r1 = r0 + ring;
    for (std::size_t a = 0; a < na; ++a) {
      const double angle = surface.angles[a];
      const Vec2 p0 = snap.puck + unit_vector(angle - half) * r0;
      const Vec2 p1 = snap.puck + unit_vector(angle - half) * r1;
      const Vec2 p2 = snap.puck + unit_vector(angle + half) * r1;
      const Vec2 p3 = snap.puck + unit_vector(angle + half) * r0;
      out += fmt::format(
          "<polygon points=\"{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}\" style=\"fill:{};stroke:none\"/>\n",
          canvas.px(p0.x), canvas.py(p0.y), canvas.px(p1.x), canvas.py(p1.y), canvas.px(p2.x), canvas.py(p2.y),
          canvas.px(p3.x), canvas.py(p3.y), color(0.5 + 0.5 * value_of(surface.at(s, a)) / norm));
    }
  }
  out += canvas.players(snap);
  out += "</svg>\n";
  return out;
}

std::string render_summary(const std::vector<PlayerSummary>& decision, const std::vector<PlayerSummary>& outcome) {
  constexpr double panel = 360.0;
  constexpr double pad = 50.0;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0:.0f}\" height=\"{1:.0f}\" style=\"fill:#ffffff\"/>\n",
      2.0 * (panel + 2.0 * pad), panel + 2.0 * pad);

  struct Axis {
    const char* x_label;
    const char* y_label;
    double (*x)(const PlayerSummary&);
    double (*y)(const PlayerSummary&);
  };
  const Axis axes[2] = {
      {"avg success probability", "avg best case pass value",
       [](const PlayerSummary& s) { return s.avg_success_probability; },
       [](const PlayerSummary& s) { return s.avg_best_case_value; }},
      {"avg relative outcome", "avg best outcome", [](const PlayerSummary& s) { return s.avg_relative_outcome; },
       [](const PlayerSummary& s) { return s.avg_best_outcome; }},
  };
  const std::vector<PlayerSummary>* cohorts[2] = {&decision, &outcome};
  const char* shade[4] = {"#d9f0d3", "#fff7bc", "#e7d4e8", "#fddbc7"};  // best, conservative, aggressive, worst

  for (int k = 0; k < 2; ++k) {
    const auto& cohort = *cohorts[k];
    const Axis& ax = axes[k];
    const double ox = pad + k * (panel + 2.0 * pad);
    const double oy = pad;
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    if (!cohort.empty()) {
      x_lo = y_lo = 1e300;
      x_hi = y_hi = -1e300;
      for (const auto& s : cohort) {
        x_lo = std::min(x_lo, ax.x(s));
        x_hi = std::max(x_hi, ax.x(s));
        y_lo = std::min(y_lo, ax.y(s));
        y_hi = std::max(y_hi, ax.y(s));
      }
      const double xp = std::max(0.1 * (x_hi - x_lo), 1e-3);
      const double yp = std::max(0.1 * (y_hi - y_lo), 1e-3);
      x_lo -= xp;
      x_hi += xp;
      y_lo -= yp;
      y_hi += yp;
    }
    auto sx = [&](double v) { return ox + (v - x_lo) / (x_hi - x_lo) * panel; };
    auto sy = [&](double v) { return oy + panel - (v - y_lo) / (y_hi - y_lo) * panel; };

    if (!cohort.empty()) {
      std::vector<double> xs, ys;
      for (const auto& s : cohort) {
        xs.push_back(ax.x(s));
        ys.push_back(ax.y(s));
      }
      const double mx = sx(median(xs));
      const double my = sy(median(ys));
      const double rects[4][4] = {{mx, oy, ox + panel - mx, my - oy},
                                  {mx, my, ox + panel - mx, oy + panel - my},
                                  {ox, oy, mx - ox, my - oy},
                                  {ox, my, mx - ox, oy + panel - my}};
      for (int q = 0; q < 4; ++q)
        out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" style=\"fill:{}\"/>\n",
                           rects[q][0], rects[q][1], rects[q][2], rects[q][3], shade[q]);
    }
    out += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" style=\"fill:none;stroke:#000000\"/>\n", ox,
        oy, panel, panel);
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" style=\"font-family:sans-serif;font-size:12px;text-anchor:middle\">{}</text>\n",
        ox + panel / 2.0, oy + panel + 30.0, ax.x_label);
    out += fmt::format(
        "<text x=\"{0:.2f}\" y=\"{1:.2f}\" transform=\"rotate(-90 {0:.2f} {1:.2f})\" "
        "style=\"font-family:sans-serif;font-size:12px;text-anchor:middle\">{2}</text>\n",
        ox - 30.0, oy + panel / 2.0, ax.y_label);
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" style=\"font-family:sans-serif;font-size:10px\">{:.3f}</text>\n"
        "<text x=\"{:.2f}\" y=\"{:.2f}\" style=\"font-family:sans-serif;font-size:10px;text-anchor:end\">{:.3f}</text>\n",
        ox, oy + panel + 14.0, x_lo, ox + panel, oy + panel + 14.0, x_hi);
    for (const auto& s : cohort) {
      out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" style=\"fill:#333333\"/>\n", sx(ax.x(s)),
                         sy(ax.y(s)));
      out += fmt::format(
          "<text x=\"{:.2f}\" y=\"{:.2f}\" style=\"font-family:sans-serif;font-size:9px;fill:#333333\">{}</text>\n",
          sx(ax.x(s)) + 6.0, sy(ax.y(s)) - 4.0, escape(s.player_id));
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace passeval::svg
