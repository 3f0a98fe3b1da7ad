#include "svg.hpp"

#include <fmt/format.h>

namespace permq::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

double x_of(double r) { return kLeft + r * kPlotW; }
double y_of(double p) { return kTop + (1.0 - p) * kPlotH; }

const char* colour(Family family) {
  switch (family) {
  case Family::A:
    return "#1f77b4";
  case Family::B:
    return "#d62728";
  case Family::C:
    return "#2ca02c";
  }
  return "#000000";
}

std::string polyline(const std::vector<GridRow>& rows, bool approx, Family family) {
  std::string points;
  for (const auto& row : rows) {
    const double value = approx ? row.q : row.p;
    points += fmt::format("{}{:.2f},{:.2f}", points.empty() ? "" : " ", x_of(row.r), y_of(value));
  }
  return fmt::format(
      "  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n",
      colour(family), approx ? " stroke-dasharray=\"6,4\"" : "", points);
}

} // namespace

std::string render_comparison_svg(int n, std::span<const Series> series) {
  std::string svg;
  svg += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
                     "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
                     kWidth, kHeight, kWidth, kHeight);
  svg += fmt::format("  <rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                     kWidth, kHeight);
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
                     "Q(r) and P(r), n = {}</text>\n",
                     kLeft + kPlotW / 2, n);

  // Axes and ticks.
  svg += fmt::format("  <rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
                     "fill=\"none\" stroke=\"black\"/>\n",
                     kLeft, kTop, kPlotW, kPlotH);
  for (int t = 0; t <= 5; ++t) {
    const double v = t / 5.0;
    svg += fmt::format("  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
                       "stroke=\"black\"/>\n",
                       x_of(v), kTop + kPlotH, kTop + kPlotH + 5);
    svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:.1f}</text>\n",
                       x_of(v), kTop + kPlotH + 20, v);
    svg += fmt::format("  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
                       "stroke=\"black\"/>\n",
                       kLeft - 5, y_of(v), kLeft);
    svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.1f}</text>\n",
                       kLeft - 8, y_of(v) + 4, v);
  }
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">r</text>\n",
                     kLeft + kPlotW / 2, kHeight - 15);
  svg += fmt::format("  <text x=\"20\" y=\"{0:.2f}\" text-anchor=\"middle\" "
                     "transform=\"rotate(-90 20 {0:.2f})\">probability</text>\n",
                     kTop + kPlotH / 2);

  for (const auto& s : series) {
    svg += polyline(s.rows, true, s.family);
    svg += polyline(s.rows, false, s.family);
  }

  // Legend.
  double y = kTop + 10;
  const double lx = kLeft + kPlotW + 20;
  for (const auto& s : series) {
    for (bool approx : {true, false}) {
      svg += fmt::format("  <line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
                         "stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
                         lx, y, lx + 30, y, colour(s.family),
                         approx ? " stroke-dasharray=\"6,4\"" : "");
      svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\">{} {}, per = {}</text>\n", lx + 38,
                         y + 4, approx ? 'Q' : 'P', to_char(s.family), target_value(s.family));
      y += 20;
    }
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace permq::cli
