#pragma once

#include <span>
#include <string>

#include "io.hpp"

namespace permq::cli {

/// Self-contained SVG with one Q (dashed) and one P (solid) curve per
/// series on shared [0, 1] x [0, 1] axes, plus a legend. Output depends only
/// on the inputs.
std::string render_comparison_svg(int n, std::span<const Series> series);

} // namespace permq::cli
