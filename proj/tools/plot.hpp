#pragma once

#include <span>
#include <string>

#include "pmrank/metrics.hpp"

namespace pmrank::cli {

// Minimal SVG line chart of metric value against comparison budget.
std::string convergence_svg(std::span<const MetricCurve> curves);

}  // namespace pmrank::cli
