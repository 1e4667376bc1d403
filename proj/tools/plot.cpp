#include "plot.hpp"

#include <algorithm>
#include <limits>

#include "pmrank/csv_io.hpp"

namespace pmrank::cli {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 60, kRight = 170, kTop = 20, kBottom = 50;

const char* color_for(Method m) {
    switch (m) {
        case Method::lsq: return "#1f77b4";
        case Method::elo: return "#d62728";
        case Method::winrate: return "#2ca02c";
    }
    return "#000000";
}

}  // namespace

std::string convergence_svg(std::span<const MetricCurve> curves) {
    std::size_t max_budget = 1;
    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
    for (const auto& c : curves) {
        if (!c.budgets.empty()) max_budget = std::max(max_budget, c.budgets.back());
        for (double v : c.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (lo > hi) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-6) lo -= 0.05, hi += 0.05;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double b) { return kLeft + plot_w * b / static_cast<double>(max_budget); };
    auto py = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(kWidth, 0) +
                      "\" height=\"" + format_fixed(kHeight, 0) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + format_fixed(kLeft, 1) + "\" y=\"" + format_fixed(kTop, 1) + "\" width=\"" +
           format_fixed(plot_w, 1) + "\" height=\"" + format_fixed(plot_h, 1) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        const double b = static_cast<double>(max_budget) * t / 4.0;
        svg += "<text x=\"" + format_fixed(kLeft - 6, 1) + "\" y=\"" + format_fixed(py(v) + 4, 1) +
               "\" text-anchor=\"end\">" + format_fixed(v, 3) + "</text>\n";
        svg += "<text x=\"" + format_fixed(px(b), 1) + "\" y=\"" + format_fixed(kHeight - kBottom + 16, 1) +
               "\" text-anchor=\"middle\">" + format_fixed(b, 0) + "</text>\n";
    }
    svg += "<text x=\"" + format_fixed(kLeft + plot_w / 2, 1) + "\" y=\"" + format_fixed(kHeight - 12, 1) +
           "\" text-anchor=\"middle\">comparisons</text>\n";

    double legend_y = kTop + 10;
    for (const auto& c : curves) {
        const std::string dash = c.metric == Metric::plcc ? " stroke-dasharray=\"5,3\"" : "";
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color_for(c.method)) + "\" stroke-width=\"1.5\"" +
               dash + " points=\"";
        for (std::size_t i = 0; i < c.budgets.size(); ++i) {
            if (i) svg += ' ';
            svg += format_fixed(px(static_cast<double>(c.budgets[i])), 1) + "," + format_fixed(py(c.values[i]), 1);
        }
        svg += "\"/>\n";
        const double lx = kWidth - kRight + 12;
        svg += "<line x1=\"" + format_fixed(lx, 1) + "\" y1=\"" + format_fixed(legend_y, 1) + "\" x2=\"" +
               format_fixed(lx + 24, 1) + "\" y2=\"" + format_fixed(legend_y, 1) + "\" stroke=\"" +
               color_for(c.method) + "\" stroke-width=\"1.5\"" + dash + "/>\n";
        svg += "<text x=\"" + format_fixed(lx + 30, 1) + "\" y=\"" + format_fixed(legend_y + 4, 1) + "\">" +
               std::string(to_string(c.method)) + " " + std::string(to_string(c.metric)) + "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace pmrank::cli
