#include "pmrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pmrank/errors.hpp"

namespace pmrank {

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw InvalidInput("correlation inputs differ in length: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
    }
    if (a.size() < 2) throw UndefinedCorrelation("correlation needs at least two items");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
            throw InvalidInput("non-finite value at index " + std::to_string(i));
        }
    }
}

double pearson_unchecked(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelation("correlation of a constant vector is undefined");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

std::string_view to_string(Metric metric) {
    return metric == Metric::srcc ? "srcc" : "plcc";
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size());
    for (std::size_t start = 0; start < order.size();) {
        std::size_t stop = start + 1;
        while (stop < order.size() && values[order[stop]] == values[order[start]]) ++stop;
        // positions start..stop-1 are 1-based start+1..stop
        const double mean_rank = 0.5 * static_cast<double>(start + 1 + stop);
        for (std::size_t t = start; t < stop; ++t) ranks[order[t]] = mean_rank;
        start = stop;
    }
    return ranks;
}

double plcc(std::span<const double> predicted, std::span<const double> ground_truth) {
    check_pair(predicted, ground_truth);
    return pearson_unchecked(predicted, ground_truth);
}

double srcc(std::span<const double> predicted, std::span<const double> ground_truth) {
    check_pair(predicted, ground_truth);
    const auto rp = average_ranks(predicted);
    const auto rt = average_ranks(ground_truth);
    return pearson_unchecked(rp, rt);
}

double correlation(Metric metric, std::span<const double> predicted, std::span<const double> ground_truth) {
    return metric == Metric::srcc ? srcc(predicted, ground_truth) : plcc(predicted, ground_truth);
}

std::size_t stability_point(const MetricCurve& curve, double tolerance) {
    if (curve.values.empty()) throw InvalidInput("stability_point of an empty curve");
    if (curve.values.size() != curve.budgets.size()) throw InvalidInput("curve budgets and values differ in length");
    if (!(tolerance > 0.0)) throw InvalidInput("stability tolerance must be > 0");

    const double final_value = curve.values.back();
    std::size_t first_stable = curve.values.size() - 1;
    while (first_stable > 0 && std::abs(curve.values[first_stable - 1] - final_value) <= tolerance) --first_stable;
    return curve.budgets[first_stable];
}

}  // namespace pmrank
