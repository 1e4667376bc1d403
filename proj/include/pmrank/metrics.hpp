#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pmrank/aggregation.hpp"

namespace pmrank {

enum class Metric { srcc, plcc };

std::string_view to_string(Metric metric);

inline constexpr double kDefaultStabilityTolerance = 0.005;

// One metric tracked over increasing comparison budgets.
struct MetricCurve {
    std::vector<std::size_t> budgets;  // strictly increasing
    std::vector<double> values;
    Metric metric = Metric::srcc;
    Method method = Method::lsq;
};

// Average ranks (1-based); tied values receive the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of raw values. Throws UndefinedCorrelation for fewer
// than two items or constant input, InvalidInput for mismatched lengths or
// non-finite values.
double plcc(std::span<const double> predicted, std::span<const double> ground_truth);

// Spearman correlation: Pearson on average ranks.
double srcc(std::span<const double> predicted, std::span<const double> ground_truth);

double correlation(Metric metric, std::span<const double> predicted, std::span<const double> ground_truth);

// Smallest budget from which every later value stays within tolerance of the
// final value. Throws InvalidInput on an empty curve or tolerance <= 0.
std::size_t stability_point(const MetricCurve& curve, double tolerance = kDefaultStabilityTolerance);

}  // namespace pmrank
