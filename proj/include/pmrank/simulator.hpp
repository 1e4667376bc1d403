#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pmrank/aggregation.hpp"
#include "pmrank/graph_sampler.hpp"
#include "pmrank/metrics.hpp"
#include "pmrank/rng.hpp"

namespace pmrank {

// Ground-truth quality scores, one per video.
struct MosTable {
    std::vector<std::string> ids;
    std::vector<double> mos;

    std::size_t size() const noexcept { return mos.size(); }
    // Throws InvalidInput on duplicate ids, non-finite scores, or (when
    // check_scale is set) scores outside [1, 5].
    void validate(bool check_scale) const;
};

// Uniform scores on [1, 5]; ids are "v0", "v1", ...
MosTable synthetic_mos(std::size_t n, std::uint64_t seed);

struct NoiseModel {
    double sigma = 0.0;
    double flip_prob = 0.0;
    double clamp_min = -4.0;
    double clamp_max = 4.0;

    void validate() const;
};

inline double true_margin(double mos_i, double mos_j) { return mos_i - mos_j; }

// clamp(flip(margin + N(0, sigma^2))). Always consumes the same number of
// draws from the stream, whatever the parameters.
double predict_margin(double margin, const NoiseModel& noise, RandomStream& stream);

enum class RatingSource { lsq, elo };

struct ExperimentOptions {
    double budget_multiplier = 5.0;
    std::size_t batch_size = 64;
    std::vector<Method> methods{Method::lsq, Method::elo, Method::winrate};
    std::vector<std::uint64_t> seeds{0};
    double tolerance = kDefaultStabilityTolerance;
    SamplerOptions sampler;
    AggregatorConfig aggregators;
    RatingSource rating_source = RatingSource::lsq;
    // 0 uses the hardware concurrency.
    std::size_t threads = 1;

    void validate() const;
};

// ceil(multiplier * n), tolerant of representation error in the product.
std::size_t total_budget(double budget_multiplier, std::size_t n);

struct StabilityEntry {
    Method method = Method::lsq;
    Metric metric = Metric::srcc;
    std::size_t stability_budget = 0;
    double final_value = 0.0;
};

struct SeedRun {
    std::uint64_t seed = 0;
    std::vector<MetricCurve> curves;       // one per (method, metric), methods outer
    std::vector<StabilityEntry> stability;  // parallel to curves
    std::vector<VertexPair> edges;          // sampled edge stream
    std::vector<double> margins;            // predicted margin per edge
    std::vector<std::size_t> degrees;
};

struct SummaryEntry {
    Method method = Method::lsq;
    Metric metric = Metric::srcc;
    double median_stability_budget = 0.0;
    double median_final_value = 0.0;
};

struct ConvergenceReport {
    std::vector<SeedRun> runs;  // in seed order
    std::vector<SummaryEntry> summary;
    std::size_t total_budget = 0;
    std::size_t n_vertices = 0;

    // Median over seeds of each curve value at each budget. Budgets coincide
    // across seeds because the batch schedule depends only on N and options.
    std::vector<MetricCurve> median_curves() const;
    const SummaryEntry& entry(Method method, Metric metric) const;
};

ConvergenceReport run_convergence_experiment(const MosTable& mos, const NoiseModel& noise,
                                             const ExperimentOptions& options);

double median(std::vector<double> values);

}  // namespace pmrank
