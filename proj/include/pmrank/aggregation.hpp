#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmrank/graph_sampler.hpp"

namespace pmrank {

// One queried pair with its signed predicted margin, convention s_left - s_right.
struct ComparisonEdgeObservation {
    VertexId left = 0;
    VertexId right = 0;
    double margin = 0.0;
};

enum class Method { lsq, elo, winrate };

std::string_view to_string(Method method);
// Throws InvalidInput for anything other than "lsq", "elo" or "winrate".
Method parse_method(std::string_view name);

struct Leaderboard {
    std::vector<double> scores;
    std::vector<int> ranks;  // dense, 1 = best
    Method method = Method::lsq;
    std::size_t n_components = 0;
    // Machine-readable notes, e.g. "disconnected:3" or "margin_out_of_range:2".
    std::vector<std::string> warnings;
};

struct EloConfig {
    double initial_rating = 1500.0;
    double k_factor = 32.0;
    double scale = 400.0;
    double draw_threshold = 0.2;

    void validate() const;
};

inline constexpr double kDefaultDrawThreshold = 0.2;

// Above this component size the LSQ solve switches from the dense bordered
// system to projected conjugate gradient.
inline constexpr std::size_t kDenseSolveLimit = 2048;

struct LsqOptions {
    std::size_t dense_limit = kDenseSolveLimit;
    double cg_relative_tolerance = 1e-10;
    std::size_t cg_max_iterations_per_vertex = 10;
};

// Zero-mean (per connected component) least-squares scores from signed margins.
Leaderboard lsq_recover(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                        const LsqOptions& options = {});

// Outcome of one comparison from the left member's point of view: 1 win,
// 0.5 draw, 0 loss. |margin| < threshold (or margin == 0) is a draw.
double match_outcome(double margin, double draw_threshold);

Leaderboard winrate_rank(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                         double draw_threshold = kDefaultDrawThreshold);

// Sequential Elo over edges in the given order.
Leaderboard elo_rank(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                     const EloConfig& config = {});

struct AggregatorConfig {
    EloConfig elo;
    double draw_threshold = kDefaultDrawThreshold;
    LsqOptions lsq;
};

Leaderboard aggregate(Method method, std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                      const AggregatorConfig& config = {});

// Dense descending ranks; equal scores share a rank.
std::vector<int> scores_to_ranks(std::span<const double> scores);

}  // namespace pmrank
