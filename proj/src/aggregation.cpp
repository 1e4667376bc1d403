#include "pmrank/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pmrank/errors.hpp"
#include "pmrank/laplacian_solver.hpp"

namespace pmrank {

namespace {

// Margins produced from a 1-5 opinion scale never exceed this in magnitude.
constexpr double kMarginBound = 4.0;

void validate_edges(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        if (e.left >= n_vertices || e.right >= n_vertices) {
            throw InvalidInput("edge " + std::to_string(k) + " references a vertex outside [0, " +
                               std::to_string(n_vertices) + ")");
        }
        if (e.left == e.right) throw InvalidInput("edge " + std::to_string(k) + " is a self-comparison");
        if (!std::isfinite(e.margin)) throw InvalidInput("edge " + std::to_string(k) + " has a non-finite margin");
    }
}

std::vector<VertexPair> as_pairs(std::span<const ComparisonEdgeObservation> edges) {
    std::vector<VertexPair> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.push_back({std::min(e.left, e.right), std::max(e.left, e.right)});
    return pairs;
}

std::vector<double> solve_component(std::span<const std::size_t> members, std::span<const std::size_t> local_of,
                                    std::span<const ComparisonEdgeObservation> edges,
                                    std::span<const std::size_t> edge_ids, const LsqOptions& options) {
    const std::size_t m = members.size();
    std::vector<double> rhs(m, 0.0);
    for (std::size_t k : edge_ids) {
        const auto& e = edges[k];
        rhs[local_of[e.left]] += e.margin;
        rhs[local_of[e.right]] -= e.margin;
    }

    std::vector<double> s;
    if (m <= options.dense_limit) {
        std::vector<double> lap(m * m, 0.0);
        for (std::size_t k : edge_ids) {
            const std::size_t i = local_of[edges[k].left];
            const std::size_t j = local_of[edges[k].right];
            lap[i * m + i] += 1.0;
            lap[j * m + j] += 1.0;
            lap[i * m + j] -= 1.0;
            lap[j * m + i] -= 1.0;
        }
        s = solve_laplacian_kkt(lap, rhs, m);
    } else {
        std::vector<std::pair<std::size_t, std::size_t>> entries;
        entries.reserve(2 * edge_ids.size());
        std::vector<double> degree(m, 0.0);
        for (std::size_t k : edge_ids) {
            const std::size_t i = local_of[edges[k].left];
            const std::size_t j = local_of[edges[k].right];
            entries.emplace_back(i, j);
            entries.emplace_back(j, i);
            degree[i] += 1.0;
            degree[j] += 1.0;
        }
        for (std::size_t i = 0; i < m; ++i) entries.emplace_back(i, i);
        std::sort(entries.begin(), entries.end());

        LaplacianCsr lap;
        lap.n = m;
        lap.row_start.assign(m + 1, 0);
        for (std::size_t t = 0; t < entries.size();) {
            const auto [i, j] = entries[t];
            std::size_t multiplicity = 0;
            while (t < entries.size() && entries[t] == std::make_pair(i, j)) {
                ++multiplicity;
                ++t;
            }
            lap.column.push_back(j);
            lap.value.push_back(i == j ? degree[i] : -static_cast<double>(multiplicity));
            ++lap.row_start[i + 1];
        }
        std::partial_sum(lap.row_start.begin(), lap.row_start.end(), lap.row_start.begin());
        auto cg = solve_laplacian_cg(lap, rhs, options.cg_relative_tolerance,
                                     options.cg_max_iterations_per_vertex * m);
        s = std::move(cg.solution);
    }

    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(m);
    for (double& v : s) v -= mean;
    return s;
}

}  // namespace

std::string_view to_string(Method method) {
    switch (method) {
        case Method::lsq: return "lsq";
        case Method::elo: return "elo";
        case Method::winrate: return "winrate";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "lsq") return Method::lsq;
    if (name == "elo") return Method::elo;
    if (name == "winrate") return Method::winrate;
    throw InvalidInput("unknown method '" + std::string(name) + "' (expected lsq, elo or winrate)");
}

void EloConfig::validate() const {
    if (!(k_factor > 0.0)) throw InvalidInput("elo k_factor must be > 0");
    if (!(scale > 0.0)) throw InvalidInput("elo scale must be > 0");
    if (!(draw_threshold >= 0.0)) throw InvalidInput("draw_threshold must be >= 0");
    if (!std::isfinite(initial_rating)) throw InvalidInput("elo initial_rating must be finite");
}

Leaderboard lsq_recover(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                        const LsqOptions& options) {
    if (n_vertices < 1) throw InvalidInput("lsq_recover needs at least one vertex");
    validate_edges(n_vertices, edges);

    const auto pairs = as_pairs(edges);
    const auto labels = connected_components(n_vertices, pairs);
    const std::size_t n_comp = component_count(labels);

    std::vector<std::vector<std::size_t>> members(n_comp);
    std::vector<std::size_t> local_of(n_vertices);
    for (std::size_t v = 0; v < n_vertices; ++v) {
        local_of[v] = members[labels[v]].size();
        members[labels[v]].push_back(v);
    }
    std::vector<std::vector<std::size_t>> edge_ids(n_comp);
    for (std::size_t k = 0; k < edges.size(); ++k) edge_ids[labels[edges[k].left]].push_back(k);

    Leaderboard board;
    board.method = Method::lsq;
    board.scores.assign(n_vertices, 0.0);
    board.n_components = n_comp;
    for (std::size_t c = 0; c < n_comp; ++c) {
        if (members[c].size() < 2) continue;
        const auto s = solve_component(members[c], local_of, edges, edge_ids[c], options);
        for (std::size_t t = 0; t < members[c].size(); ++t) board.scores[members[c][t]] = s[t];
    }

    if (n_comp > 1) board.warnings.push_back("disconnected:" + std::to_string(n_comp));
    const auto oversized = std::count_if(edges.begin(), edges.end(),
                                         [](const auto& e) { return std::abs(e.margin) > kMarginBound; });
    if (oversized > 0) board.warnings.push_back("margin_out_of_range:" + std::to_string(oversized));
    board.ranks = scores_to_ranks(board.scores);
    return board;
}

double match_outcome(double margin, double draw_threshold) {
    if (margin == 0.0 || std::abs(margin) < draw_threshold) return 0.5;
    return margin > 0.0 ? 1.0 : 0.0;
}

Leaderboard winrate_rank(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                         double draw_threshold) {
    if (!(draw_threshold >= 0.0)) throw InvalidInput("draw_threshold must be >= 0");
    validate_edges(n_vertices, edges);

    std::vector<double> points(n_vertices, 0.0);
    std::vector<std::size_t> matches(n_vertices, 0);
    for (const auto& e : edges) {
        const double s = match_outcome(e.margin, draw_threshold);
        points[e.left] += s;
        points[e.right] += 1.0 - s;
        ++matches[e.left];
        ++matches[e.right];
    }

    Leaderboard board;
    board.method = Method::winrate;
    board.scores.resize(n_vertices);
    for (std::size_t v = 0; v < n_vertices; ++v) {
        board.scores[v] = matches[v] == 0 ? 0.5 : points[v] / static_cast<double>(matches[v]);
    }
    board.n_components = component_count(connected_components(n_vertices, as_pairs(edges)));
    board.ranks = scores_to_ranks(board.scores);
    return board;
}

Leaderboard elo_rank(std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                     const EloConfig& config) {
    config.validate();
    validate_edges(n_vertices, edges);

    std::vector<double> rating(n_vertices, config.initial_rating);
    for (const auto& e : edges) {
        const double expected_left = 1.0 / (1.0 + std::pow(10.0, (rating[e.right] - rating[e.left]) / config.scale));
        const double actual_left = match_outcome(e.margin, config.draw_threshold);
        const double delta = config.k_factor * (actual_left - expected_left);
        rating[e.left] += delta;
        rating[e.right] -= delta;
    }

    Leaderboard board;
    board.method = Method::elo;
    board.scores = std::move(rating);
    board.n_components = component_count(connected_components(n_vertices, as_pairs(edges)));
    board.ranks = scores_to_ranks(board.scores);
    return board;
}

Leaderboard aggregate(Method method, std::size_t n_vertices, std::span<const ComparisonEdgeObservation> edges,
                      const AggregatorConfig& config) {
    switch (method) {
        case Method::lsq: return lsq_recover(n_vertices, edges, config.lsq);
        case Method::elo: return elo_rank(n_vertices, edges, config.elo);
        case Method::winrate: return winrate_rank(n_vertices, edges, config.draw_threshold);
    }
    throw InvalidInput("unknown aggregation method");
}

std::vector<int> scores_to_ranks(std::span<const double> scores) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!std::isfinite(scores[i])) throw InvalidInput("non-finite score at index " + std::to_string(i));
    }
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<int> ranks(scores.size());
    int rank = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
        if (t == 0 || scores[order[t]] != scores[order[t - 1]]) ++rank;
        ranks[order[t]] = rank;
    }
    return ranks;
}

}  // namespace pmrank
