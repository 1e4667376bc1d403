#include "pmrank/graph_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pmrank/errors.hpp"

namespace pmrank {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Rank-based quantile buckets; ties in rating are ordered by vertex index.
std::vector<std::size_t> quantile_buckets(std::span<const double> ratings, std::size_t quantile_count) {
    const std::size_t n = ratings.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ratings[a] < ratings[b] || (ratings[a] == ratings[b] && a < b);
    });
    std::vector<std::size_t> bucket(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        bucket[order[rank]] = rank * quantile_count / n;
    }
    return bucket;
}

}  // namespace

ComparisonGraph::ComparisonGraph(std::size_t n_vertices) : match_counts_(n_vertices, 0) {}

void ComparisonGraph::add_edge(VertexId a, VertexId b) {
    if (a == b) throw InvalidInput("self-loop on vertex " + std::to_string(a));
    if (a >= n_vertices() || b >= n_vertices()) {
        throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " +
                           std::to_string(n_vertices()) + " vertices");
    }
    if (a > b) std::swap(a, b);
    edges_.push_back({a, b});
    ++match_counts_[a];
    ++match_counts_[b];
}

double ComparisonGraph::mean_degree() const noexcept {
    if (n_vertices() == 0) return 0.0;
    return 2.0 * static_cast<double>(n_edges()) / static_cast<double>(n_vertices());
}

SamplerState::SamplerState(std::size_t n_vertices, std::uint64_t seed, SamplerOptions options)
    : graph_(n_vertices), ratings_(n_vertices, 0.0), seed_(seed), options_(options), rng_(seed) {
    if (n_vertices < 2) throw InvalidInput("sampler needs at least 2 vertices, got " + std::to_string(n_vertices));
    if (n_vertices > std::numeric_limits<VertexId>::max()) throw InvalidInput("too many vertices");
    if (options_.quantile_count < 1) throw InvalidInput("quantile_count must be >= 1");
    if (!(options_.window_width > 0.0) || !std::isfinite(options_.window_width)) {
        throw InvalidInput("window_width must be a finite positive number");
    }
}

SamplerState new_sampler(std::size_t n_vertices, std::uint64_t seed, std::size_t quantile_count,
                         double window_width) {
    return SamplerState(n_vertices, seed, SamplerOptions{quantile_count, window_width});
}

VertexId SamplerState::pick_first_member(std::span<const std::size_t> working_degree,
                                         std::span<const std::size_t> batch_partners) {
    const std::size_t n = graph_.n_vertices();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<VertexId> ties;
    for (std::size_t v = 0; v < n; ++v) {
        if (batch_partners[v] + 1 >= n) continue;  // already paired with everyone in this batch
        if (working_degree[v] < best) {
            best = working_degree[v];
            ties.clear();
        }
        if (working_degree[v] == best) ties.push_back(static_cast<VertexId>(v));
    }
    return ties[rng_.uniform_index(ties.size())];
}

VertexId SamplerState::pick_partner(VertexId first, std::span<const std::size_t> quantile_of,
                                    bool ratings_informative, const std::unordered_set<std::uint64_t>& in_batch) {
    const std::size_t n = graph_.n_vertices();
    std::vector<VertexId> open;
    open.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (v == first || in_batch.contains(pair_key(first, static_cast<VertexId>(v)))) continue;
        open.push_back(static_cast<VertexId>(v));
    }

    if (ratings_informative) {
        const bool by_quantile = rng_.coin_flip();
        const double center = ratings_[first];
        std::vector<VertexId> local;
        for (VertexId v : open) {
            const bool keep = by_quantile ? quantile_of[v] == quantile_of[first]
                                          : std::abs(ratings_[v] - center) <= options_.window_width;
            if (keep) local.push_back(v);
        }
        if (!local.empty()) return local[rng_.uniform_index(local.size())];
    }
    return open[rng_.uniform_index(open.size())];
}

std::vector<VertexPair> SamplerState::sample_batch(std::size_t batch_size) {
    if (batch_size < 1) throw InvalidInput("batch_size must be >= 1");
    const std::size_t n = graph_.n_vertices();
    const std::size_t distinct_pairs = n * (n - 1) / 2;
    const std::size_t target = std::min(batch_size, distinct_pairs);

    const bool informative =
        std::adjacent_find(ratings_.begin(), ratings_.end(), std::not_equal_to<>{}) != ratings_.end();
    std::vector<std::size_t> quantile_of;
    if (informative) quantile_of = quantile_buckets(ratings_, options_.quantile_count);

    std::vector<std::size_t> working_degree(graph_.match_counts().begin(), graph_.match_counts().end());
    std::vector<std::size_t> batch_partners(n, 0);
    std::unordered_set<std::uint64_t> in_batch;
    std::vector<VertexPair> batch;
    batch.reserve(target);

    while (batch.size() < target) {
        const VertexId first = pick_first_member(working_degree, batch_partners);
        const VertexId partner = pick_partner(first, quantile_of, informative, in_batch);
        in_batch.insert(pair_key(first, partner));
        ++working_degree[first];
        ++working_degree[partner];
        ++batch_partners[first];
        ++batch_partners[partner];
        batch.push_back({std::min(first, partner), std::max(first, partner)});
    }

    for (const auto& p : batch) graph_.add_edge(p.left, p.right);
    return batch;
}

void SamplerState::update_provisional_ratings(std::span<const double> ratings) {
    if (ratings.size() != ratings_.size()) {
        throw InvalidInput("expected " + std::to_string(ratings_.size()) + " ratings, got " +
                           std::to_string(ratings.size()));
    }
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        if (!std::isfinite(ratings[i])) throw InvalidInput("non-finite rating at vertex " + std::to_string(i));
    }
    ratings_.assign(ratings.begin(), ratings.end());
}

std::vector<std::size_t> connected_components(std::size_t n_vertices, std::span<const VertexPair> edges) {
    std::vector<std::size_t> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& e : edges) {
        const std::size_t a = find(e.left);
        const std::size_t b = find(e.right);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> label_of_root(n_vertices, unset);
    std::vector<std::size_t> labels(n_vertices);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n_vertices; ++v) {
        const std::size_t root = find(v);
        if (label_of_root[root] == unset) label_of_root[root] = next++;
        labels[v] = label_of_root[root];
    }
    return labels;
}

std::vector<std::size_t> connected_components(const ComparisonGraph& graph) {
    return connected_components(graph.n_vertices(), graph.edges());
}

std::size_t component_count(std::span<const std::size_t> labels) {
    if (labels.empty()) return 0;
    return *std::max_element(labels.begin(), labels.end()) + 1;
}

}  // namespace pmrank
