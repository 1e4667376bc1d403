#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pmrank/rng.hpp"

namespace pmrank {

using VertexId = std::uint32_t;

// Unordered pair stored with left < right.
struct VertexPair {
    VertexId left = 0;
    VertexId right = 0;

    friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

// Undirected comparison multigraph. Repeated pairs across batches are kept
// as separate edges.
class ComparisonGraph {
public:
    explicit ComparisonGraph(std::size_t n_vertices = 0);

    std::size_t n_vertices() const noexcept { return match_counts_.size(); }
    std::size_t n_edges() const noexcept { return edges_.size(); }
    std::span<const VertexPair> edges() const noexcept { return edges_; }
    std::span<const std::size_t> match_counts() const noexcept { return match_counts_; }

    // Throws InvalidInput on a self-loop or an out-of-range index.
    void add_edge(VertexId a, VertexId b);

    double mean_degree() const noexcept;

private:
    std::vector<VertexPair> edges_;
    std::vector<std::size_t> match_counts_;
};

struct SamplerOptions {
    std::size_t quantile_count = 10;
    double window_width = 0.5;
};

// Batch sampler state: the graph built so far plus the provisional ratings
// that steer partner selection. Not safe for concurrent mutation.
class SamplerState {
public:
    SamplerState(std::size_t n_vertices, std::uint64_t seed, SamplerOptions options = {});

    const ComparisonGraph& graph() const noexcept { return graph_; }
    std::span<const double> provisional_ratings() const noexcept { return ratings_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const SamplerOptions& options() const noexcept { return options_; }

    // Samples up to batch_size pairs that are distinct within the batch,
    // appends them to the graph, and returns them in sampling order.
    std::vector<VertexPair> sample_batch(std::size_t batch_size);

    void update_provisional_ratings(std::span<const double> ratings);

private:
    VertexId pick_first_member(std::span<const std::size_t> working_degree,
                               std::span<const std::size_t> batch_partners);
    VertexId pick_partner(VertexId first, std::span<const std::size_t> quantile_of,
                          bool ratings_informative, const std::unordered_set<std::uint64_t>& in_batch);

    ComparisonGraph graph_;
    std::vector<double> ratings_;
    std::uint64_t seed_;
    SamplerOptions options_;
    RandomStream rng_;
};

SamplerState new_sampler(std::size_t n_vertices, std::uint64_t seed, std::size_t quantile_count = 10,
                         double window_width = 0.5);

// Component labels in [0, n_components), numbered in order of the smallest
// vertex of each component.
std::vector<std::size_t> connected_components(std::size_t n_vertices, std::span<const VertexPair> edges);
std::vector<std::size_t> connected_components(const ComparisonGraph& graph);

std::size_t component_count(std::span<const std::size_t> labels);

}  // namespace pmrank
