#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "pmrank/aggregation.hpp"
#include "pmrank/errors.hpp"
#include "pmrank/laplacian_solver.hpp"

using namespace pmrank;
using doctest::Approx;

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("lsq two-node split") {
    const std::vector<ComparisonEdgeObservation> e{{0, 1, 2.0}};
    const auto b = lsq_recover(2, e);
    CHECK(b.scores[0] == Approx(1.0).epsilon(1e-14));
    CHECK(b.scores[1] == Approx(-1.0).epsilon(1e-14));
    CHECK(b.ranks == std::vector<int>{1, 2});
    CHECK(b.warnings.empty());
}

TEST_CASE("lsq consistent chain") {
    const std::vector<ComparisonEdgeObservation> e{{0, 1, 1.0}, {1, 2, 1.0}};
    const auto b = lsq_recover(3, e);
    CHECK(b.scores[0] == Approx(1.0));
    CHECK(std::abs(b.scores[1]) < 1e-12);
    CHECK(b.scores[2] == Approx(-1.0));
}

TEST_CASE("lsq inconsistent 3-cycle is averaged") {
    const std::vector<ComparisonEdgeObservation> e{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}};
    const auto oracle = oracle::pinv_lsq(3, e);
    // frozen from the pseudo-inverse oracle
    CHECK(oracle[0] == Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(oracle[1]) < 1e-12);
    CHECK(oracle[2] == Approx(-4.0 / 3.0).epsilon(1e-12));

    const auto b = lsq_recover(3, e);
    CHECK(max_abs_diff(b.scores, std::vector<double>{4.0 / 3.0, 0.0, -4.0 / 3.0}) < 1e-12);
    CHECK(b.ranks == std::vector<int>{1, 2, 3});
}

TEST_CASE("lsq per-component gauge pins isolated vertices") {
    const std::vector<ComparisonEdgeObservation> e{{0, 1, 2.0}};
    const auto b = lsq_recover(4, e);
    CHECK(max_abs_diff(b.scores, std::vector<double>{1.0, -1.0, 0.0, 0.0}) < 1e-12);
    CHECK(max_abs_diff(b.scores, oracle::pinv_lsq(4, e)) < 1e-12);
    CHECK(b.n_components == 3);
    REQUIRE(b.warnings.size() == 1);
    CHECK(b.warnings[0] == "disconnected:3");
}

TEST_CASE("lsq disconnected components are each centred") {
    const std::vector<ComparisonEdgeObservation> e{{0, 1, 1.0}, {1, 2, 0.5}, {3, 4, -2.0}, {4, 5, 0.25}, {3, 5, 1.0}};
    const auto b = lsq_recover(6, e);
    CHECK(std::abs(b.scores[0] + b.scores[1] + b.scores[2]) < 1e-12);
    CHECK(std::abs(b.scores[3] + b.scores[4] + b.scores[5]) < 1e-12);
    CHECK(max_abs_diff(b.scores, oracle::pinv_lsq(6, e)) < 1e-10);
}

TEST_CASE("lsq input errors") {
    CHECK_THROWS_AS(lsq_recover(0, {}), InvalidInput);
    CHECK_THROWS_AS(lsq_recover(2, std::vector<ComparisonEdgeObservation>{{0, 2, 1.0}}), InvalidInput);
    CHECK_THROWS_AS(lsq_recover(2, std::vector<ComparisonEdgeObservation>{{0, 0, 1.0}}), InvalidInput);
    CHECK_THROWS_AS(lsq_recover(2, std::vector<ComparisonEdgeObservation>{{0, 1, std::nan("")}}), InvalidInput);
    CHECK(lsq_recover(1, {}).scores == std::vector<double>{0.0});
}

TEST_CASE("lsq flags margins beyond the 1-5 scale range without failing") {
    const auto b = lsq_recover(2, std::vector<ComparisonEdgeObservation>{{0, 1, 6.0}});
    REQUIRE(b.warnings.size() == 1);
    CHECK(b.warnings[0] == "margin_out_of_range:1");
    CHECK(b.scores[0] == Approx(3.0));
}

TEST_CASE("lsq properties on random graphs") {
    RandomStream rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(19);
        const std::size_t m = std::min<std::size_t>(60, n - 1 + rng.uniform_index(40));
        auto edges = oracle::random_connected_edges(rng, n, m, 4.0);
        const auto board = lsq_recover(n, edges);

        // oracle equivalence
        CHECK(max_abs_diff(board.scores, oracle::pinv_lsq(n, edges)) < 1e-8);

        // gauge
        const double mean = std::accumulate(board.scores.begin(), board.scores.end(), 0.0) / static_cast<double>(n);
        CHECK(std::abs(mean) < 1e-10);

        // swap + negate reproduces bit-for-bit
        auto swapped = edges;
        for (auto& e : swapped) e = {e.right, e.left, -e.margin};
        const auto board2 = lsq_recover(n, swapped);
        CHECK(board2.scores == board.scores);
        CHECK(board2.ranks == board.ranks);

        // residual optimality against zero-mean perturbations
        const double base = oracle::residual_sq(board.scores, edges);
        for (int k = 0; k < 5; ++k) {
            std::vector<double> eps(n);
            for (auto& x : eps) x = rng.normal();
            const double em = std::accumulate(eps.begin(), eps.end(), 0.0) / static_cast<double>(n);
            double norm = 0.0;
            for (auto& x : eps) {
                x -= em;
                norm += x * x;
            }
            norm = std::sqrt(norm);
            std::vector<double> moved(n);
            for (std::size_t i = 0; i < n; ++i) moved[i] = board.scores[i] + 1e-3 * eps[i] / norm;
            CHECK(oracle::residual_sq(moved, edges) >= base - 1e-12);
        }

        // exact recovery from noiseless margins, and invariance to shifting ground truth
        std::vector<double> g(n);
        for (auto& x : g) x = 1.0 + 4.0 * rng.uniform01();
        auto exact = edges;
        auto shifted = edges;
        for (std::size_t k = 0; k < exact.size(); ++k) {
            exact[k].margin = g[exact[k].left] - g[exact[k].right];
            shifted[k].margin = (g[exact[k].left] + 7.5) - (g[exact[k].right] + 7.5);
        }
        const double gm = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(n);
        const auto rec = lsq_recover(n, exact);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(rec.scores[i] - (g[i] - gm)) < 1e-9);
        CHECK(max_abs_diff(lsq_recover(n, shifted).scores, rec.scores) < 1e-9);
    }
}

TEST_CASE("projected conjugate gradient path agrees with the dense path") {
    RandomStream rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 30 + rng.uniform_index(50);
        const auto edges = oracle::random_connected_edges(rng, n, 4 * n, 4.0);
        LsqOptions cg_only;
        cg_only.dense_limit = 1;
        const auto dense = lsq_recover(n, edges);
        const auto iterative = lsq_recover(n, edges, cg_only);
        CHECK(max_abs_diff(dense.scores, iterative.scores) < 1e-8);
        const double mean =
            std::accumulate(iterative.scores.begin(), iterative.scores.end(), 0.0) / static_cast<double>(n);
        CHECK(std::abs(mean) < 1e-10);
    }
}

TEST_CASE("cg on a path Laplacian reports convergence") {
    // path 0-1-2: L = [[1,-1,0],[-1,2,-1],[0,-1,1]]
    LaplacianCsr lap;
    lap.n = 3;
    lap.row_start = {0, 2, 5, 7};
    lap.column = {0, 1, 0, 1, 2, 1, 2};
    lap.value = {1, -1, -1, 2, -1, -1, 1};
    const std::vector<double> rhs{1.0, 0.0, -1.0};
    const auto res = solve_laplacian_cg(lap, rhs, 1e-12, 30);
    CHECK(res.converged);
    CHECK(res.solution[0] == Approx(1.0));
    CHECK(std::abs(res.solution[1]) < 1e-12);
    CHECK(res.solution[2] == Approx(-1.0));

    const auto zero = solve_laplacian_cg(lap, std::vector<double>{0.0, 0.0, 0.0}, 1e-12, 30);
    CHECK(zero.converged);
    CHECK(zero.iterations == 0);
}

TEST_CASE("winrate") {
    auto w = winrate_rank(2, std::vector<ComparisonEdgeObservation>{{0, 1, 1.0}}, 0.2);
    CHECK(w.scores == std::vector<double>{1.0, 0.0});
    w = winrate_rank(2, std::vector<ComparisonEdgeObservation>{{0, 1, 0.1}}, 0.2);
    CHECK(w.scores == std::vector<double>{0.5, 0.5});
    w = winrate_rank(2, std::vector<ComparisonEdgeObservation>{{0, 1, 1.0}, {0, 1, -1.0}}, 0.0);
    CHECK(w.scores == std::vector<double>{0.5, 0.5});
    // unmatched vertex keeps the uninformative prior
    w = winrate_rank(3, std::vector<ComparisonEdgeObservation>{{0, 1, 1.0}}, 0.2);
    CHECK(w.scores == std::vector<double>{1.0, 0.0, 0.5});
    CHECK(w.ranks == std::vector<int>{1, 3, 2});
    CHECK_THROWS_AS(winrate_rank(2, {}, -0.1), InvalidInput);
    CHECK_THROWS_AS(winrate_rank(2, std::vector<ComparisonEdgeObservation>{{0, 5, 1.0}}, 0.2), InvalidInput);
}

TEST_CASE("draw threshold boundary") {
    CHECK(match_outcome(0.19999, 0.2) == 0.5);
    CHECK(match_outcome(-0.19999, 0.2) == 0.5);
    CHECK(match_outcome(0.2, 0.2) == 1.0);
    CHECK(match_outcome(-0.2, 0.2) == 0.0);
    CHECK(match_outcome(0.0, 0.0) == 0.5);
    CHECK(match_outcome(1e-9, 0.0) == 1.0);
}

TEST_CASE("elo updates") {
    const EloConfig cfg{1500.0, 32.0, 400.0, 0.2};
    auto b = elo_rank(2, std::vector<ComparisonEdgeObservation>{{0, 1, 1.0}}, cfg);
    CHECK(b.scores[0] == Approx(1516.0).epsilon(1e-14));
    CHECK(b.scores[1] == Approx(1484.0).epsilon(1e-14));

    b = elo_rank(2, std::vector<ComparisonEdgeObservation>{{0, 1, 0.1}}, cfg);
    CHECK(b.scores == std::vector<double>{1500.0, 1500.0});

    b = elo_rank(4, {}, cfg);
    CHECK(b.scores == std::vector<double>(4, 1500.0));

    // second match: E_left = 1/(1+10^((1484-1516)/400)), hand-evaluated
    b = elo_rank(2, std::vector<ComparisonEdgeObservation>{{0, 1, 1.0}, {0, 1, 1.0}}, cfg);
    const double e = 1.0 / (1.0 + std::pow(10.0, -32.0 / 400.0));
    CHECK(b.scores[0] == Approx(1516.0 + 32.0 * (1.0 - e)));
    CHECK(b.scores[0] + b.scores[1] == Approx(3000.0));

    CHECK_THROWS_AS(elo_rank(2, {}, EloConfig{1500.0, 0.0, 400.0, 0.2}), InvalidInput);
    CHECK_THROWS_AS(elo_rank(2, {}, EloConfig{1500.0, 32.0, -1.0, 0.2}), InvalidInput);
}

TEST_CASE("elo and winrate are deterministic") {
    RandomStream rng(3);
    const auto edges = oracle::random_connected_edges(rng, 15, 50, 4.0);
    CHECK(elo_rank(15, edges).scores == elo_rank(15, edges).scores);
    CHECK(winrate_rank(15, edges).scores == winrate_rank(15, edges).scores);
}

TEST_CASE("scores_to_ranks") {
    CHECK(scores_to_ranks(std::vector<double>{3.0, 1.0, 2.0}) == std::vector<int>{1, 3, 2});
    CHECK(scores_to_ranks(std::vector<double>{1.0, 1.0}) == std::vector<int>{1, 1});
    CHECK(scores_to_ranks(std::vector<double>{-4.0 / 3.0, 0.0, 4.0 / 3.0}) == std::vector<int>{3, 2, 1});
    CHECK(scores_to_ranks(std::vector<double>{2.0, 5.0, 2.0, 1.0}) == std::vector<int>{2, 1, 2, 3});
    CHECK_THROWS_AS(scores_to_ranks(std::vector<double>{1.0, std::nan("")}), InvalidInput);
}

TEST_CASE("method names round-trip") {
    for (Method m : {Method::lsq, Method::elo, Method::winrate}) CHECK(parse_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_method("bradley-terry"), InvalidInput);
}
