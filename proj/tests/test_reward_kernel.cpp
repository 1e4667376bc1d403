#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pmrank/errors.hpp"
#include "pmrank/reward_kernel.hpp"
#include "pmrank/rng.hpp"

using namespace pmrank;
using doctest::Approx;

TEST_CASE("margin_mse") {
    CHECK(margin_mse(std::vector<double>{0.3, -1.2}, std::vector<double>{0.3, -1.2}) == 0.0);
    CHECK(margin_mse(std::vector<double>{1.0, -1.0}, std::vector<double>{0.0, 0.0}) == 1.0);
    CHECK(margin_mse(std::vector<double>{0.5}, std::vector<double>{0.0}) == 0.25);
    CHECK_THROWS_AS(margin_mse(std::vector<double>{0.5}, std::vector<double>{0.0, 1.0}), InvalidInput);
    CHECK_THROWS_AS(margin_mse({}, {}), InvalidInput);

    std::vector<double> p{0.1, 2.0, -3.0, 0.7}, t{0.0, 1.5, -2.0, 1.0};
    const double base = margin_mse(p, t);
    std::reverse(p.begin(), p.end());
    std::reverse(t.begin(), t.end());
    CHECK(margin_mse(p, t) == Approx(base).epsilon(1e-15));
}

TEST_CASE("rollout_reward") {
    const RewardConfig cfg{1.0, 0.2, 1e-4};
    CHECK(rollout_reward({1.3, 1.3, true}, cfg) == 1.2);
    CHECK(rollout_reward({2.0, 1.0, false}, cfg) == Approx(0.367879).epsilon(1e-6));
    CHECK(rollout_reward({2.0, 1.0, false}, cfg) == std::exp(-1.0));
    CHECK(rollout_reward({1e3, 0.0, false}, cfg) == 0.0);
    CHECK(rollout_reward({1e3, 0.0, true}, cfg) == Approx(0.2));
    CHECK(rollout_reward({0.4, 0.1, true}, cfg) - rollout_reward({0.4, 0.1, false}, cfg) == Approx(0.2));
    CHECK_THROWS_AS(rollout_reward({0, 0, true}, RewardConfig{0.0, 0.2, 1e-4}), InvalidInput);
    CHECK_THROWS_AS(rollout_reward({0, 0, true}, RewardConfig{1.0, -0.1, 1e-4}), InvalidInput);
}

TEST_CASE("group_advantages") {
    CHECK(group_advantages(std::vector<double>{1, 1, 1, 1}, 1e-4) == std::vector<double>{0, 0, 0, 0});
    const auto two = group_advantages(std::vector<double>{0, 2}, 1e-12);
    CHECK(two[0] == Approx(-1.0).epsilon(1e-10));
    CHECK(two[1] == Approx(1.0).epsilon(1e-10));
    CHECK(group_advantages(std::vector<double>{5}, 1e-4) == std::vector<double>{0});
    CHECK_THROWS_AS(group_advantages({}, 1e-4), InvalidInput);
    CHECK_THROWS_AS(group_advantages(std::vector<double>{1}, 0.0), InvalidInput);
}

TEST_CASE("group_advantages invariants") {
    RandomStream rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> r(1 + rng.uniform_index(16));
        for (auto& x : r) x = 1.2 * rng.uniform01();
        const auto a = group_advantages(r, 1e-4);
        CHECK(std::abs(std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size())) < 1e-12);

        auto shifted = r;
        for (auto& x : shifted) x += 3.0;
        const auto as = group_advantages(shifted, 1e-4);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(as[i] - a[i]) < 1e-9);

        auto scaled = r;
        for (auto& x : scaled) x *= 2.5;
        const auto ac = group_advantages(scaled, 1e-4);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (r[i] < r[j]) CHECK(ac[i] < ac[j]);
            }
        }
    }
}
