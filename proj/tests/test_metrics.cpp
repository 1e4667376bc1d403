#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pmrank/errors.hpp"
#include "pmrank/metrics.hpp"

using namespace pmrank;
using doctest::Approx;

namespace {

using Vec = std::vector<double>;

MetricCurve curve_of(const Vec& values) {
    MetricCurve c;
    for (std::size_t i = 0; i < values.size(); ++i) c.budgets.push_back(10 * (i + 1));
    c.values = values;
    return c;
}

}  // namespace

TEST_CASE("srcc examples") {
    CHECK(srcc(Vec{1, 2, 3}, Vec{10, 20, 30}) == Approx(1.0).epsilon(1e-15));
    CHECK(srcc(Vec{3, 2, 1}, Vec{10, 20, 30}) == Approx(-1.0).epsilon(1e-15));
    // 1 - 6 * 2 / (4 * 15)
    CHECK(srcc(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4}) == Approx(0.8).epsilon(1e-14));
}

TEST_CASE("plcc examples") {
    const Vec t{0.3, 1.7, 2.2, 4.9, 3.1};
    Vec affine, neg;
    for (double x : t) {
        affine.push_back(2.0 * x + 5.0);
        neg.push_back(-x);
    }
    CHECK(plcc(affine, t) == Approx(1.0).epsilon(1e-14));
    CHECK(plcc(neg, t) == Approx(-1.0).epsilon(1e-14));
    // 4 / sqrt(2 * 78/9)
    CHECK(plcc(Vec{0, 1, 2}, Vec{0, 1, 4}) == Approx(4.0 / std::sqrt(2.0 * 78.0 / 9.0)).epsilon(1e-14));
    CHECK(plcc(Vec{0, 1, 2}, Vec{0, 1, 4}) == Approx(0.9608).epsilon(1e-4));
}

TEST_CASE("correlation errors") {
    CHECK_THROWS_AS(srcc(Vec{1}, Vec{2}), UndefinedCorrelation);
    CHECK_THROWS_AS(plcc(Vec{1, 1, 1}, Vec{1, 2, 3}), UndefinedCorrelation);
    CHECK_THROWS_AS(srcc(Vec{1, 2, 3}, Vec{4, 4, 4}), UndefinedCorrelation);
    CHECK_THROWS_AS(plcc(Vec{1, 2}, Vec{1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(plcc(Vec{1, NAN}, Vec{1, 2}), InvalidInput);
}

TEST_CASE("average ranks share ties") {
    CHECK(average_ranks(Vec{10, 20, 20, 5}) == Vec{2.0, 3.5, 3.5, 1.0});
    CHECK(average_ranks(Vec{1, 1, 1}) == Vec{2.0, 2.0, 2.0});
}

TEST_CASE("correlation properties") {
    RandomStream rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng.uniform_index(30);
        Vec x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::round(10.0 * rng.normal()) / 4.0;  // coarse grid injects ties
            y[i] = x[i] + rng.normal();
        }
        if (oracle::brute_average_ranks(x) == Vec(n, 0.5 * static_cast<double>(n + 1))) continue;

        Vec expx(n), affine(n), neg(n);
        for (std::size_t i = 0; i < n; ++i) {
            expx[i] = std::exp(x[i]);
            affine[i] = 3.0 * x[i] - 1.0;
            neg[i] = -x[i];
        }
        CHECK(srcc(expx, y) == Approx(srcc(x, y)).epsilon(1e-12));
        CHECK(plcc(affine, y) == Approx(plcc(x, y)).epsilon(1e-12));
        CHECK(plcc(neg, y) == Approx(-plcc(x, y)).epsilon(1e-12));
        CHECK(srcc(x, x) == Approx(1.0).epsilon(1e-14));
        CHECK(plcc(x, x) == Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(srcc(x, y) - oracle::brute_spearman(x, y)) < 1e-12);
        CHECK(std::abs(plcc(x, y) - oracle::brute_pearson(x, y)) < 1e-12);
    }
}

TEST_CASE("stability_point examples") {
    const auto c = curve_of(Vec{0.5, 0.7, 0.79, 0.80, 0.801, 0.800});
    CHECK(stability_point(c, 0.005) == 40);
    CHECK(stability_point(curve_of(Vec{0.6, 0.6, 0.6}), 0.005) == 10);
    CHECK(stability_point(curve_of(Vec{0.3}), 0.005) == 10);
    // only the final point qualifies
    CHECK(stability_point(curve_of(Vec{0.1, 0.9, 0.2}), 0.005) == 30);
    CHECK_THROWS_AS(stability_point(MetricCurve{}, 0.005), InvalidInput);
    CHECK_THROWS_AS(stability_point(c, 0.0), InvalidInput);
}

TEST_CASE("stability_point is monotone in tolerance and matches the scan") {
    RandomStream rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Vec v(1 + rng.uniform_index(40));
        double level = rng.uniform01();
        for (auto& x : v) {
            level += 0.02 * rng.normal();
            x = level;
        }
        const auto c = curve_of(v);
        double prev = 1e18;
        for (double tol : {0.001, 0.005, 0.01, 0.05, 0.2}) {
            const auto sp = stability_point(c, tol);
            CHECK(static_cast<double>(sp) <= prev);
            prev = static_cast<double>(sp);
            CHECK(sp == c.budgets[oracle::brute_stability_index(v, tol)]);
        }
    }
}
