#include "pmrank/laplacian_solver.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "pmrank/errors.hpp"

namespace pmrank {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void remove_mean(std::span<double> x) {
    if (x.empty()) return;
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    for (double& v : x) v -= mean;
}

}  // namespace

void LaplacianCsr::multiply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) s += value[k] * x[column[k]];
        y[i] = s;
    }
}

CgResult solve_laplacian_cg(const LaplacianCsr& laplacian, std::span<const double> rhs, double relative_tolerance,
                            std::size_t max_iterations) {
    const std::size_t n = laplacian.n;
    CgResult out;
    out.solution.assign(n, 0.0);

    std::vector<double> r(rhs.begin(), rhs.end());
    remove_mean(r);
    const double rhs_norm = std::sqrt(dot(r, r));
    if (rhs_norm == 0.0) {
        out.converged = true;
        return out;
    }

    std::vector<double> p = r;
    std::vector<double> lp(n);
    double rr = dot(r, r);
    auto& s = out.solution;

    for (std::size_t it = 0; it < max_iterations; ++it) {
        laplacian.multiply(p, lp);
        const double curvature = dot(p, lp);
        if (!(curvature > 0.0)) break;
        const double alpha = rr / curvature;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] += alpha * p[i];
            r[i] -= alpha * lp[i];
        }
        remove_mean(s);
        remove_mean(r);
        out.iterations = it + 1;
        const double rr_next = dot(r, r);
        out.relative_residual = std::sqrt(rr_next) / rhs_norm;
        if (out.relative_residual < relative_tolerance) {
            out.converged = true;
            break;
        }
        const double beta = rr_next / rr;
        rr = rr_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        remove_mean(p);
    }
    return out;
}

std::vector<double> solve_laplacian_kkt(std::span<const double> laplacian, std::span<const double> rhs,
                                        std::size_t n) {
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            kkt(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = laplacian[i * n + j];
        }
        kkt(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) = 1.0;
        kkt(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)) = 1.0;
        b(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    const Eigen::VectorXd x = kkt.partialPivLu().solve(b);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = x(static_cast<Eigen::Index>(i));
    return s;
}

}  // namespace pmrank
