#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pmrank {

// Graph Laplacian of a connected multigraph in compressed sparse row form.
// Off-diagonal entries are minus the edge multiplicity.
struct LaplacianCsr {
    std::size_t n = 0;
    std::vector<std::size_t> row_start;  // n + 1
    std::vector<std::size_t> column;
    std::vector<double> value;

    void multiply(std::span<const double> x, std::span<double> y) const;
};

struct CgResult {
    std::vector<double> solution;
    std::size_t iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
};

// Solves L s = r on the zero-mean subspace by conjugate gradient, projecting
// the iterate and the search direction back onto {sum = 0} every step.
// r must sum to zero (always true for a Laplacian right-hand side).
CgResult solve_laplacian_cg(const LaplacianCsr& laplacian, std::span<const double> rhs, double relative_tolerance,
                            std::size_t max_iterations);

// Dense solve of the bordered system [[L, 1], [1^T, 0]] [s; mu] = [r; 0].
// laplacian is row-major n x n.
std::vector<double> solve_laplacian_kkt(std::span<const double> laplacian, std::span<const double> rhs,
                                        std::size_t n);

}  // namespace pmrank
