#pragma once

#include <utility>
#include <vector>

#include "slog/problem.hpp"

namespace slog {

// Sparsity level s in [0, 1]: the solution should carry
// round((1 - s) * min(n, p)) nonzero coefficients.
struct SparsityTarget {
    double s;
    int implied_count(Index n, Index p) const;
};

struct CalibrationResult {
    double lambda = 0.0;
    int achieved_nonzeros = 0;
    // (lambda, nonzero count) pairs of the initial path grid, lambda
    // decreasing. The count is a nonincreasing step function of lambda.
    std::vector<std::pair<double, int>> evaluated;
};

// Finds a penalty whose solution carries the implied nonzero count within
// +-1 (ties resolved toward the sparser side), by bisection over a
// warm-started descent path. When the exact count is attainable the returned
// lambda is centered inside its plateau. Throws UnachievableSparsity when no
// penalty in the bracket attains the count within +-1.
CalibrationResult calibrate_lambda(const RegressionProblem& problem, const SparsityTarget& target);

}  // namespace slog
