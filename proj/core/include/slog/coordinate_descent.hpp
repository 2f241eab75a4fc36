#pragma once

#include <optional>
#include <vector>

#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// Smallest penalty that zeroes every coefficient: |X'y|_inf.
double lambda_max(const RegressionProblem& problem);

struct CdConfig {
    // Decreasing penalty values ending at the target. Left empty, a
    // path_length-point log-spaced sequence from lambda_max down to the
    // target is generated; a single-element {target} sequence runs plain
    // one-penalty descent.
    std::vector<double> lambda_sequence;
    int path_length = 50;
    // glmnet-style rule: a path segment stops when the objective decrease in
    // one sweep falls below objective_tol * |y|^2.
    double objective_tol = 1e-13;
    long max_sweeps = 1'000'000;
    bool active_set_shortcut = true;
    StartRule start = ZeroStart{};
    bool retain_iterates = false;
    long snapshot_dense_limit = 1000;
    long snapshot_stride = 100;
};

// Cyclic coordinate descent with warm starts along the penalty sequence.
// Each coordinate update is the exact univariate minimizer
//   b_j <- soft(x_j'(y - sum_{k != j} x_k b_k), lambda) / (x_j' x_j).
// iterations counts full sweeps over all p coordinates. When a reference is
// given, the final segment keeps sweeping until the relative distance to it
// falls below the requested bound.
SolverResult solve_cd(const RegressionProblem& problem, double lambda, const CdConfig& config = {},
                      const std::optional<ReferenceTarget>& reference = std::nullopt);

}  // namespace slog
