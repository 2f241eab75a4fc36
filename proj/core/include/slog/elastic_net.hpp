#pragma once

#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// Fixed-point recursion for the elastic net: the active block solves
//   [X*'X* + lambda2 I + lambda1 diag(1/|b*|)] u = X*'y,
// with the same zero absorption, thresholding, and stopping rules as the
// lasso solver. lambda2 == 0 reproduces solve_slog exactly.
SolverResult solve_enet_slog(const RegressionProblem& problem, double lambda1, double lambda2,
                             const SolverConfig& config = {});

}  // namespace slog
