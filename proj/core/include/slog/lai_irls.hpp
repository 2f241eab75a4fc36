#pragma once

#include <vector>

#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// Iteratively re-weighted least squares with the adaptive smoothing sequence
//   epsilon_k = min(epsilon_{k-1}, alpha * r(b_k)_{h+1}),
// where r(b)_{h+1} is the (h+1)-th largest coefficient magnitude. Each step
// solves (X'X + diag(lambda / sqrt(epsilon_k^2 + b_j^2))) b_next = X'y.
// With force_epsilon_zero the weights become lambda/|b_j| and the iterates
// coincide with the fixed-point recursion.
struct LaiConfig {
    double alpha = 0.9;
    int sparsity_h = 0;
    double epsilon_init = 1.0;
    bool force_epsilon_zero = false;
    StartRule start = ConstantStart{1e-6};
    double step_tol = 1e-6;
    long max_iter = 100'000;
    InversionStrategy inversion = InversionStrategy::Auto;
    bool retain_iterates = false;
};

struct LaiResult {
    SolverResult result;
    std::vector<double> epsilons;  // value used at each iteration
};

LaiResult solve_lai_irls(const RegressionProblem& problem, double lambda,
                         const LaiConfig& config = {});

}  // namespace slog
