#pragma once

#include <vector>

#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// One iterate of the fixed-point recursion. active always matches the
// nonzero pattern of b; once an index leaves it never re-enters.
struct SlogState {
    Vector b;
    std::vector<Index> active;
    long k = 0;
};

SlogState make_slog_state(Vector b, long k = 0);

// Single application of the recursion map: coordinates outside the active
// set stay exactly zero, the active block solves
//   [X*'X* + lambda diag(1/|b*|)] u = X*'y.
SlogState slog_update(const RegressionProblem& problem, double lambda, const SlogState& state,
                      InversionStrategy strategy = InversionStrategy::Auto);

// Full solver loop: update, threshold coefficients with |b_j| <= theta to
// exact zero (permanently removing them from the active system), then test
// the relative-step / reference stopping rules. theta == 0 disables
// thresholding.
SolverResult solve_slog(const RegressionProblem& problem, double lambda,
                        const SolverConfig& config = {});

}  // namespace slog
