#pragma once

#include <cstdint>

#include "slog/problem.hpp"
#include "slog/rng.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// Noise schedule for the annealed solver: sigma2_k = sigma2_init * decay^k,
// strictly decreasing toward zero. sigma2_init == 0 degenerates to the
// deterministic recursion.
struct AnnealSchedule {
    double sigma2_init = 1e-7;
    double decay = 0.99;
    std::uint64_t seed = 0;
};

// One draw from InverseGaussian(mean, shape) via the chi-square transform
// with a uniform choice between the two roots.
double sample_inverse_gaussian(double mean, double shape, RngEngine& rng);

// Annealed variant: each step draws independent weights
//   U_j ~ InverseGaussian(1/|b_j|, 1/sigma2_k)
// for the active coordinates (ascending index order), solves
// (X*'X* + lambda diag(U*)) u = X*'y, applies the threshold, and steps the
// schedule. Deterministic given the schedule seed.
SolverResult solve_aslog(const RegressionProblem& problem, double lambda,
                         const AnnealSchedule& schedule, const SolverConfig& config = {});

}  // namespace slog
