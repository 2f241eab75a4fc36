#pragma once

#include <vector>

#include "slog/coordinate_descent.hpp"
#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

enum class BlockSolver { Slog, Cd };

// Disjoint column blocks covering every predictor, each with its own solver
// choice (fixed-point recursion for collinear blocks, coordinate descent for
// well-conditioned ones).
struct BlockPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<BlockSolver> solvers;  // one per block
};

// Solves each block against the shared response independently. If all
// cross-block gram entries are at most 1e-10 in magnitude the concatenated
// block solutions are returned directly; otherwise zeroed coordinates are
// reinitialized to sign((X'r)_j) * max(theta*1e3, 1e-6) and a full-problem
// thresholded solve is run from the combined start.
SolverResult solve_hybrid(const RegressionProblem& problem, double lambda,
                          const BlockPartition& partition, const SolverConfig& config = {},
                          const CdConfig& cd_config = {});

}  // namespace slog
