#pragma once

#include <vector>

#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// Fixed-point recursion for the group lasso. The penalty diagonal carries
// lambda / |b_(m)|_2 for every column of group m, so columns of an active
// group stay in the system even when individually zero. A group whose norm
// falls to theta or below is deactivated: all members are set to exact zero
// and never re-enter.
SolverResult solve_group_slog(const RegressionProblem& problem, double lambda,
                              const std::vector<std::vector<int>>& groups,
                              const SolverConfig& config = {});

}  // namespace slog
