#pragma once

#include "slog/kkt.hpp"
#include "slog/penalty.hpp"
#include "slog/problem.hpp"

namespace slog {

// Proximal-gradient reference solver, used as the independent oracle the
// other solvers are certified against. Fixed step 1/L with L the largest
// eigenvalue of the smooth part's Hessian (power iteration), plus an
// objective-decrease backtracking guard.
struct IstaOptions {
    long max_iter = 4'000'000;
    long kkt_check_every = 25;
};

struct IstaRun {
    Vector coefficients;
    long iterations = 0;
    double kkt_violation = 0.0;
    double wall_seconds = 0.0;
};

// Runs until kkt_check(problem, penalty, b, tol) certifies optimality.
// Throws NotConvergedError if the iteration cap is reached first.
Vector solve_ista(const RegressionProblem& problem, const PenaltySpec& penalty, double tol,
                  const IstaOptions& options = {});

IstaRun solve_ista_traced(const RegressionProblem& problem, const PenaltySpec& penalty, double tol,
                          const IstaOptions& options = {});

}  // namespace slog
