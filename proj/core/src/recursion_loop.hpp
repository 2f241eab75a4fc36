#pragma once

// Internal driver for the fixed-point solver family. Each solver supplies a
// policy with:
//   Vector diagonal(const Vector& b, const std::vector<Index>& active, long iteration)
//       penalty diagonal for the restricted system, one entry per active column;
//   void refresh_active(Vector& b, std::vector<Index>& active)
//       post-update thresholding and active-set maintenance (active may only shrink);
//   double objective_at(const Vector& b)
//       objective recorded in the trace.

#include <chrono>
#include <limits>
#include <vector>

#include "slog/inversion.hpp"
#include "slog/solver_types.hpp"

namespace slog::detail {

inline int count_nonzero(const Vector& b) {
    int count = 0;
    for (Index j = 0; j < b.size(); ++j) count += b[j] != 0.0;
    return count;
}

inline std::vector<Index> nonzero_indices(const Vector& b) {
    std::vector<Index> active;
    for (Index j = 0; j < b.size(); ++j) {
        if (b[j] != 0.0) active.push_back(j);
    }
    return active;
}

template <class Policy>
SolverResult run_penalized_recursion(const RegressionProblem& problem, const SolverConfig& config,
                                     Vector start, std::vector<Index> active, Policy& policy) {
    if (!(config.step_tol > 0.0)) throw std::invalid_argument("step_tol must be > 0");
    if (config.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (!(config.threshold >= 0.0)) throw std::invalid_argument("threshold must be >= 0");

    const Matrix& X = problem.design();
    const Index n = problem.n_obs();
    const Vector q = X.transpose() * problem.response();

    Matrix gram;  // built on first use by the naive path
    SolverResult result;
    Vector b = std::move(start);
    Vector b_next(b.size());

    const auto t0 = std::chrono::steady_clock::now();
    for (long k = 1; k <= config.max_iter; ++k) {
        if (active.empty()) {
            b_next.setZero();
        } else {
            const Index p_active = static_cast<Index>(active.size());
            const Vector diag = policy.diagonal(b, active, k);
            const Vector rhs = q(active);
            Vector u;
            switch (resolve_strategy(config.inversion, n, p_active)) {
                case InversionStrategy::Naive: {
                    if (gram.size() == 0) gram = X.transpose() * X;
                    u = solve_diag_plus_gram_naive(gram(active, active), diag, rhs);
                    break;
                }
                case InversionStrategy::Woodbury:
                    u = solve_diag_plus_gram_woodbury(X(Eigen::all, active), diag, rhs);
                    break;
                case InversionStrategy::Miller:
                    u = solve_diag_plus_gram_miller(X(Eigen::all, active), diag, rhs);
                    break;
                case InversionStrategy::Auto:
                    throw std::logic_error("unresolved inversion strategy");
            }
            b_next.setZero();
            for (Index i = 0; i < p_active; ++i) b_next[active[i]] = u[i];
        }

        policy.refresh_active(b_next, active);

        const double d = relative_step(b_next, b);
        const double dist = config.reference
                                ? relative_distance(b_next, config.reference->vector)
                                : std::numeric_limits<double>::quiet_NaN();
        result.trace.push_back(
            {policy.objective_at(b_next), d, count_nonzero(b_next), dist});
        result.iterations = k;
        if (should_snapshot(config, k)) result.snapshots.emplace_back(k, b_next);
        b.swap(b_next);

        if (config.reference) {
            if (dist <= config.reference->distance) {
                result.converged = true;
                result.reason = StopReason::ReferenceDistance;
                break;
            }
            if (d < config.step_tol || d == 0.0 || active.empty()) {
                result.converged = false;
                result.reason = StopReason::Stalled;
                break;
            }
        } else if (d < config.step_tol || active.empty()) {
            result.converged = true;
            result.reason = d == 0.0 || active.empty() ? StopReason::FixedPoint
                                                       : StopReason::StepTolerance;
            break;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.wall_seconds =
        std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
    result.coefficients = std::move(b);
    return result;
}

}  // namespace slog::detail
