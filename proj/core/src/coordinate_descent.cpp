#include "slog/coordinate_descent.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "recursion_loop.hpp"
#include "slog/penalty.hpp"

namespace slog {

namespace {

std::vector<double> build_lambda_sequence(const CdConfig& config, double lmax, double target) {
    if (!config.lambda_sequence.empty()) {
        const auto& seq = config.lambda_sequence;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            if (!(seq[i] < seq[i - 1])) {
                throw std::invalid_argument("lambda sequence must be strictly decreasing");
            }
        }
        if (seq.back() != target) {
            throw std::invalid_argument("lambda sequence must end at the target value");
        }
        if (target > seq.front()) {
            throw std::invalid_argument("target lambda exceeds the first sequence value");
        }
        return seq;
    }
    if (config.path_length < 1) throw std::invalid_argument("path_length must be >= 1");
    if (target >= lmax || lmax <= 0.0 || config.path_length == 1) {
        return {target};
    }
    std::vector<double> seq(static_cast<std::size_t>(config.path_length));
    const double log_hi = std::log(lmax);
    const double log_lo = std::log(target);
    const int m = config.path_length - 1;
    for (int i = 0; i <= m; ++i) {
        seq[static_cast<std::size_t>(i)] =
            std::exp(log_hi + (log_lo - log_hi) * static_cast<double>(i) / m);
    }
    seq.front() = lmax;
    seq.back() = target;
    return seq;
}

// Partial-residual inner product x_j'(y - sum_{k != j} x_k b_k) computed from
// the gram matrix. With the active-set shortcut only the nonzero b_k terms
// are accumulated (ascending k, so the shortcut changes no rounding); without
// it the zero terms are added too.
double partial_correlation(const Matrix& gram, const Vector& q, const Vector& b,
                           const std::vector<Index>& active, bool shortcut, Index j) {
    double acc = 0.0;
    if (shortcut) {
        for (Index k : active) {
            if (k != j) acc += gram(k, j) * b[k];
        }
    } else {
        for (Index k = 0; k < b.size(); ++k) {
            if (k != j) acc += gram(k, j) * b[k];
        }
    }
    return q[j] - acc;
}

// b'Gb - 2 q'b accumulated over the active coordinates only.
double fit_quadratic(const Matrix& gram, const Vector& q, const Vector& b,
                     const std::vector<Index>& active) {
    double quad = 0.0;
    double lin = 0.0;
    for (Index j : active) {
        double gb = 0.0;
        for (Index k : active) gb += gram(j, k) * b[k];
        quad += b[j] * gb;
        lin += q[j] * b[j];
    }
    return quad - 2.0 * lin;
}

}  // namespace

double lambda_max(const RegressionProblem& problem) {
    return (problem.design().transpose() * problem.response()).lpNorm<Eigen::Infinity>();
}

SolverResult solve_cd(const RegressionProblem& problem, double lambda, const CdConfig& config,
                      const std::optional<ReferenceTarget>& reference) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (!(config.objective_tol > 0.0)) throw std::invalid_argument("objective_tol must be > 0");
    if (config.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");

    const Index p = problem.n_pred();
    const std::vector<double> lambdas =
        build_lambda_sequence(config, lambda_max(problem), lambda);

    const auto t0 = std::chrono::steady_clock::now();
    const Matrix gram = problem.design().transpose() * problem.design();
    const Vector q = problem.design().transpose() * problem.response();
    const double ynorm2 = problem.response().squaredNorm();
    const double stop_gap = config.objective_tol * ynorm2;

    Vector b = make_start_vector(problem, lambda, config.start);
    std::vector<Index> active = detail::nonzero_indices(b);

    SolverResult result;
    long sweeps = 0;
    bool out_of_budget = false;

    for (std::size_t seg = 0; seg < lambdas.size() && !out_of_budget; ++seg) {
        const double lam = lambdas[seg];
        const bool final_segment = seg + 1 == lambdas.size();
        double obj_prev = objective_from_quadratic(fit_quadratic(gram, q, b, active), ynorm2,
                                                   LassoPenalty{lam}, b);

        while (true) {
            if (sweeps >= config.max_sweeps) {
                out_of_budget = true;
                break;
            }
            ++sweeps;
            Vector b_prev = b;
            bool any_change = false;
            for (Index j = 0; j < p; ++j) {
                const double u =
                    partial_correlation(gram, q, b, active, config.active_set_shortcut, j);
                const double updated = soft_threshold(u, lam) / gram(j, j);
                if (updated != b[j]) {
                    any_change = true;
                    const bool was_active = b[j] != 0.0;
                    b[j] = updated;
                    const bool is_active = updated != 0.0;
                    if (is_active && !was_active) {
                        active.insert(std::lower_bound(active.begin(), active.end(), j), j);
                    } else if (!is_active && was_active) {
                        active.erase(std::lower_bound(active.begin(), active.end(), j));
                    }
                }
            }

            const double obj = objective_from_quadratic(fit_quadratic(gram, q, b, active),
                                                        ynorm2, LassoPenalty{lam}, b);
            const double d = relative_step(b, b_prev);
            const double dist = (reference && final_segment)
                                    ? relative_distance(b, reference->vector)
                                    : std::numeric_limits<double>::quiet_NaN();
            result.trace.push_back({obj, d, detail::count_nonzero(b), dist});
            if (config.retain_iterates) {
                SolverConfig snap;
                snap.retain_iterates = true;
                snap.snapshot_dense_limit = config.snapshot_dense_limit;
                snap.snapshot_stride = config.snapshot_stride;
                if (should_snapshot(snap, sweeps)) result.snapshots.emplace_back(sweeps, b);
            }

            if (final_segment && reference) {
                if (dist <= reference->distance) {
                    result.converged = true;
                    result.reason = StopReason::ReferenceDistance;
                    break;
                }
                if (!any_change) {
                    result.converged = false;
                    result.reason = StopReason::Stalled;
                    break;
                }
            } else {
                const double gap = obj_prev - obj;
                if (gap < stop_gap || !any_change) {
                    if (final_segment) {
                        result.converged = true;
                        result.reason = StopReason::ObjectiveTolerance;
                    }
                    break;
                }
            }
            obj_prev = obj;
        }
    }

    if (out_of_budget) {
        result.converged = false;
        result.reason = StopReason::MaxIterations;
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.wall_seconds = std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
    result.iterations = sweeps;
    result.coefficients = std::move(b);
    return result;
}

}  // namespace slog
