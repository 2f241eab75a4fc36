#include "slog/slog.hpp"

#include <cmath>

#include "recursion_loop.hpp"
#include "slog/penalty.hpp"

namespace slog {

namespace {

struct LassoRecursionPolicy {
    const RegressionProblem& problem;
    double lambda;
    double theta;
    double ynorm2;

    Vector diagonal(const Vector& b, const std::vector<Index>& active, long) const {
        Vector diag(static_cast<Index>(active.size()));
        for (std::size_t i = 0; i < active.size(); ++i) {
            diag[static_cast<Index>(i)] = lambda / std::abs(b[active[i]]);
        }
        return diag;
    }

    void refresh_active(Vector& b, std::vector<Index>& active) const {
        std::vector<Index> next;
        next.reserve(active.size());
        for (Index j : active) {
            if (std::abs(b[j]) <= theta) {
                b[j] = 0.0;
            } else {
                next.push_back(j);
            }
        }
        active.swap(next);
    }

    double objective_at(const Vector& b) const {
        return objective(problem, LassoPenalty{lambda}, b);
    }
};

}  // namespace

SlogState make_slog_state(Vector b, long k) {
    SlogState state;
    state.active = detail::nonzero_indices(b);
    state.b = std::move(b);
    state.k = k;
    return state;
}

SlogState slog_update(const RegressionProblem& problem, double lambda, const SlogState& state,
                      InversionStrategy strategy) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (state.b.size() != problem.n_pred()) {
        throw DimensionMismatch("state length != predictor count");
    }
    if (!state.b.allFinite()) throw std::invalid_argument("state contains non-finite values");

    SlogState next;
    next.b = Vector::Zero(problem.n_pred());
    next.k = state.k + 1;
    if (!state.active.empty()) {
        const Matrix& X = problem.design();
        const Index p_active = static_cast<Index>(state.active.size());
        Vector diag(p_active);
        for (Index i = 0; i < p_active; ++i) {
            diag[i] = lambda / std::abs(state.b[state.active[i]]);
        }
        const Matrix X_active = X(Eigen::all, state.active);
        const Vector rhs = X_active.transpose() * problem.response();
        Vector u;
        switch (resolve_strategy(strategy, problem.n_obs(), p_active)) {
            case InversionStrategy::Naive:
                u = solve_diag_plus_gram_naive(X_active.transpose() * X_active, diag, rhs);
                break;
            case InversionStrategy::Woodbury:
                u = solve_diag_plus_gram_woodbury(X_active, diag, rhs);
                break;
            case InversionStrategy::Miller:
                u = solve_diag_plus_gram_miller(X_active, diag, rhs);
                break;
            case InversionStrategy::Auto:
                throw std::logic_error("unresolved inversion strategy");
        }
        for (Index i = 0; i < p_active; ++i) next.b[state.active[i]] = u[i];
    }
    next.active = detail::nonzero_indices(next.b);
    return next;
}

SolverResult solve_slog(const RegressionProblem& problem, double lambda,
                        const SolverConfig& config) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    LassoRecursionPolicy policy{problem, lambda, config.threshold,
                                problem.response().squaredNorm()};
    Vector start = make_start_vector(problem, lambda, config.start);
    std::vector<Index> active = detail::nonzero_indices(start);
    return detail::run_penalized_recursion(problem, config, std::move(start), std::move(active),
                                           policy);
}

}  // namespace slog
