#include "slog/lai_irls.hpp"

#include <algorithm>
#include <cmath>

#include "recursion_loop.hpp"
#include "slog/penalty.hpp"

namespace slog {

namespace {

struct LaiPolicy {
    const RegressionProblem& problem;
    double lambda;
    double alpha;
    int h;
    bool force_zero;
    double epsilon;
    std::vector<double>* epsilons;
    std::vector<double> magnitudes;  // scratch

    Vector diagonal(const Vector& b, const std::vector<Index>& active, long) {
        if (force_zero) {
            epsilon = 0.0;
        } else {
            magnitudes.resize(static_cast<std::size_t>(b.size()));
            for (Index j = 0; j < b.size(); ++j) {
                magnitudes[static_cast<std::size_t>(j)] = std::abs(b[j]);
            }
            std::nth_element(magnitudes.begin(), magnitudes.begin() + h, magnitudes.end(),
                             std::greater<double>());
            epsilon = std::min(epsilon, alpha * magnitudes[static_cast<std::size_t>(h)]);
        }
        epsilons->push_back(epsilon);

        Vector diag(static_cast<Index>(active.size()));
        if (epsilon == 0.0) {
            for (std::size_t i = 0; i < active.size(); ++i) {
                diag[static_cast<Index>(i)] = lambda / std::abs(b[active[i]]);
            }
        } else {
            for (std::size_t i = 0; i < active.size(); ++i) {
                const double bj = b[active[i]];
                diag[static_cast<Index>(i)] = lambda / std::sqrt(epsilon * epsilon + bj * bj);
            }
        }
        return diag;
    }

    // No thresholding: IRLS never produces exact zeros while epsilon > 0.
    // Once epsilon reaches zero, an exact-zero coordinate would give an
    // infinite weight, so it is pinned at zero instead.
    void refresh_active(Vector& b, std::vector<Index>& active) const {
        if (epsilon > 0.0) return;
        std::vector<Index> next;
        next.reserve(active.size());
        for (Index j : active) {
            if (b[j] != 0.0) next.push_back(j);
        }
        active.swap(next);
    }

    double objective_at(const Vector& b) const {
        return objective(problem, LassoPenalty{lambda}, b);
    }
};

}  // namespace

LaiResult solve_lai_irls(const RegressionProblem& problem, double lambda, const LaiConfig& config) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (!(config.alpha > 0.0) && !config.force_epsilon_zero) {
        throw std::invalid_argument("alpha must be > 0");
    }
    if (config.sparsity_h < 0 || config.sparsity_h >= problem.n_pred()) {
        throw std::invalid_argument("sparsity_h must lie in [0, p)");
    }
    if (!(config.epsilon_init > 0.0) && !config.force_epsilon_zero) {
        throw std::invalid_argument("epsilon_init must be > 0");
    }

    LaiResult out;
    LaiPolicy policy{problem,
                     lambda,
                     config.alpha,
                     config.sparsity_h,
                     config.force_epsilon_zero,
                     config.epsilon_init,
                     &out.epsilons,
                     {}};

    SolverConfig loop;
    loop.start = config.start;
    loop.step_tol = config.step_tol;
    loop.max_iter = config.max_iter;
    loop.threshold = 0.0;
    loop.inversion = config.inversion;
    loop.retain_iterates = config.retain_iterates;

    Vector start = make_start_vector(problem, lambda, config.start);
    std::vector<Index> active;
    if (config.force_epsilon_zero) {
        active = detail::nonzero_indices(start);
    } else {
        // epsilon > 0 keeps every coordinate in the system, zeros included.
        active.resize(static_cast<std::size_t>(problem.n_pred()));
        for (Index j = 0; j < problem.n_pred(); ++j) active[static_cast<std::size_t>(j)] = j;
    }
    out.result = detail::run_penalized_recursion(problem, loop, std::move(start),
                                                 std::move(active), policy);
    return out;
}

}  // namespace slog
