#include "slog/annealed.hpp"

#include <cmath>
#include <random>

#include "recursion_loop.hpp"
#include "slog/penalty.hpp"

namespace slog {

double sample_inverse_gaussian(double mean, double shape, RngEngine& rng) {
    if (!(mean > 0.0) || !(shape > 0.0)) {
        throw std::invalid_argument("inverse Gaussian needs mean > 0 and shape > 0");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double nu = normal(rng);
    const double w = nu * nu;
    const double x = mean + mean * mean * w / (2.0 * shape) -
                     mean / (2.0 * shape) *
                         std::sqrt(4.0 * mean * shape * w + mean * mean * w * w);
    const double u = uniform(rng);
    if (u <= mean / (mean + x)) return x;
    return mean * mean / x;
}

namespace {

struct AnnealedPolicy {
    const RegressionProblem& problem;
    double lambda;
    double theta;
    double sigma2;
    double decay;
    RngEngine rng;

    Vector diagonal(const Vector& b, const std::vector<Index>& active, long) {
        Vector diag(static_cast<Index>(active.size()));
        if (sigma2 == 0.0) {
            // Degenerate schedule: the weights concentrate at their means and
            // the update coincides with the deterministic recursion.
            for (std::size_t i = 0; i < active.size(); ++i) {
                diag[static_cast<Index>(i)] = lambda / std::abs(b[active[i]]);
            }
        } else {
            const double shape = 1.0 / sigma2;
            for (std::size_t i = 0; i < active.size(); ++i) {
                const double mean = 1.0 / std::abs(b[active[i]]);
                diag[static_cast<Index>(i)] =
                    lambda * sample_inverse_gaussian(mean, shape, rng);
            }
        }
        sigma2 *= decay;
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

SolverResult solve_aslog(const RegressionProblem& problem, double lambda,
                         const AnnealSchedule& schedule, const SolverConfig& config) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (!(schedule.sigma2_init >= 0.0)) throw std::invalid_argument("sigma2_init must be >= 0");
    if (!(schedule.decay > 0.0) || !(schedule.decay < 1.0)) {
        throw std::invalid_argument("decay must lie in (0, 1)");
    }
    AnnealedPolicy policy{problem,        lambda,         config.threshold,
                          schedule.sigma2_init, schedule.decay, RngEngine(schedule.seed)};
    Vector start = make_start_vector(problem, lambda, config.start);
    std::vector<Index> active = detail::nonzero_indices(start);
    return detail::run_penalized_recursion(problem, config, std::move(start), std::move(active),
                                           policy);
}

}  // namespace slog
