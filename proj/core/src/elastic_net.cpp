#include "slog/elastic_net.hpp"

#include <cmath>

#include "recursion_loop.hpp"
#include "slog/penalty.hpp"

namespace slog {

namespace {

struct ElasticNetPolicy {
    const RegressionProblem& problem;
    double lambda1;
    double lambda2;
    double theta;

    Vector diagonal(const Vector& b, const std::vector<Index>& active, long) const {
        Vector diag(static_cast<Index>(active.size()));
        for (std::size_t i = 0; i < active.size(); ++i) {
            diag[static_cast<Index>(i)] = lambda2 + lambda1 / std::abs(b[active[i]]);
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
        return objective(problem, ElasticNetPenalty{lambda1, lambda2}, b);
    }
};

}  // namespace

SolverResult solve_enet_slog(const RegressionProblem& problem, double lambda1, double lambda2,
                             const SolverConfig& config) {
    if (!(lambda1 > 0.0)) throw std::invalid_argument("lambda1 must be > 0");
    if (!(lambda2 >= 0.0)) throw std::invalid_argument("lambda2 must be >= 0");
    ElasticNetPolicy policy{problem, lambda1, lambda2, config.threshold};
    Vector start = make_start_vector(problem, lambda1, config.start);
    std::vector<Index> active = detail::nonzero_indices(start);
    return detail::run_penalized_recursion(problem, config, std::move(start), std::move(active),
                                           policy);
}

}  // namespace slog
