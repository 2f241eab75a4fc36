#include "slog/group_lasso.hpp"

#include <algorithm>
#include <cmath>

#include "recursion_loop.hpp"
#include "slog/penalty.hpp"

namespace slog {

namespace {

struct GroupPolicy {
    const RegressionProblem& problem;
    double lambda;
    double theta;
    const std::vector<std::vector<int>>& groups;
    std::vector<int> group_of;       // column -> group
    std::vector<char> group_active;
    std::vector<double> norms;       // scratch, one per group

    void compute_norms(const Vector& b) {
        norms.assign(groups.size(), 0.0);
        for (std::size_t m = 0; m < groups.size(); ++m) {
            if (!group_active[m]) continue;
            double ss = 0.0;
            for (int j : groups[m]) ss += b[j] * b[j];
            norms[m] = std::sqrt(ss);
        }
    }

    Vector diagonal(const Vector& b, const std::vector<Index>& active, long) {
        compute_norms(b);
        Vector diag(static_cast<Index>(active.size()));
        for (std::size_t i = 0; i < active.size(); ++i) {
            diag[static_cast<Index>(i)] =
                lambda / norms[static_cast<std::size_t>(group_of[active[i]])];
        }
        return diag;
    }

    void refresh_active(Vector& b, std::vector<Index>& active) {
        bool dropped = false;
        for (std::size_t m = 0; m < groups.size(); ++m) {
            if (!group_active[m]) continue;
            double ss = 0.0;
            for (int j : groups[m]) ss += b[j] * b[j];
            if (std::sqrt(ss) <= theta) {
                for (int j : groups[m]) b[j] = 0.0;
                group_active[m] = 0;
                dropped = true;
            }
        }
        if (dropped) {
            active.clear();
            for (std::size_t m = 0; m < groups.size(); ++m) {
                if (!group_active[m]) continue;
                for (int j : groups[m]) active.push_back(j);
            }
            std::sort(active.begin(), active.end());
        }
    }

    double objective_at(const Vector& b) const {
        return objective(problem, GroupLassoPenalty{lambda, groups}, b);
    }
};

}  // namespace

SolverResult solve_group_slog(const RegressionProblem& problem, double lambda,
                              const std::vector<std::vector<int>>& groups,
                              const SolverConfig& config) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    validate_penalty(GroupLassoPenalty{lambda, groups}, problem.n_pred());

    GroupPolicy policy{problem, lambda, config.threshold, groups, {}, {}, {}};
    policy.group_of.resize(static_cast<std::size_t>(problem.n_pred()));
    for (std::size_t m = 0; m < groups.size(); ++m) {
        for (int j : groups[m]) policy.group_of[static_cast<std::size_t>(j)] = static_cast<int>(m);
    }

    Vector start = make_start_vector(problem, lambda, config.start);
    policy.group_active.assign(groups.size(), 0);
    std::vector<Index> active;
    for (std::size_t m = 0; m < groups.size(); ++m) {
        double ss = 0.0;
        for (int j : groups[m]) ss += start[j] * start[j];
        if (ss > 0.0) {
            policy.group_active[m] = 1;
            for (int j : groups[m]) active.push_back(j);
        } else {
            for (int j : groups[m]) start[j] = 0.0;
        }
    }
    std::sort(active.begin(), active.end());
    return detail::run_penalized_recursion(problem, config, std::move(start), std::move(active),
                                           policy);
}

}  // namespace slog
