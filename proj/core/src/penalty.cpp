#include "slog/penalty.hpp"

#include <algorithm>
#include <string>

namespace slog {

namespace {

double penalty_term(const PenaltySpec& penalty, const Vector& b) {
    if (const auto* lasso = std::get_if<LassoPenalty>(&penalty)) {
        return 2.0 * lasso->lambda * b.lpNorm<1>();
    }
    if (const auto* enet = std::get_if<ElasticNetPenalty>(&penalty)) {
        return 2.0 * enet->lambda1 * b.lpNorm<1>() + enet->lambda2 * b.squaredNorm();
    }
    const auto& gl = std::get<GroupLassoPenalty>(penalty);
    double total = 0.0;
    for (const auto& group : gl.groups) {
        double ss = 0.0;
        for (int j : group) ss += b[j] * b[j];
        total += std::sqrt(ss);
    }
    return 2.0 * gl.lambda * total;
}

}  // namespace

void validate_penalty(const PenaltySpec& penalty, Index p) {
    if (const auto* lasso = std::get_if<LassoPenalty>(&penalty)) {
        if (!(lasso->lambda > 0.0) || !std::isfinite(lasso->lambda)) {
            throw std::invalid_argument("lasso penalty requires finite lambda > 0");
        }
        return;
    }
    if (const auto* enet = std::get_if<ElasticNetPenalty>(&penalty)) {
        if (!(enet->lambda1 > 0.0) || !std::isfinite(enet->lambda1)) {
            throw std::invalid_argument("elastic net requires finite lambda1 > 0");
        }
        if (!(enet->lambda2 >= 0.0) || !std::isfinite(enet->lambda2)) {
            throw std::invalid_argument("elastic net requires finite lambda2 >= 0");
        }
        return;
    }
    const auto& gl = std::get<GroupLassoPenalty>(penalty);
    if (!(gl.lambda > 0.0) || !std::isfinite(gl.lambda)) {
        throw std::invalid_argument("group lasso requires finite lambda > 0");
    }
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    for (const auto& group : gl.groups) {
        if (group.empty()) {
            throw std::invalid_argument("group lasso groups must be nonempty");
        }
        for (int j : group) {
            if (j < 0 || j >= p) {
                throw std::invalid_argument("group index " + std::to_string(j) + " out of range");
            }
            if (seen[static_cast<std::size_t>(j)]) {
                throw std::invalid_argument("column " + std::to_string(j + 1) +
                                            " appears in more than one group");
            }
            seen[static_cast<std::size_t>(j)] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw std::invalid_argument("groups do not cover every column");
    }
}

double objective(const RegressionProblem& problem, const PenaltySpec& penalty, const Vector& b) {
    if (b.size() != problem.n_pred()) {
        throw DimensionMismatch("coefficient length != predictor count");
    }
    validate_penalty(penalty, problem.n_pred());
    const double rss = (problem.response() - problem.design() * b).squaredNorm();
    return rss + penalty_term(penalty, b);
}

double objective_from_quadratic(double fit_quad, double ynorm2, const PenaltySpec& penalty,
                                const Vector& b) {
    return ynorm2 + fit_quad + penalty_term(penalty, b);
}

}  // namespace slog
