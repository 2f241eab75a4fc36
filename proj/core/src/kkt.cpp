#include "slog/kkt.hpp"

#include <cmath>

namespace slog {

KKTReport kkt_check(const RegressionProblem& problem, const PenaltySpec& penalty, const Vector& b,
                    double tol) {
    if (b.size() != problem.n_pred()) {
        throw DimensionMismatch("coefficient length != predictor count");
    }
    validate_penalty(penalty, problem.n_pred());

    const Index p = problem.n_pred();
    const Vector residual = problem.response() - problem.design() * b;
    const Vector corr = problem.design().transpose() * residual;

    KKTReport report;
    report.tolerance = tol;
    for (Index j = 0; j < p; ++j) {
        if (b[j] != 0.0) report.active_set.push_back(static_cast<int>(j));
    }

    if (const auto* lasso = std::get_if<LassoPenalty>(&penalty)) {
        report.residuals.resize(p);
        for (Index j = 0; j < p; ++j) {
            if (b[j] != 0.0) {
                report.residuals[j] = std::abs(corr[j] - lasso->lambda * sign(b[j]));
            } else {
                report.residuals[j] = std::max(0.0, std::abs(corr[j]) - lasso->lambda);
            }
        }
    } else if (const auto* enet = std::get_if<ElasticNetPenalty>(&penalty)) {
        report.residuals.resize(p);
        for (Index j = 0; j < p; ++j) {
            const double g = corr[j] - enet->lambda2 * b[j];
            if (b[j] != 0.0) {
                report.residuals[j] = std::abs(g - enet->lambda1 * sign(b[j]));
            } else {
                report.residuals[j] = std::max(0.0, std::abs(g) - enet->lambda1);
            }
        }
    } else {
        const auto& gl = std::get<GroupLassoPenalty>(penalty);
        report.residuals.resize(static_cast<Index>(gl.groups.size()));
        for (std::size_t m = 0; m < gl.groups.size(); ++m) {
            const auto& group = gl.groups[m];
            double bnorm2 = 0.0;
            for (int j : group) bnorm2 += b[j] * b[j];
            const double bnorm = std::sqrt(bnorm2);
            if (bnorm > 0.0) {
                double viol2 = 0.0;
                for (int j : group) {
                    const double r = corr[j] - gl.lambda * b[j] / bnorm;
                    viol2 += r * r;
                }
                report.residuals[static_cast<Index>(m)] = std::sqrt(viol2);
            } else {
                double gnorm2 = 0.0;
                for (int j : group) gnorm2 += corr[j] * corr[j];
                report.residuals[static_cast<Index>(m)] =
                    std::max(0.0, std::sqrt(gnorm2) - gl.lambda);
            }
        }
    }

    report.max_violation = report.residuals.size() > 0 ? report.residuals.maxCoeff() : 0.0;
    report.optimal = report.max_violation <= tol;
    return report;
}

}  // namespace slog
