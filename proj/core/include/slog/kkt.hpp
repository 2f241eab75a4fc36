#pragma once

#include <vector>

#include "slog/penalty.hpp"
#include "slog/problem.hpp"

namespace slog {

// First-order optimality report. For the lasso/elastic net the residuals are
// per coordinate; for the group lasso they are per group. active_set always
// lists the nonzero coordinates of the checked vector.
struct KKTReport {
    Vector residuals;
    double max_violation = 0.0;
    std::vector<int> active_set;
    double tolerance = 0.0;
    bool optimal = false;
};

// Stationarity residuals for the penalized objective. Lasso case: an active
// coordinate contributes |x_j'(y - Xb) - lambda sign b_j|, an inactive one
// max(0, |x_j'(y - Xb)| - lambda). Elastic net subtracts the ridge term
// lambda2 b_j from the correlation first; group lasso measures the analogous
// blockwise conditions.
KKTReport kkt_check(const RegressionProblem& problem, const PenaltySpec& penalty, const Vector& b,
                    double tol = 1e-6);

}  // namespace slog
