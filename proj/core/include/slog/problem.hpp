#pragma once

#include <Eigen/Dense>

#include "slog/errors.hpp"

namespace slog {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Per-column centering/scaling record, kept so fits can be mapped back to the
// original data scale.
struct Standardization {
    Vector column_means;   // length p
    Vector column_scales;  // length p; standardized = (raw - mean) * scale
    double response_mean = 0.0;
};

// A regression dataset in solver-ready form: every design column is centered
// and scaled so its squared norm equals the number of rows, and the response
// is centered. Immutable after construction.
class RegressionProblem {
public:
    // Wraps data that is already standardized. Validates the invariants and
    // throws std::invalid_argument if they do not hold.
    static RegressionProblem from_standardized(Matrix design, Vector response,
                                               Standardization standardization);

    const Matrix& design() const { return design_; }
    const Vector& response() const { return response_; }
    const Standardization& standardization() const { return standardization_; }

    Index n_obs() const { return design_.rows(); }
    Index n_pred() const { return design_.cols(); }

    // Back-transformation of standardized-scale coefficients.
    Vector coefficients_original_scale(const Vector& b) const;
    double intercept_original_scale(const Vector& b) const;

    // Fitted values on the original response scale for raw (unstandardized)
    // predictor rows.
    Vector predict_original(const Matrix& raw_design, const Vector& b) const;

private:
    RegressionProblem(Matrix design, Vector response, Standardization standardization)
        : design_(std::move(design)),
          response_(std::move(response)),
          standardization_(std::move(standardization)) {}

    Matrix design_;
    Vector response_;
    Standardization standardization_;
};

// Centers and scales the raw data. Scaling targets sum-of-squares == n per
// column. Throws ConstantColumn for zero-variance columns and
// DimensionMismatch if the response length differs from the row count.
// Idempotent: applying it to its own output returns the input bitwise.
RegressionProblem standardize(const Matrix& raw_design, const Vector& raw_response);

}  // namespace slog
