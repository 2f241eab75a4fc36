#include "slog/problem.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace slog {

namespace {

void validate_standardized(const Matrix& X, const Vector& y) {
    const Index n = X.rows();
    const Index p = X.cols();
    if (n < 1 || p < 1) {
        throw std::invalid_argument("standardized problem needs n >= 1 and p >= 1");
    }
    if (y.size() != n) {
        throw DimensionMismatch("response length " + std::to_string(y.size()) +
                                " != row count " + std::to_string(n));
    }
    const double nd = static_cast<double>(n);
    if (std::abs(y.sum()) > 1e-10 * nd) {
        throw std::invalid_argument("response is not centered");
    }
    for (Index j = 0; j < p; ++j) {
        const double ss = X.col(j).squaredNorm();
        if (ss == 0.0) {
            throw std::invalid_argument("column " + std::to_string(j + 1) + " is identically zero");
        }
        if (std::abs(ss - nd) > 1e-8 * nd) {
            throw std::invalid_argument("column " + std::to_string(j + 1) +
                                        " has squared norm " + std::to_string(ss) +
                                        ", expected " + std::to_string(nd));
        }
    }
}

}  // namespace

RegressionProblem RegressionProblem::from_standardized(Matrix design, Vector response,
                                                       Standardization standardization) {
    validate_standardized(design, response);
    if (standardization.column_means.size() != design.cols() ||
        standardization.column_scales.size() != design.cols()) {
        throw DimensionMismatch("standardization record does not match column count");
    }
    return RegressionProblem(std::move(design), std::move(response), std::move(standardization));
}

Vector RegressionProblem::coefficients_original_scale(const Vector& b) const {
    if (b.size() != n_pred()) {
        throw DimensionMismatch("coefficient length != predictor count");
    }
    return b.cwiseProduct(standardization_.column_scales);
}

double RegressionProblem::intercept_original_scale(const Vector& b) const {
    const Vector orig = coefficients_original_scale(b);
    return standardization_.response_mean - orig.dot(standardization_.column_means);
}

Vector RegressionProblem::predict_original(const Matrix& raw_design, const Vector& b) const {
    if (raw_design.cols() != n_pred()) {
        throw DimensionMismatch("prediction design has wrong column count");
    }
    const Vector orig = coefficients_original_scale(b);
    return (raw_design * orig).array() + intercept_original_scale(b);
}

RegressionProblem standardize(const Matrix& raw_design, const Vector& raw_response) {
    const Index n = raw_design.rows();
    const Index p = raw_design.cols();
    if (n < 2) {
        throw std::invalid_argument("standardize needs at least 2 observations");
    }
    if (p < 1) {
        throw std::invalid_argument("standardize needs at least 1 predictor");
    }
    if (raw_response.size() != n) {
        throw DimensionMismatch("response length " + std::to_string(raw_response.size()) +
                                " != row count " + std::to_string(n));
    }

    const double nd = static_cast<double>(n);
    Matrix X = raw_design;
    Vector means(p);
    Vector scales(p);

    for (Index j = 0; j < p; ++j) {
        double mean = X.col(j).mean();
        // Snap a numerically-zero mean to exact zero so that standardizing
        // already-standardized data is the identity bitwise.
        const double rms = std::sqrt(X.col(j).squaredNorm() / nd);
        if (std::abs(mean) <= 1e-14 * rms) {
            mean = 0.0;
        }
        if (mean != 0.0) {
            X.col(j).array() -= mean;
        }
        const double ss = X.col(j).squaredNorm();
        if (ss <= std::numeric_limits<double>::min()) {
            throw ConstantColumn(static_cast<int>(j));
        }
        double scale = std::sqrt(nd / ss);
        if (std::abs(ss - nd) <= 1e-13 * nd) {
            scale = 1.0;
        }
        if (scale != 1.0) {
            X.col(j) *= scale;
        }
        means[j] = mean;
        scales[j] = scale;
    }

    Vector y = raw_response;
    double ymean = y.mean();
    const double yrms = std::sqrt(y.squaredNorm() / nd);
    if (yrms == 0.0 || std::abs(ymean) <= 1e-14 * yrms) {
        ymean = 0.0;
    }
    if (ymean != 0.0) {
        y.array() -= ymean;
    }

    Standardization info{std::move(means), std::move(scales), ymean};
    return RegressionProblem::from_standardized(std::move(X), std::move(y), std::move(info));
}

}  // namespace slog
