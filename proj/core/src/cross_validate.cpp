#include "slog/cross_validate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "slog/calibrate.hpp"
#include "slog/coordinate_descent.hpp"
#include "slog/rng.hpp"

namespace slog {

std::vector<CvPoint> cross_validate(const RegressionProblem& problem,
                                    const std::vector<double>& s_grid, int folds,
                                    std::uint64_t seed) {
    const Index n = problem.n_obs();
    if (folds < 2) throw std::invalid_argument("folds must be >= 2");
    if (folds > n) throw std::invalid_argument("folds must not exceed the observation count");
    if (s_grid.empty()) throw std::invalid_argument("s grid must be nonempty");

    // Recover the raw data; the standardization record makes this exact up to
    // rounding.
    const auto& info = problem.standardization();
    Matrix raw_design(n, problem.n_pred());
    for (Index j = 0; j < problem.n_pred(); ++j) {
        raw_design.col(j) =
            problem.design().col(j).array() / info.column_scales[j] + info.column_means[j];
    }
    const Vector raw_response = problem.response().array() + info.response_mean;

    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    RngEngine rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> fold_of(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < perm.size(); ++i) {
        fold_of[static_cast<std::size_t>(perm[i])] = static_cast<int>(i) % folds;
    }

    std::vector<CvPoint> points;
    for (int f = 0; f < folds; ++f) {
        std::vector<Index> train_rows, test_rows;
        for (Index i = 0; i < n; ++i) {
            (fold_of[static_cast<std::size_t>(i)] == f ? test_rows : train_rows).push_back(i);
        }
        if (train_rows.size() < 2) {
            throw std::invalid_argument("training fold too small (need at least 2 rows)");
        }

        const Matrix train_X = raw_design(train_rows, Eigen::all);
        const Vector train_y = raw_response(train_rows);
        const Matrix test_X = raw_design(test_rows, Eigen::all);
        const Vector test_y = raw_response(test_rows);
        const RegressionProblem train = standardize(train_X, train_y);

        for (double s : s_grid) {
            const CalibrationResult calibration = calibrate_lambda(train, SparsityTarget{s});
            Vector coeffs;
            if (calibration.achieved_nonzeros == 0) {
                coeffs = Vector::Zero(train.n_pred());
            } else {
                coeffs = solve_cd(train, calibration.lambda).coefficients;
            }
            const Vector predicted = train.predict_original(test_X, coeffs);
            const double mse =
                (test_y - predicted).squaredNorm() / static_cast<double>(test_y.size());
            points.push_back({s, f + 1, mse});
        }
    }

    // Order by s (grid order), then fold.
    std::vector<CvPoint> ordered;
    ordered.reserve(points.size());
    for (double s : s_grid) {
        for (const CvPoint& point : points) {
            if (point.s == s) ordered.push_back(point);
        }
    }
    return ordered;
}

std::vector<std::pair<double, double>> cv_aggregate(const std::vector<CvPoint>& points) {
    std::vector<std::pair<double, double>> means;
    std::vector<double> seen;
    for (const CvPoint& point : points) {
        if (std::find(seen.begin(), seen.end(), point.s) == seen.end()) seen.push_back(point.s);
    }
    for (double s : seen) {
        double total = 0.0;
        int count = 0;
        for (const CvPoint& point : points) {
            if (point.s == s) {
                total += point.mse;
                ++count;
            }
        }
        means.emplace_back(s, total / count);
    }
    return means;
}

}  // namespace slog
