#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "slog/bench.hpp"
#include "slog/problem.hpp"

namespace slog {

struct CvPoint {
    double s;
    int fold;  // 1-based
    double mse;
};

// K-fold cross validation over sparsity levels: per fold, the penalty is
// calibrated on the training rows and the mean squared prediction error is
// evaluated on the held-out rows on the original response scale. Fold
// assignment is a seeded permutation dealt round-robin.
std::vector<CvPoint> cross_validate(const RegressionProblem& problem,
                                    const std::vector<double>& s_grid, int folds,
                                    std::uint64_t seed = kDefaultSeed);

// Mean MSE per sparsity level, in s_grid order.
std::vector<std::pair<double, double>> cv_aggregate(const std::vector<CvPoint>& points);

}  // namespace slog
