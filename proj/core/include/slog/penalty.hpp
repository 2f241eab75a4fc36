#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "slog/problem.hpp"

namespace slog {

struct LassoPenalty {
    double lambda;
};

struct ElasticNetPenalty {
    double lambda1;
    double lambda2;
};

// Groups partition column indices {0, ..., p-1}; every column belongs to
// exactly one group and every group is nonempty.
struct GroupLassoPenalty {
    double lambda;
    std::vector<std::vector<int>> groups;
};

using PenaltySpec = std::variant<LassoPenalty, ElasticNetPenalty, GroupLassoPenalty>;

// Throws std::invalid_argument on nonpositive strengths or an invalid group
// partition.
void validate_penalty(const PenaltySpec& penalty, Index p);

// sign with sign(0) == 0, the convention used throughout.
inline double sign(double x) noexcept { return (x > 0.0) - (x < 0.0); }

// sth(a, c) = (a - c sign a) 1(|a| > c)
inline double soft_threshold(double a, double c) noexcept {
    const double mag = std::abs(a) - c;
    return mag > 0.0 ? sign(a) * mag : 0.0;
}

// Penalized least-squares objective in minimized form:
//   lasso        |y - Xb|^2 + 2 lambda |b|_1
//   elastic net  |y - Xb|^2 + 2 lambda1 |b|_1 + lambda2 |b|_2^2
//   group lasso  |y - Xb|^2 + 2 lambda sum_m |b_(m)|_2
double objective(const RegressionProblem& problem, const PenaltySpec& penalty, const Vector& b);

// Same objective evaluated from precomputed pieces: fit_quad = b'Gb - 2 q'b
// with G = X'X and q = X'y, ynorm2 = |y|^2. Used by solver loops that already
// track G b.
double objective_from_quadratic(double fit_quad, double ynorm2, const PenaltySpec& penalty,
                                const Vector& b);

}  // namespace slog
