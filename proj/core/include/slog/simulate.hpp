#pragma once

#include <cstdint>
#include <variant>

#include "slog/problem.hpp"
#include "slog/rng.hpp"

namespace slog {

// Coefficient rules for synthetic data. Alternating is
// beta_j = (-1)^j exp(-(j-1)/10) with 1-based j; SubsetConstant sets the
// first round(fraction*p) coefficients to value and the rest to zero.
struct AlternatingRule {};
struct ConstantRule {
    double value;
};
struct SubsetConstantRule {
    double fraction;
    double value;
};
struct UniformRule {
    double lower;
    double upper;
};
using CoefficientRule = std::variant<AlternatingRule, ConstantRule, SubsetConstantRule, UniformRule>;

struct SimulationSpec {
    Index n = 100;
    Index p = 10;
    double rho = 0.0;  // pairwise correlation, in [0, 1)
    CoefficientRule rule = AlternatingRule{};
    double snr = 3.0;
    std::uint64_t seed = 0;
};

struct SimulatedData {
    Matrix raw_design;
    Vector raw_response;
    Vector true_coefficients;
    double noise_scale = 0.0;  // k in y = X beta + k eta
    RegressionProblem problem; // standardized form of the raw data
};

// Materializes the coefficient rule; rng is consumed only by UniformRule.
Vector coefficient_vector(const CoefficientRule& rule, Index p, RngEngine& rng);

// Rows of X are i.i.d. mean-zero Gaussian with equicorrelation matrix
// (1-rho) I + rho 11' (shared-factor construction sqrt(rho) z + sqrt(1-rho) eps).
// The noise scale k is set so sd(X beta) / k == snr. Deterministic given the
// seed; draw order is beta (UniformRule only), then z/eps row by row, then
// the noise vector.
SimulatedData generate(const SimulationSpec& spec);

}  // namespace slog
