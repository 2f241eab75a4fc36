#include "slog/simulate.hpp"

#include <cmath>
#include <random>

namespace slog {

Vector coefficient_vector(const CoefficientRule& rule, Index p, RngEngine& rng) {
    Vector beta(p);
    if (std::holds_alternative<AlternatingRule>(rule)) {
        for (Index j = 0; j < p; ++j) {
            const double magnitude = std::exp(-static_cast<double>(j) / 10.0);
            beta[j] = (j % 2 == 0 ? -1.0 : 1.0) * magnitude;  // 1-based j odd -> negative
        }
        return beta;
    }
    if (const auto* constant = std::get_if<ConstantRule>(&rule)) {
        beta.setConstant(constant->value);
        return beta;
    }
    if (const auto* subset = std::get_if<SubsetConstantRule>(&rule)) {
        if (!(subset->fraction >= 0.0) || !(subset->fraction <= 1.0)) {
            throw std::invalid_argument("subset fraction must lie in [0, 1]");
        }
        const Index count = static_cast<Index>(
            std::llround(subset->fraction * static_cast<double>(p)));
        beta.setZero();
        for (Index j = 0; j < std::min(count, p); ++j) beta[j] = subset->value;
        return beta;
    }
    const auto& uniform = std::get<UniformRule>(rule);
    std::uniform_real_distribution<double> dist(uniform.lower, uniform.upper);
    for (Index j = 0; j < p; ++j) beta[j] = dist(rng);
    return beta;
}

SimulatedData generate(const SimulationSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("simulation needs n >= 2");
    if (spec.p < 1) throw std::invalid_argument("simulation needs p >= 1");
    if (!(spec.rho >= 0.0) || !(spec.rho < 1.0)) {
        throw std::invalid_argument("rho must lie in [0, 1)");
    }
    if (!(spec.snr > 0.0)) throw std::invalid_argument("snr must be > 0");

    RngEngine rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    Vector beta = coefficient_vector(spec.rule, spec.p, rng);

    Matrix X(spec.n, spec.p);
    const double shared = std::sqrt(spec.rho);
    const double idio = std::sqrt(1.0 - spec.rho);
    for (Index i = 0; i < spec.n; ++i) {
        const double z = normal(rng);
        for (Index j = 0; j < spec.p; ++j) {
            X(i, j) = shared * z + idio * normal(rng);
        }
    }

    const Vector signal = X * beta;
    const double mean = signal.mean();
    const double sd = std::sqrt((signal.array() - mean).square().sum() /
                                static_cast<double>(spec.n - 1));
    const double k = sd > 0.0 ? sd / spec.snr : 0.0;

    Vector y(spec.n);
    for (Index i = 0; i < spec.n; ++i) y[i] = signal[i] + k * normal(rng);

    RegressionProblem problem = standardize(X, y);
    return SimulatedData{std::move(X), std::move(y), std::move(beta), k, std::move(problem)};
}

}  // namespace slog
