#include "slog/solver_types.hpp"

#include <random>

#include "slog/penalty.hpp"
#include "slog/rng.hpp"

namespace slog {

Vector make_start_vector(const RegressionProblem& problem, double lambda, const StartRule& rule) {
    const Index p = problem.n_pred();
    if (std::holds_alternative<UninformedStart>(rule)) {
        const Vector q = problem.design().transpose() * problem.response();
        const double base = lambda / static_cast<double>(p);
        Vector b(p);
        for (Index j = 0; j < p; ++j) {
            const double s = sign(q[j]);
            b[j] = s != 0.0 ? s * base : base * 1e-3;
        }
        return b;
    }
    if (std::holds_alternative<ZeroStart>(rule)) {
        return Vector::Zero(p);
    }
    if (const auto* constant = std::get_if<ConstantStart>(&rule)) {
        return Vector::Constant(p, constant->value);
    }
    if (const auto* random = std::get_if<RandomStart>(&rule)) {
        RngEngine rng(random->seed);
        std::uniform_real_distribution<double> dist(random->lower, random->upper);
        Vector b(p);
        for (Index j = 0; j < p; ++j) b[j] = dist(rng);
        return b;
    }
    const auto& expl = std::get<ExplicitStart>(rule);
    if (expl.values.size() != p) {
        throw DimensionMismatch("explicit start length != predictor count");
    }
    return expl.values;
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::StepTolerance: return "step_tolerance";
        case StopReason::ObjectiveTolerance: return "objective_tolerance";
        case StopReason::ReferenceDistance: return "reference_distance";
        case StopReason::FixedPoint: return "fixed_point";
        case StopReason::MaxIterations: return "max_iterations";
        case StopReason::Stalled: return "stalled";
    }
    return "unknown";
}

double relative_step(const Vector& current, const Vector& previous) {
    const double denom = previous.norm();
    const double diff = (current - previous).norm();
    if (denom < 1e-300) return current.norm();
    return diff / denom;
}

double relative_distance(const Vector& b, const Vector& reference) {
    const double denom = reference.norm();
    const double diff = (b - reference).norm();
    if (denom < 1e-300) return diff;
    return diff / denom;
}

bool should_snapshot(const SolverConfig& config, long iteration) {
    if (!config.retain_iterates) return false;
    if (iteration <= config.snapshot_dense_limit) return true;
    return config.snapshot_stride > 0 && iteration % config.snapshot_stride == 0;
}

}  // namespace slog
