#include "slog/ista.hpp"

#include <chrono>
#include <cmath>

namespace slog {

namespace {

double largest_eigenvalue(const Matrix& gram) {
    const Index p = gram.rows();
    Vector v(p);
    for (Index j = 0; j < p; ++j) v[j] = 1.0 + 1e-3 * static_cast<double>(j);
    v.normalize();
    double eig = 0.0;
    for (int it = 0; it < 2000; ++it) {
        Vector w = gram * v;
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        w /= norm;
        const double eig_new = w.dot(gram * w);
        const bool settled = std::abs(eig_new - eig) <= 1e-13 * std::abs(eig_new);
        eig = eig_new;
        v = std::move(w);
        if (settled && it > 4) break;
    }
    return eig;
}

void apply_prox(const PenaltySpec& penalty, double step, Vector& v) {
    if (const auto* lasso = std::get_if<LassoPenalty>(&penalty)) {
        const double cut = 2.0 * lasso->lambda * step;
        for (Index j = 0; j < v.size(); ++j) v[j] = soft_threshold(v[j], cut);
        return;
    }
    if (const auto* enet = std::get_if<ElasticNetPenalty>(&penalty)) {
        const double cut = 2.0 * enet->lambda1 * step;
        for (Index j = 0; j < v.size(); ++j) v[j] = soft_threshold(v[j], cut);
        return;
    }
    const auto& gl = std::get<GroupLassoPenalty>(penalty);
    const double cut = 2.0 * gl.lambda * step;
    for (const auto& group : gl.groups) {
        double norm2 = 0.0;
        for (int j : group) norm2 += v[j] * v[j];
        const double norm = std::sqrt(norm2);
        const double factor = norm > cut ? 1.0 - cut / norm : 0.0;
        for (int j : group) v[j] *= factor;
    }
}

}  // namespace

// Accelerated proximal gradient. Momentum restarts on the gradient-scheme
// criterion (the update turning against the previous direction), and the
// objective is watched at every certification checkpoint as a guard: if it
// rose since the last checkpoint, the momentum is reset and the step is
// halved. The returned point is always KKT-certified.
IstaRun solve_ista_traced(const RegressionProblem& problem, const PenaltySpec& penalty, double tol,
                          const IstaOptions& options) {
    validate_penalty(penalty, problem.n_pred());
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");

    const auto t0 = std::chrono::steady_clock::now();
    const Matrix gram = problem.design().transpose() * problem.design();
    const Vector q = problem.design().transpose() * problem.response();
    const double ynorm2 = problem.response().squaredNorm();

    const double ridge = std::holds_alternative<ElasticNetPenalty>(penalty)
                             ? std::get<ElasticNetPenalty>(penalty).lambda2
                             : 0.0;
    const double lipschitz = 2.0 * largest_eigenvalue(gram) + 2.0 * ridge;
    if (!(lipschitz > 0.0)) throw std::invalid_argument("degenerate design: zero Lipschitz bound");
    double step = 1.0 / lipschitz;

    const Index p = problem.n_pred();
    Vector x = Vector::Zero(p);
    Vector x_prev = x;
    Vector extrapolated = x;
    double momentum = 1.0;

    auto objective_of = [&](const Vector& b) {
        double quad = b.dot(gram * b) - 2.0 * q.dot(b);
        return objective_from_quadratic(quad, ynorm2, penalty, b);
    };

    double guard_objective = objective_of(x);

    IstaRun run;
    Vector grad(p);
    for (long k = 1; k <= options.max_iter; ++k) {
        grad.noalias() = 2.0 * (gram * extrapolated - q);
        if (ridge > 0.0) grad += 2.0 * ridge * extrapolated;
        Vector candidate = extrapolated - step * grad;
        apply_prox(penalty, step, candidate);

        // Restart when the step turns against the travel direction.
        const bool restart = (extrapolated - candidate).dot(candidate - x) > 0.0;
        x_prev.swap(x);
        x = std::move(candidate);
        if (restart) {
            momentum = 1.0;
            extrapolated = x;
        } else {
            const double momentum_next =
                0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
            extrapolated = x + ((momentum - 1.0) / momentum_next) * (x - x_prev);
            momentum = momentum_next;
        }
        run.iterations = k;

        if (k % options.kkt_check_every == 0 || k == 1) {
            const double objective_now = objective_of(x);
            if (objective_now > guard_objective + 1e-12 * (1.0 + std::abs(guard_objective))) {
                // The 1/L estimate proved too optimistic: damp and restart.
                step *= 0.5;
                momentum = 1.0;
                extrapolated = x;
            }
            guard_objective = std::min(guard_objective, objective_now);
            const KKTReport report = kkt_check(problem, penalty, x, tol);
            run.kkt_violation = report.max_violation;
            if (report.optimal) {
                run.coefficients = std::move(x);
                const auto t1 = std::chrono::steady_clock::now();
                run.wall_seconds =
                    std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
                return run;
            }
        }
    }
    throw NotConvergedError("proximal-gradient oracle did not certify within " +
                            std::to_string(options.max_iter) + " iterations");
}

Vector solve_ista(const RegressionProblem& problem, const PenaltySpec& penalty, double tol,
                  const IstaOptions& options) {
    return solve_ista_traced(problem, penalty, tol, options).coefficients;
}

}  // namespace slog
