#include "slog/calibrate.hpp"

#include <algorithm>
#include <cmath>

#include "recursion_loop.hpp"
#include "slog/coordinate_descent.hpp"
#include "slog/errors.hpp"

namespace slog {

int SparsityTarget::implied_count(Index n, Index p) const {
    return static_cast<int>(std::llround((1.0 - s) * static_cast<double>(std::min(n, p))));
}

namespace {

constexpr double kLooseTol = 1e-11;  // support bracketing
constexpr double kTightTol = 1e-13;  // final counts

struct ProbeResult {
    int count;
    Vector solution;
};

// Single-penalty descent warm-started from a nearby solution.
ProbeResult probe(const RegressionProblem& problem, double lambda, const Vector& warm,
                  double objective_tol) {
    CdConfig config;
    config.lambda_sequence = {lambda};
    config.objective_tol = objective_tol;
    config.max_sweeps = 300'000;
    config.start = ExplicitStart{warm};
    SolverResult fit = solve_cd(problem, lambda, config);
    return ProbeResult{detail::count_nonzero(fit.coefficients), std::move(fit.coefficients)};
}

}  // namespace

CalibrationResult calibrate_lambda(const RegressionProblem& problem, const SparsityTarget& target) {
    if (!(target.s >= 0.0) || !(target.s <= 1.0)) {
        throw std::invalid_argument("sparsity level must lie in [0, 1]");
    }
    const double lmax = lambda_max(problem);
    if (!(lmax > 0.0)) {
        throw UnachievableSparsity("X'y = 0: every positive penalty yields the zero solution");
    }
    const int wanted = target.implied_count(problem.n_obs(), problem.n_pred());

    CalibrationResult result;
    if (wanted == 0) {
        result.lambda = lmax;
        result.achieved_nonzeros = 0;
        result.evaluated.emplace_back(lmax, 0);
        return result;
    }

    // Phase 1: warm-chained descent down a log grid with loose probes, until
    // the wanted count is bracketed.
    constexpr int kGridPoints = 40;
    constexpr double kFloorRatio = 1e-12;
    const double grid_step = std::exp(std::log(kFloorRatio) / kGridPoints);
    Vector warm = Vector::Zero(problem.n_pred());
    double hi = lmax;  // tight count < wanted here (verified below)
    double lo = 0.0;   // tight count >= wanted here (verified below)
    result.evaluated.emplace_back(lmax, 0);
    {
        double lam = lmax;
        for (int g = 1; g <= kGridPoints; ++g) {
            lam *= grid_step;
            ProbeResult pr = probe(problem, lam, warm, kLooseTol);
            result.evaluated.emplace_back(lam, pr.count);
            warm = std::move(pr.solution);
            if (pr.count >= wanted) {
                lo = lam;
                break;
            }
            hi = lam;
        }
    }
    if (lo == 0.0) {
        throw UnachievableSparsity("no penalty down to lambda_max*1e-12 attains " +
                                   std::to_string(wanted) + " nonzero coefficients");
    }

    // Phase 2: re-establish the bracket with tight probes (loose counts can
    // be off by a few near dense transitions), then bisect geometrically.
    ProbeResult tight_lo = probe(problem, lo, warm, kTightTol);
    for (int step = 0; tight_lo.count < wanted && step < 16; ++step) {
        lo *= 0.4;
        tight_lo = probe(problem, lo, tight_lo.solution, kTightTol);
    }
    if (tight_lo.count < wanted) {
        throw UnachievableSparsity("tight probes never reach " + std::to_string(wanted) +
                                   " nonzero coefficients");
    }

    double best_lambda = lo;
    int best_count = tight_lo.count;
    double plateau_lambda = tight_lo.count == wanted ? lo : 0.0;
    Vector plateau_warm = tight_lo.count == wanted ? tight_lo.solution : Vector();
    Vector warm_mid = std::move(tight_lo.solution);

    int budget = 160;
    while (plateau_lambda == 0.0 && budget-- > 0 && hi / lo > 1.0 + 1e-12) {
        const double mid = std::sqrt(lo * hi);
        ProbeResult pr = probe(problem, mid, warm_mid, kTightTol);
        warm_mid = pr.solution;
        const bool better = std::abs(pr.count - wanted) < std::abs(best_count - wanted) ||
                            (std::abs(pr.count - wanted) == std::abs(best_count - wanted) &&
                             pr.count < best_count);
        if (better) {
            best_lambda = mid;
            best_count = pr.count;
        }
        if (pr.count == wanted) {
            plateau_lambda = mid;
            plateau_warm = std::move(pr.solution);
        } else if (pr.count > wanted) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    if (plateau_lambda == 0.0) {
        if (std::abs(best_count - wanted) <= 1) {
            result.lambda = best_lambda;
            result.achieved_nonzeros = best_count;
            return result;
        }
        throw UnachievableSparsity("bisection could not attain " + std::to_string(wanted) +
                                   " +-1 nonzero coefficients (closest: " +
                                   std::to_string(best_count) + ")");
    }

    // Phase 3: locate both edges of the exact-count plateau and sit in the
    // geometric middle, keeping the boundary coordinate well away from its
    // activation threshold.
    if (lo == plateau_lambda) lo = plateau_lambda * grid_step;
    double edge_hi_in = plateau_lambda, edge_hi_out = hi;
    Vector warm_edge = plateau_warm;
    for (int i = 0; i < 30 && edge_hi_out / edge_hi_in > 1.0 + 1e-6; ++i) {
        const double mid = std::sqrt(edge_hi_in * edge_hi_out);
        ProbeResult pr = probe(problem, mid, warm_edge, kTightTol);
        warm_edge = std::move(pr.solution);
        if (pr.count == wanted) {
            edge_hi_in = mid;
        } else {
            edge_hi_out = mid;
        }
    }
    double edge_lo_in = plateau_lambda, edge_lo_out = lo;
    warm_edge = plateau_warm;
    for (int i = 0; i < 30 && edge_lo_in / edge_lo_out > 1.0 + 1e-6; ++i) {
        const double mid = std::sqrt(edge_lo_in * edge_lo_out);
        ProbeResult pr = probe(problem, mid, warm_edge, kTightTol);
        warm_edge = std::move(pr.solution);
        if (pr.count == wanted) {
            edge_lo_in = mid;
        } else {
            edge_lo_out = mid;
        }
    }

    const double centered = std::sqrt(edge_hi_in * edge_lo_in);
    const ProbeResult final_probe = probe(problem, centered, plateau_warm, kTightTol);
    if (std::abs(final_probe.count - wanted) <= 1) {
        result.lambda = centered;
        result.achieved_nonzeros = final_probe.count;
        return result;
    }
    // Fall back to the bisection hit, which was verified tight already.
    result.lambda = plateau_lambda;
    result.achieved_nonzeros = wanted;
    return result;
}

}  // namespace slog
