#include "slog/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slog/penalty.hpp"
#include "slog/slog.hpp"

namespace slog {

namespace {

constexpr double kOrthogonalityCutoff = 1e-10;

void validate_partition(const BlockPartition& partition, Index p) {
    if (partition.blocks.empty()) throw std::invalid_argument("partition has no blocks");
    if (partition.solvers.size() != partition.blocks.size()) {
        throw std::invalid_argument("one solver choice per block required");
    }
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    for (const auto& block : partition.blocks) {
        if (block.empty()) throw std::invalid_argument("blocks must be nonempty");
        for (int j : block) {
            if (j < 0 || j >= p) {
                throw std::invalid_argument("block index " + std::to_string(j) + " out of range");
            }
            if (seen[static_cast<std::size_t>(j)]) {
                throw std::invalid_argument("column " + std::to_string(j + 1) +
                                            " appears in more than one block");
            }
            seen[static_cast<std::size_t>(j)] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw std::invalid_argument("blocks do not cover every column");
    }
}

RegressionProblem block_problem(const RegressionProblem& problem, const std::vector<int>& block) {
    const auto& full = problem.standardization();
    Standardization sub;
    sub.column_means.resize(static_cast<Index>(block.size()));
    sub.column_scales.resize(static_cast<Index>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i) {
        sub.column_means[static_cast<Index>(i)] = full.column_means[block[i]];
        sub.column_scales[static_cast<Index>(i)] = full.column_scales[block[i]];
    }
    sub.response_mean = full.response_mean;
    return RegressionProblem::from_standardized(problem.design()(Eigen::all, block),
                                                problem.response(), std::move(sub));
}

}  // namespace

SolverResult solve_hybrid(const RegressionProblem& problem, double lambda,
                          const BlockPartition& partition, const SolverConfig& config,
                          const CdConfig& cd_config) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    validate_partition(partition, problem.n_pred());

    const Index p = problem.n_pred();
    Vector combined = Vector::Zero(p);
    SolverResult out;
    out.converged = true;
    double wall = 0.0;
    long iterations = 0;

    for (std::size_t m = 0; m < partition.blocks.size(); ++m) {
        const auto& block = partition.blocks[m];
        const RegressionProblem sub = block_problem(problem, block);
        SolverResult sub_result = partition.solvers[m] == BlockSolver::Slog
                                      ? solve_slog(sub, lambda, config)
                                      : solve_cd(sub, lambda, cd_config);
        for (std::size_t i = 0; i < block.size(); ++i) {
            combined[block[i]] = sub_result.coefficients[static_cast<Index>(i)];
        }
        iterations += sub_result.iterations;
        wall += sub_result.wall_seconds;
        out.converged = out.converged && sub_result.converged;
        out.trace.insert(out.trace.end(), sub_result.trace.begin(), sub_result.trace.end());
    }

    // Block-orthogonal designs decompose exactly, so the concatenation is the
    // full-problem solution.
    double max_cross = 0.0;
    for (std::size_t a = 0; a + 1 < partition.blocks.size() && max_cross <= kOrthogonalityCutoff;
         ++a) {
        const Matrix Xa = problem.design()(Eigen::all, partition.blocks[a]);
        for (std::size_t c = a + 1; c < partition.blocks.size(); ++c) {
            const Matrix cross =
                Xa.transpose() * problem.design()(Eigen::all, partition.blocks[c]);
            max_cross = std::max(max_cross, cross.cwiseAbs().maxCoeff());
            if (max_cross > kOrthogonalityCutoff) break;
        }
    }

    if (max_cross <= kOrthogonalityCutoff) {
        out.coefficients = std::move(combined);
        out.iterations = iterations;
        out.reason = out.converged ? StopReason::StepTolerance : StopReason::MaxIterations;
        out.wall_seconds = std::max(wall, 1e-9);
        return out;
    }

    // Correlated blocks: block fits only seed the full solve. Coordinates
    // zeroed inside a block may be nonzero in the full problem, so they
    // restart at a small sign-informed value.
    const Vector residual = problem.response() - problem.design() * combined;
    const Vector corr = problem.design().transpose() * residual;
    const double restart = std::max(config.threshold * 1e3, 1e-6);
    Vector start = combined;
    for (Index j = 0; j < p; ++j) {
        if (start[j] == 0.0) start[j] = sign(corr[j]) * restart;
    }

    SolverConfig full_config = config;
    full_config.start = ExplicitStart{std::move(start)};
    SolverResult final_pass = solve_slog(problem, lambda, full_config);

    out.coefficients = std::move(final_pass.coefficients);
    out.iterations = iterations + final_pass.iterations;
    out.converged = final_pass.converged;
    out.reason = final_pass.reason;
    out.trace.insert(out.trace.end(), final_pass.trace.begin(), final_pass.trace.end());
    out.snapshots = std::move(final_pass.snapshots);
    out.wall_seconds = std::max(wall + final_pass.wall_seconds, 1e-9);
    return out;
}

}  // namespace slog
