#include "slog/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <optional>

#include "recursion_loop.hpp"
#include "slog/annealed.hpp"
#include "slog/calibrate.hpp"
#include "slog/coordinate_descent.hpp"
#include "slog/elastic_net.hpp"
#include "slog/group_lasso.hpp"
#include "slog/hybrid.hpp"
#include "slog/ista.hpp"
#include "slog/kkt.hpp"
#include "slog/lai_irls.hpp"
#include "slog/rng.hpp"
#include "slog/slog.hpp"

namespace slog {

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Slog: return "slog";
        case Algorithm::RSlog: return "rslog";
        case Algorithm::Cd: return "cd";
        case Algorithm::Ista: return "ista";
        case Algorithm::LaiIrls: return "lai";
        case Algorithm::ASlog: return "aslog";
        case Algorithm::EnetSlog: return "enet-slog";
        case Algorithm::GroupSlog: return "group-slog";
        case Algorithm::Hybrid: return "hybrid";
    }
    return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "slog") return Algorithm::Slog;
    if (name == "rslog") return Algorithm::RSlog;
    if (name == "cd") return Algorithm::Cd;
    if (name == "ista") return Algorithm::Ista;
    if (name == "lai") return Algorithm::LaiIrls;
    if (name == "aslog") return Algorithm::ASlog;
    if (name == "enet-slog") return Algorithm::EnetSlog;
    if (name == "group-slog") return Algorithm::GroupSlog;
    if (name == "hybrid") return Algorithm::Hybrid;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

namespace {

std::vector<std::vector<int>> contiguous_groups(Index p, Index group_size) {
    std::vector<std::vector<int>> groups;
    for (Index start = 0; start < p; start += group_size) {
        std::vector<int> group;
        for (Index j = start; j < std::min(start + group_size, p); ++j) {
            group.push_back(static_cast<int>(j));
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

struct CellTask {
    std::size_t is, irho, in, ip;
    int replicate;
};

std::vector<RunRecord> run_cell(const ExperimentGrid& grid, const CellTask& task) {
    const double s = grid.s_values[task.is];
    const double rho = grid.rho_values[task.irho];
    const Index n = grid.n_values[task.in];
    const Index p = grid.p_values[task.ip];
    const std::uint64_t seed =
        derive_seed(grid.base_seed, {task.is, task.irho, task.in, task.ip,
                                     static_cast<std::uint64_t>(task.replicate)});

    SimulationSpec spec{n, p, rho, grid.rule, grid.snr, seed};
    const SimulatedData data = generate(spec);
    const CalibrationResult calibration = calibrate_lambda(data.problem, SparsityTarget{s});
    const double lambda = calibration.lambda;
    const bool matched = grid.mode == ComparisonMode::MatchReferenceDistance;

    auto base_record = [&](Algorithm algorithm) {
        RunRecord record;
        record.s = s;
        record.rho = rho;
        record.n = n;
        record.p = p;
        record.replicate = task.replicate;
        record.seed = seed;
        record.algorithm = algorithm;
        record.lambda = lambda;
        return record;
    };

    // Reference solutions, computed lazily per penalty family.
    std::optional<Vector> lasso_ref, enet_ref, group_ref;
    const auto groups = contiguous_groups(p, grid.group_size);
    auto get_ref = [&](Algorithm algorithm) -> const Vector& {
        if (algorithm == Algorithm::EnetSlog) {
            if (!enet_ref) {
                enet_ref = solve_ista(data.problem,
                                      ElasticNetPenalty{lambda, grid.enet_lambda2},
                                      grid.oracle_tol);
            }
            return *enet_ref;
        }
        if (algorithm == Algorithm::GroupSlog) {
            if (!group_ref) {
                group_ref = solve_ista(data.problem, GroupLassoPenalty{lambda, groups},
                                       grid.oracle_tol);
            }
            return *group_ref;
        }
        if (!lasso_ref) {
            lasso_ref = solve_ista(data.problem, LassoPenalty{lambda}, grid.oracle_tol);
        }
        return *lasso_ref;
    };

    auto solver_config = [&](Algorithm algorithm, const Vector& reference) {
        SolverConfig config;
        config.start = UninformedStart{};
        config.max_iter = grid.max_iterations;
        config.retain_iterates = grid.retain_iterates;
        config.threshold = algorithm == Algorithm::Slog ? 0.0 : grid.theta;
        if (matched) {
            config.reference = ReferenceTarget{reference, grid.match_distance};
            config.step_tol = 1e-300;
        } else {
            config.step_tol = grid.step_tol;
        }
        return config;
    };

    std::vector<RunRecord> records;
    for (Algorithm algorithm : grid.algorithms) {
        RunRecord record = base_record(algorithm);
        try {
            const Vector& reference = get_ref(algorithm);
            PenaltySpec penalty = LassoPenalty{lambda};
            SolverResult result;
            switch (algorithm) {
                case Algorithm::Slog:
                case Algorithm::RSlog:
                    result = solve_slog(data.problem, lambda, solver_config(algorithm, reference));
                    break;
                case Algorithm::Cd: {
                    CdConfig config;
                    config.objective_tol = grid.cd_objective_tol;
                    config.max_sweeps = grid.max_iterations;
                    config.retain_iterates = grid.retain_iterates;
                    if (matched) {
                        // Single-penalty descent from the uninformed start,
                        // counting sweeps until the reference distance is met.
                        config.lambda_sequence = {lambda};
                        config.start = UninformedStart{};
                        result = solve_cd(data.problem, lambda, config,
                                          ReferenceTarget{reference, grid.match_distance});
                    } else {
                        result = solve_cd(data.problem, lambda, config);
                    }
                    break;
                }
                case Algorithm::Ista: {
                    IstaRun run = solve_ista_traced(data.problem, LassoPenalty{lambda},
                                                    grid.oracle_tol);
                    result.coefficients = std::move(run.coefficients);
                    result.iterations = run.iterations;
                    result.converged = true;
                    result.reason = StopReason::StepTolerance;
                    result.wall_seconds = run.wall_seconds;
                    break;
                }
                case Algorithm::LaiIrls: {
                    LaiConfig config;
                    config.sparsity_h = std::min<int>(static_cast<int>(p) - 1,
                                                      calibration.achieved_nonzeros + 10);
                    config.step_tol = matched ? grid.match_distance * 1e-2 : grid.step_tol;
                    config.max_iter = grid.max_iterations;
                    result = solve_lai_irls(data.problem, lambda, config).result;
                    break;
                }
                case Algorithm::ASlog: {
                    AnnealSchedule schedule;
                    schedule.seed = derive_seed(seed, {0xA51});
                    result = solve_aslog(data.problem, lambda, schedule,
                                         solver_config(algorithm, reference));
                    break;
                }
                case Algorithm::EnetSlog:
                    penalty = ElasticNetPenalty{lambda, grid.enet_lambda2};
                    result = solve_enet_slog(data.problem, lambda, grid.enet_lambda2,
                                             solver_config(algorithm, reference));
                    break;
                case Algorithm::GroupSlog:
                    penalty = GroupLassoPenalty{lambda, groups};
                    result = solve_group_slog(data.problem, lambda, groups,
                                              solver_config(algorithm, reference));
                    break;
                case Algorithm::Hybrid: {
                    BlockPartition partition;
                    const Index half = std::max<Index>(1, p / 2);
                    std::vector<int> first, second;
                    for (Index j = 0; j < p; ++j) {
                        (j < half ? first : second).push_back(static_cast<int>(j));
                    }
                    partition.blocks.push_back(std::move(first));
                    partition.solvers.push_back(BlockSolver::Slog);
                    if (!second.empty()) {
                        partition.blocks.push_back(std::move(second));
                        partition.solvers.push_back(BlockSolver::Cd);
                    }
                    result = solve_hybrid(data.problem, lambda, partition,
                                          solver_config(algorithm, reference));
                    break;
                }
            }
            record.iterations = result.iterations;
            record.wall_seconds = result.wall_seconds;
            record.dist_to_ref = relative_distance(result.coefficients, reference);
            record.kkt_violation =
                kkt_check(data.problem, penalty, result.coefficients).max_violation;
            record.nonzeros = detail::count_nonzero(result.coefficients);
            record.converged = result.converged;
        } catch (const Error&) {
            // Failures are recorded, not fatal.
            record.converged = false;
            record.dist_to_ref = std::numeric_limits<double>::quiet_NaN();
            record.kkt_violation = std::numeric_limits<double>::quiet_NaN();
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace

std::vector<RunRecord> run_grid(const ExperimentGrid& grid) {
    if (grid.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    if (grid.s_values.empty() || grid.rho_values.empty() || grid.n_values.empty() ||
        grid.p_values.empty() || grid.algorithms.empty()) {
        throw std::invalid_argument("grid axes and algorithm list must be nonempty");
    }

    std::vector<CellTask> tasks;
    for (std::size_t is = 0; is < grid.s_values.size(); ++is)
        for (std::size_t irho = 0; irho < grid.rho_values.size(); ++irho)
            for (std::size_t in = 0; in < grid.n_values.size(); ++in)
                for (std::size_t ip = 0; ip < grid.p_values.size(); ++ip)
                    for (int rep = 0; rep < grid.replicates; ++rep)
                        tasks.push_back({is, irho, in, ip, rep});

    std::vector<std::vector<RunRecord>> per_task(tasks.size());
    if (grid.jobs <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) per_task[t] = run_cell(grid, tasks[t]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                per_task[t] = run_cell(grid, tasks[t]);
            }
        };
        std::vector<std::future<void>> pool;
        const int workers = std::min<int>(grid.jobs, static_cast<int>(tasks.size()));
        for (int w = 0; w < workers; ++w) {
            pool.push_back(std::async(std::launch::async, worker));
        }
        for (auto& f : pool) f.get();
    }

    std::vector<RunRecord> records;
    for (auto& chunk : per_task) {
        records.insert(records.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));
    }
    return records;
}

std::vector<std::pair<long, int>> effective_zero_counts(const SolverResult& result,
                                                        double cutoff) {
    if (result.snapshots.empty() && result.iterations > 0) {
        throw TraceNotRetained("run kept no iterate snapshots (enable retain_iterates)");
    }
    std::vector<std::pair<long, int>> counts;
    counts.reserve(result.snapshots.size());
    for (const auto& [iteration, b] : result.snapshots) {
        int below = 0;
        for (Index j = 0; j < b.size(); ++j) below += std::abs(b[j]) < cutoff;
        counts.emplace_back(iteration, below);
    }
    return counts;
}

}  // namespace slog
