#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slog/problem.hpp"
#include "slog/simulate.hpp"
#include "slog/solver_types.hpp"

namespace slog {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class Algorithm { Slog, RSlog, Cd, Ista, LaiIrls, ASlog, EnetSlog, GroupSlog, Hybrid };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

enum class ComparisonMode {
    FreeRunning,             // each solver uses its own stopping rule
    MatchReferenceDistance,  // iterate until relative distance to the oracle
                             // solution falls below match_distance
};

struct ExperimentGrid {
    std::vector<double> s_values{0.5};
    std::vector<double> rho_values{0.0};
    std::vector<Index> n_values{100};
    std::vector<Index> p_values{10};
    int replicates = 1;
    std::vector<Algorithm> algorithms{Algorithm::Slog, Algorithm::Cd};
    ComparisonMode mode = ComparisonMode::FreeRunning;
    double match_distance = 1e-3;
    std::uint64_t base_seed = kDefaultSeed;
    CoefficientRule rule = AlternatingRule{};
    double snr = 3.0;

    double step_tol = 1e-3;        // free-running stop for the recursion family
    double theta = 1e-13;          // rSLOG / variant threshold
    double cd_objective_tol = 1e-13;
    long max_iterations = 1'000'000;
    double oracle_tol = 1e-10;     // KKT certification of the reference
    double enet_lambda2 = 0.5;
    Index group_size = 5;          // contiguous groups for GroupSlog
    int jobs = 1;
    bool retain_iterates = false;
};

struct RunRecord {
    double s = 0.0;
    double rho = 0.0;
    Index n = 0;
    Index p = 0;
    int replicate = 0;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::Slog;
    long iterations = 0;
    double wall_seconds = 0.0;   // solver loop only
    double dist_to_ref = 0.0;    // relative L2 distance to the oracle solution
    double kkt_violation = 0.0;
    int nonzeros = 0;
    bool converged = false;
    double lambda = 0.0;         // calibrated penalty for the cell
};

// One record per (cell, replicate, algorithm). Data generation, calibration
// and the oracle run are deterministic per seed; cells may execute in
// parallel when jobs > 1 with identical results.
std::vector<RunRecord> run_grid(const ExperimentGrid& grid);

// Counts of coefficients below the effective-zero cutoff per retained
// iterate snapshot. Throws TraceNotRetained when the run kept no snapshots.
std::vector<std::pair<long, int>> effective_zero_counts(const SolverResult& result,
                                                        double cutoff = 1e-13);

}  // namespace slog
