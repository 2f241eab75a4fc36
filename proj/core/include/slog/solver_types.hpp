#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slog/problem.hpp"

namespace slog {

// Starting-value rules shared by the iterative solvers. The uninformed rule
// is sign(X'y) lambda / p; a coordinate with (X'y)_j == 0 starts at
// +lambda/p * 1e-3 instead of exactly zero, because an exact-zero start
// excludes the coordinate permanently.
struct UninformedStart {};
struct ZeroStart {};
struct ConstantStart {
    double value;
};
struct RandomStart {
    double lower;
    double upper;
    std::uint64_t seed;
};
struct ExplicitStart {
    Vector values;
};
using StartRule = std::variant<UninformedStart, ZeroStart, ConstantStart, RandomStart, ExplicitStart>;

Vector make_start_vector(const RegressionProblem& problem, double lambda, const StartRule& rule);

enum class InversionStrategy { Auto, Naive, Woodbury, Miller };

// Stop-when-as-close-as-reference mode: iterate until
// |b - vector| / |vector| <= distance.
struct ReferenceTarget {
    Vector vector;
    double distance;
};

enum class StopReason {
    StepTolerance,      // relative step d fell below step_tol
    ObjectiveTolerance, // objective change fell below tolerance (CD)
    ReferenceDistance,  // distance-to-reference criterion met
    FixedPoint,         // exact fixed point (no further change possible)
    MaxIterations,      // iteration cap hit without meeting a criterion
    Stalled,            // exact fixed point reached but reference criterion unmet
};

std::string to_string(StopReason reason);

struct TraceEntry {
    double objective;       // penalized objective at this iterate
    double step_distance;   // d = |b_k - b_{k-1}| / |b_{k-1}|
    int active_count;       // nonzero coefficients after this iteration
    double dist_to_reference;  // NaN when no reference is set
};

struct SolverResult {
    Vector coefficients;
    long iterations = 0;
    bool converged = false;
    StopReason reason = StopReason::MaxIterations;
    std::vector<TraceEntry> trace;  // one entry per iteration
    // Opt-in iterate snapshots (iteration number, coefficient vector).
    std::vector<std::pair<long, Vector>> snapshots;
    double wall_seconds = 0.0;
};

struct SolverConfig {
    StartRule start = UninformedStart{};
    double step_tol = 1e-3;
    long max_iter = 1'000'000;
    double threshold = 1e-13;  // theta; 0 disables thresholding
    InversionStrategy inversion = InversionStrategy::Auto;
    std::optional<ReferenceTarget> reference;
    bool retain_iterates = false;
    // Snapshot stride: every iteration up to snapshot_dense_limit, then every
    // snapshot_stride-th, bounding memory on long runs.
    long snapshot_dense_limit = 1000;
    long snapshot_stride = 100;
};

// d(b_new, b_old) = |b_new - b_old|_2 / |b_old|_2, falling back to the
// absolute norm |b_new|_2 when |b_old|_2 < 1e-300.
double relative_step(const Vector& current, const Vector& previous);

// |b - reference| / |reference| (absolute norm when the reference is zero).
double relative_distance(const Vector& b, const Vector& reference);

bool should_snapshot(const SolverConfig& config, long iteration);

}  // namespace slog
