#include <doctest.h>

#include <cmath>

#include "slog/coordinate_descent.hpp"
#include "slog/ista.hpp"
#include "slog/kkt.hpp"
#include "slog/one_dim.hpp"
#include "slog/penalty.hpp"
#include "slog/slog.hpp"
#include "support/test_problems.hpp"

using namespace slog;
using slog_test::random_problem;

TEST_CASE("the zero vector is a fixed point") {
    const auto problem = random_problem(101, 20, 5);
    SlogState state = make_slog_state(Vector::Zero(5));
    const SlogState next = slog_update(problem, 1.0, state);
    CHECK(next.b.isZero(0.0));
    CHECK(next.active.empty());
}

TEST_CASE("the exact solution is a fixed point of the update") {
    for (std::uint64_t seed : {201u, 202u, 203u, 204u}) {
        const auto problem = random_problem(seed, 18, 4, 0.4);
        const double lmax = lambda_max(problem);
        const double lambda = 0.35 * lmax;
        const Vector exact = slog_test::enumerate_lasso(problem, lambda);
        if (exact.isZero(0.0)) continue;
        const SlogState state = make_slog_state(exact);
        const SlogState next = slog_update(problem, lambda, state);
        CHECK((next.b - exact).norm() <= 1e-8 * exact.norm());
    }
}

TEST_CASE("zero components stay zero and never re-enter") {
    const auto problem = random_problem(301, 30, 8, 0.6);
    Vector start = Vector::Constant(8, 0.5);
    start[2] = 0.0;
    start[5] = 0.0;
    SlogState state = make_slog_state(start);
    for (int k = 0; k < 20; ++k) {
        state = slog_update(problem, 2.0, state);
        CHECK(state.b[2] == 0.0);
        CHECK(state.b[5] == 0.0);
    }
}

TEST_CASE("X'y = 0 collapses everything to zero in one iteration") {
    // Columns supported on rows 0..9, response on rows 10..15: every product
    // in X'y is an exact zero.
    const Index n = 16;
    RngEngine rng(44);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix X = Matrix::Zero(n, 3);
    for (Index j = 0; j < 3; ++j) {
        double mean = 0.0;
        for (Index i = 0; i < 10; ++i) {
            X(i, j) = normal(rng);
            mean += X(i, j);
        }
        mean /= 10.0;
        for (Index i = 0; i < 10; ++i) X(i, j) -= mean;
        X.col(j) *= std::sqrt(static_cast<double>(n) / X.col(j).squaredNorm());
    }
    Vector y = Vector::Zero(n);
    y[12] = 1.0;
    y[13] = -0.5;
    y[14] = 0.25;
    y[15] = -0.75;  // sums to zero

    Standardization info{Vector::Zero(3), Vector::Ones(3), 0.0};
    const auto problem = RegressionProblem::from_standardized(X, y, info);
    REQUIRE((problem.design().transpose() * y).isZero(0.0));

    SolverConfig config;
    const SolverResult result = solve_slog(problem, 1.0, config);
    CHECK(result.converged);
    CHECK(result.coefficients.isZero(0.0));
    CHECK(result.iterations == 1);
}

TEST_CASE("orthogonal designs converge to componentwise soft thresholding") {
    Vector q;
    const auto problem = slog_test::orthogonal_problem(55, 40, 6, &q);
    const double lambda = 0.4 * q.lpNorm<Eigen::Infinity>();
    SolverConfig config;
    config.step_tol = 1e-12;
    config.threshold = 1e-13;
    config.max_iter = 200000;
    const SolverResult result = solve_slog(problem, lambda, config);
    CHECK(result.converged);
    const double n = static_cast<double>(problem.n_obs());
    for (Index j = 0; j < 6; ++j) {
        const double expected = soft_threshold(q[j] / n, lambda / n);
        CHECK(result.coefficients[j] == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("random instance matches the proximal-gradient oracle") {
    const auto problem = random_problem(66, 50, 20, 0.5);
    const double lambda = 0.3 * lambda_max(problem);
    const Vector oracle = solve_ista(problem, LassoPenalty{lambda}, 1e-10);

    SolverConfig config;
    config.reference = ReferenceTarget{oracle, 1e-6};
    config.step_tol = 1e-300;
    config.max_iter = 500000;
    const SolverResult result = solve_slog(problem, lambda, config);
    CHECK(result.converged);
    CHECK(relative_distance(result.coefficients, oracle) <= 1e-6);
}

TEST_CASE("objective is nonincreasing along the trace") {
    for (double theta : {0.0, 1e-13, 1e-8}) {
        const auto problem = random_problem(77, 40, 12, 0.7);
        SolverConfig config;
        config.threshold = theta;
        config.step_tol = 1e-9;
        config.max_iter = 100000;
        const SolverResult result = solve_slog(problem, 1.5, config);
        REQUIRE(result.trace.size() == static_cast<std::size_t>(result.iterations));
        for (std::size_t k = 1; k < result.trace.size(); ++k) {
            CHECK(result.trace[k].objective <= result.trace[k - 1].objective + 1e-9);
        }
    }
}

TEST_CASE("thresholded coordinates are absorbed bitwise") {
    const auto problem = random_problem(88, 30, 10, 0.5);
    SolverConfig config;
    config.threshold = 1e-4;  // coarse threshold forces early absorption
    config.step_tol = 1e-10;
    config.retain_iterates = true;
    config.max_iter = 50000;
    const SolverResult result = solve_slog(problem, 0.6 * lambda_max(problem), config);

    std::vector<bool> dead(10, false);
    for (const auto& [iteration, b] : result.snapshots) {
        for (Index j = 0; j < 10; ++j) {
            if (dead[static_cast<std::size_t>(j)]) {
                CHECK(b[j] == 0.0);
            } else if (b[j] == 0.0) {
                dead[static_cast<std::size_t>(j)] = true;
            }
        }
    }
}

TEST_CASE("block-orthogonal problems separate") {
    const auto problem = slog_test::block_orthogonal_problem(99, 12, {4, 5});
    const double lambda = 0.25 * lambda_max(problem);

    SolverConfig config;
    config.step_tol = 1e-11;
    config.max_iter = 200000;
    const SolverResult full = solve_slog(problem, lambda, config);

    Vector stitched = Vector::Zero(9);
    const std::vector<std::vector<int>> blocks = {{0, 1, 2, 3}, {4, 5, 6, 7, 8}};
    for (const auto& block : blocks) {
        Standardization info{Vector::Zero(static_cast<Index>(block.size())),
                             Vector::Ones(static_cast<Index>(block.size())), 0.0};
        const auto sub = RegressionProblem::from_standardized(
            problem.design()(Eigen::all, block), problem.response(), info);
        const SolverResult part = solve_slog(sub, lambda, config);
        for (std::size_t i = 0; i < block.size(); ++i) {
            stitched[block[i]] = part.coefficients[static_cast<Index>(i)];
        }
    }
    CHECK((full.coefficients - stitched).norm() <= 1e-8 * (1.0 + stitched.norm()));
}

TEST_CASE("inversion strategies agree inside the solver") {
    const auto problem = random_problem(111, 15, 30, 0.4);  // p > n exercises woodbury
    const double lambda = 0.4 * lambda_max(problem);
    SolverConfig config;
    config.step_tol = 1e-8;
    config.max_iter = 20000;

    config.inversion = InversionStrategy::Naive;
    const Vector naive = solve_slog(problem, lambda, config).coefficients;
    config.inversion = InversionStrategy::Woodbury;
    const Vector woodbury = solve_slog(problem, lambda, config).coefficients;
    config.inversion = InversionStrategy::Miller;
    const Vector miller = solve_slog(problem, lambda, config).coefficients;

    CHECK((woodbury - naive).norm() <= 1e-10 * (1.0 + naive.norm()));
    CHECK((miller - naive).norm() <= 1e-10 * (1.0 + naive.norm()));
}

TEST_CASE("uninformed start perturbs exact-zero correlations") {
    // One block of columns carries the response, the other is exactly
    // orthogonal to it, so its correlations X'y are exact zeros.
    const auto base = slog_test::block_orthogonal_problem(123, 10, {2, 2});
    Vector y = Vector::Zero(base.n_obs());
    // Built from centered block-one columns, so y is centered to rounding and
    // stays exactly zero on block two's rows.
    for (Index i = 0; i < 10; ++i) y[i] = base.design()(i, 0) + 0.3 * base.design()(i, 1);
    Standardization info{Vector::Zero(4), Vector::Ones(4), 0.0};
    const auto problem = RegressionProblem::from_standardized(base.design(), y, info);

    const Vector q = problem.design().transpose() * problem.response();
    REQUIRE(q[2] == 0.0);
    REQUIRE(q[3] == 0.0);

    const double lambda = 2.0;
    const Vector start = make_start_vector(problem, lambda, UninformedStart{});
    const double base_value = lambda / 4.0;
    CHECK(start[0] == doctest::Approx(base_value * sign(q[0])));
    CHECK(start[2] == doctest::Approx(base_value * 1e-3));
    CHECK(start[3] == doctest::Approx(base_value * 1e-3));
}

TEST_CASE("iteration cap reports a non-converged result with partial trace") {
    const auto problem = random_problem(131, 40, 10, 0.9);
    SolverConfig config;
    config.step_tol = 1e-14;
    config.max_iter = 3;
    const SolverResult result = solve_slog(problem, 0.5, config);
    CHECK_FALSE(result.converged);
    CHECK(result.reason == StopReason::MaxIterations);
    CHECK(result.iterations == 3);
    CHECK(result.trace.size() == 3);
}

TEST_CASE("reference mode stops at the requested distance") {
    const auto problem = random_problem(141, 30, 8, 0.3);
    const double lambda = 0.3 * lambda_max(problem);
    const Vector oracle = solve_ista(problem, LassoPenalty{lambda}, 1e-11);
    SolverConfig config;
    config.reference = ReferenceTarget{oracle, 1e-4};
    config.step_tol = 1e-300;
    config.max_iter = 100000;
    const SolverResult result = solve_slog(problem, lambda, config);
    CHECK(result.converged);
    CHECK(result.reason == StopReason::ReferenceDistance);
    CHECK(relative_distance(result.coefficients, oracle) <= 1e-4);
    // trace has the running distance
    CHECK(std::isfinite(result.trace.back().dist_to_reference));
}
