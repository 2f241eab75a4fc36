#include <doctest.h>

#include <random>

#include "slog/inversion.hpp"
#include "support/test_problems.hpp"

using namespace slog;

namespace {

struct SystemFixture {
    Matrix X;
    Vector weights;  // |b*| diagonal
    double lambda;
    Vector rhs;
};

SystemFixture random_system(std::uint64_t seed, Index n, Index p) {
    RngEngine rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> wdist(0.1, 3.0);
    SystemFixture fx;
    fx.X.resize(n, p);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < p; ++j) fx.X(i, j) = normal(rng);
    fx.weights.resize(p);
    for (Index j = 0; j < p; ++j) fx.weights[j] = wdist(rng);
    fx.lambda = wdist(rng);
    fx.rhs.resize(p);
    for (Index j = 0; j < p; ++j) fx.rhs[j] = normal(rng);
    return fx;
}

}  // namespace

TEST_CASE("all strategies reduce to scalar division for a 1x1 system") {
    Matrix X(4, 1);
    X << 1.0, -2.0, 0.5, 1.5;
    Vector w(1);
    w << 0.7;
    const double lambda = 1.3;
    Vector rhs(1);
    rhs << 2.0;

    const double expected = rhs[0] / (X.col(0).squaredNorm() + lambda / w[0]);
    const Vector d = lambda * w.cwiseInverse();
    CHECK(solve_diag_plus_gram_naive(X.transpose() * X, d, rhs)[0] ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(solve_diag_plus_gram_woodbury(X, d, rhs)[0] ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(solve_diag_plus_gram_miller(X, d, rhs)[0] ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("woodbury and miller agree with naive on a wide system") {
    const auto fx = random_system(5, 5, 40);
    const Vector d = fx.lambda * fx.weights.cwiseInverse();
    const Vector naive = solve_diag_plus_gram_naive(fx.X.transpose() * fx.X, d, fx.rhs);
    const Vector woodbury = solve_diag_plus_gram_woodbury(fx.X, d, fx.rhs);
    const Vector miller = solve_diag_plus_gram_miller(fx.X, d, fx.rhs);
    CHECK((woodbury - naive).norm() / naive.norm() <= 1e-10);
    CHECK((miller - naive).norm() / naive.norm() <= 1e-10);
}

TEST_CASE("strategies agree across tall and wide random systems") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Index n = seed % 2 == 0 ? 30 : 6;
        const Index p = seed % 2 == 0 ? 8 : 25;
        const auto fx = random_system(900 + seed, n, p);
        const Vector d = fx.lambda * fx.weights.cwiseInverse();
        const Vector naive = solve_diag_plus_gram_naive(fx.X.transpose() * fx.X, d, fx.rhs);
        const Vector woodbury = solve_diag_plus_gram_woodbury(fx.X, d, fx.rhs);
        const Vector miller = solve_diag_plus_gram_miller(fx.X, d, fx.rhs);
        CHECK((woodbury - naive).norm() <= 1e-10 * naive.norm());
        CHECK((miller - naive).norm() <= 1e-10 * naive.norm());
    }
}

TEST_CASE("identity gram with unit weights halves the right-hand side") {
    // X'X = I, B = I, lambda = 1  =>  solution = rhs / 2.
    const Index n = 6;
    RngEngine rng(77);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix raw(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) raw(i, j) = normal(rng);
    const Matrix Q = Eigen::HouseholderQR<Matrix>(raw).householderQ() * Matrix::Identity(n, n);
    Vector rhs(n);
    for (Index j = 0; j < n; ++j) rhs[j] = normal(rng);

    const ActiveSystemSolver op = invert_active_system(Q, Matrix(), Vector::Ones(n), 1.0,
                                                       InversionStrategy::Naive);
    CHECK((op.solve(rhs) - rhs / 2.0).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("auto resolves to naive for p* <= n and woodbury otherwise") {
    CHECK(resolve_strategy(InversionStrategy::Auto, 10, 10) == InversionStrategy::Naive);
    CHECK(resolve_strategy(InversionStrategy::Auto, 10, 11) == InversionStrategy::Woodbury);
    CHECK(resolve_strategy(InversionStrategy::Miller, 10, 3) == InversionStrategy::Miller);

    // Bitwise agreement between Auto and forced Naive on a tall system.
    const auto fx = random_system(321, 12, 7);
    const ActiveSystemSolver auto_op =
        invert_active_system(fx.X, Matrix(), fx.weights, fx.lambda, InversionStrategy::Auto);
    const ActiveSystemSolver naive_op =
        invert_active_system(fx.X, Matrix(), fx.weights, fx.lambda, InversionStrategy::Naive);
    CHECK(auto_op.chosen() == InversionStrategy::Naive);
    CHECK(auto_op.solve(fx.rhs) == naive_op.solve(fx.rhs));
}

TEST_CASE("singular systems are reported") {
    // An indefinite "gram" defeats both the factorization and the jitter retry.
    Matrix bad(2, 2);
    bad << 1.0, 2.0, 2.0, 1.0;
    Vector d = Vector::Constant(2, 1e-14);
    Vector rhs(2);
    rhs << 1.0, 1.0;
    CHECK_THROWS_AS(solve_diag_plus_gram_naive(bad, d, rhs), SingularSystem);
}
