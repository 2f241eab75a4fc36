#include "slog/inversion.hpp"

#include <Eigen/Cholesky>

namespace slog {

namespace {

// Factor-then-solve with one jitter retry. The matrix is SPD in exact
// arithmetic; jitter only papers over rounding.
Eigen::LLT<Matrix> factor_spd(Matrix M) {
    Eigen::LLT<Matrix> llt(M);
    if (llt.info() == Eigen::Success) return llt;
    const double jitter = 1e-12 * M.trace() / static_cast<double>(M.rows());
    M.diagonal().array() += jitter;
    llt.compute(M);
    if (llt.info() != Eigen::Success) {
        throw SingularSystem("penalized normal equations are numerically singular");
    }
    return llt;
}

}  // namespace

Vector solve_diag_plus_gram_naive(const Matrix& gram, const Vector& diag, const Vector& rhs) {
    Matrix M = gram;
    M.diagonal() += diag;
    return factor_spd(std::move(M)).solve(rhs);
}

Vector solve_diag_plus_gram_woodbury(const Matrix& design, const Vector& diag, const Vector& rhs) {
    const Index n = design.rows();
    const Vector inv_diag = diag.cwiseInverse();
    // core = I_n + X D^-1 X'
    Matrix scaled = design * inv_diag.asDiagonal();  // X D^-1
    Matrix core = scaled * design.transpose();
    core.diagonal().array() += 1.0;
    const Vector v = scaled * rhs;                       // X D^-1 rhs
    const Vector z = factor_spd(std::move(core)).solve(v);
    (void)n;
    return inv_diag.asDiagonal() * (rhs - design.transpose() * z);
}

Vector solve_diag_plus_gram_miller(const Matrix& design, const Vector& diag, const Vector& rhs) {
    const Index n = design.rows();
    const Index p = design.cols();
    Matrix inv = Matrix::Zero(p, p);
    inv.diagonal() = diag.cwiseInverse();
    Vector v(p);
    for (Index i = 0; i < n; ++i) {
        const auto row = design.row(i).transpose();
        v.noalias() = inv * row;
        const double den = 1.0 + row.dot(v);
        if (!(den > 1e-300)) {
            throw SingularSystem("rank-one correction denominator vanished");
        }
        inv.noalias() -= (v * v.transpose()) / den;
    }
    return inv * rhs;
}

InversionStrategy resolve_strategy(InversionStrategy strategy, Index n, Index p_active) {
    if (strategy != InversionStrategy::Auto) return strategy;
    return p_active <= n ? InversionStrategy::Naive : InversionStrategy::Woodbury;
}

ActiveSystemSolver::ActiveSystemSolver(Matrix design_active, Matrix gram_active, Vector abs_coeffs,
                                       double lambda, InversionStrategy strategy)
    : design_(std::move(design_active)), gram_(std::move(gram_active)) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if ((abs_coeffs.array() <= 0.0).any()) {
        throw std::invalid_argument("active coefficient magnitudes must be strictly positive");
    }
    diag_ = lambda * abs_coeffs.cwiseInverse();
    chosen_ = resolve_strategy(strategy, design_.rows(), diag_.size());
    if (chosen_ == InversionStrategy::Naive && gram_.size() == 0) {
        gram_ = design_.transpose() * design_;
    }
}

Vector ActiveSystemSolver::solve(const Vector& rhs) const {
    switch (chosen_) {
        case InversionStrategy::Naive:
            return solve_diag_plus_gram_naive(gram_, diag_, rhs);
        case InversionStrategy::Woodbury:
            return solve_diag_plus_gram_woodbury(design_, diag_, rhs);
        case InversionStrategy::Miller:
            return solve_diag_plus_gram_miller(design_, diag_, rhs);
        case InversionStrategy::Auto: break;
    }
    throw std::logic_error("unresolved inversion strategy");
}

ActiveSystemSolver invert_active_system(const Matrix& design_active, const Matrix& gram_active,
                                        const Vector& abs_coeffs, double lambda,
                                        InversionStrategy strategy) {
    return ActiveSystemSolver(design_active, gram_active, abs_coeffs, lambda, strategy);
}

}  // namespace slog
