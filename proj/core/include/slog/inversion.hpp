#pragma once

#include "slog/problem.hpp"
#include "slog/solver_types.hpp"

namespace slog {

// Solvers for the penalized normal equations
//   (X'X + D) u = rhs,  D positive diagonal,
// which every member of the solver family produces on its active set.
//
// naive     factors the p*x p* matrix directly (O(p*^3)).
// woodbury  works through the n x n system
//             u = D^-1 rhs - D^-1 X' (I_n + X D^-1 X')^-1 X D^-1 rhs,
//           preferable when n < p*.
// miller    builds (X'X + D)^-1 from D^-1 by n rank-one corrections
//             A_i^-1 = A_{i-1}^-1 - (A_{i-1}^-1 x_i)(A_{i-1}^-1 x_i)' / (1 + x_i' A_{i-1}^-1 x_i).
//
// All throw SingularSystem when factorization fails beyond the jitter retry
// (one retry with 1e-12 * trace/p* added to the diagonal).
Vector solve_diag_plus_gram_naive(const Matrix& gram, const Vector& diag, const Vector& rhs);
Vector solve_diag_plus_gram_woodbury(const Matrix& design, const Vector& diag, const Vector& rhs);
Vector solve_diag_plus_gram_miller(const Matrix& design, const Vector& diag, const Vector& rhs);

// Resolves Auto: naive when p* <= n, woodbury otherwise. Auto intentionally
// never selects miller.
InversionStrategy resolve_strategy(InversionStrategy strategy, Index n, Index p_active);

// Solution operator for the restricted system [X*'X* + lambda B*^-1] u = rhs
// with B* = diag(|b*|). The gram argument may be empty (0 x 0) when the
// strategy resolves to a design-based path; it is computed on demand for the
// naive path if absent.
class ActiveSystemSolver {
public:
    ActiveSystemSolver(Matrix design_active, Matrix gram_active, Vector abs_coeffs, double lambda,
                       InversionStrategy strategy);

    Vector solve(const Vector& rhs) const;
    InversionStrategy chosen() const { return chosen_; }

private:
    Matrix design_;
    Matrix gram_;
    Vector diag_;
    InversionStrategy chosen_;
};

ActiveSystemSolver invert_active_system(const Matrix& design_active, const Matrix& gram_active,
                                        const Vector& abs_coeffs, double lambda,
                                        InversionStrategy strategy);

}  // namespace slog
