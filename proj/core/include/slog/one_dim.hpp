#pragma once

namespace slog {

// Single-coordinate fixed-point map b -> |b| bhat / (lambda/n + |b|), the
// p = 1 specialization of the solver recursion.
double one_d_update(double beta_hat, double lambda, long n, double b);

// Non-recursive form of the k-th iterate from start b0:
//   b^(k) = c^k lambda |b0| sign(bhat) / (lambda + n |b0| sum_{m<k} c^m),
// with c = n |bhat| / lambda. Evaluated in a form that stays finite for
// large c^k.
double one_d_closed_form(double beta_hat, double lambda, long n, double b0, long k);

// Upper bound on |b^(k) - soft(bhat, lambda/n)|:
//   (n|bhat|/lambda)^k |b0 - bl|          when n|bhat| <  lambda
//   lambda/(n k)                          when n|bhat| == lambda
//   (lambda/(n|bhat|))^k |bhat/b0| |b0 - bl|  when n|bhat| > lambda
// where bl is the one-dimensional penalized solution. Requires b0 != 0,
// k >= 1.
double one_d_rate_bound(double beta_hat, double lambda, long n, double b0, long k);

// soft(bhat, lambda/n): the exact one-dimensional solution.
double one_d_solution(double beta_hat, double lambda, long n);

}  // namespace slog
