#include "slog/one_dim.hpp"

#include <cmath>
#include <stdexcept>

#include "slog/penalty.hpp"

namespace slog {

double one_d_update(double beta_hat, double lambda, long n, double b) {
    const double nd = static_cast<double>(n);
    const double mag = std::abs(b);
    return mag * beta_hat / (lambda / nd + mag);
}

double one_d_solution(double beta_hat, double lambda, long n) {
    return soft_threshold(beta_hat, lambda / static_cast<double>(n));
}

double one_d_closed_form(double beta_hat, double lambda, long n, double b0, long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (b0 == 0.0 || beta_hat == 0.0) return 0.0;

    const double nd = static_cast<double>(n);
    const double mag0 = std::abs(b0);
    const double s = sign(beta_hat);
    const double c = nd * std::abs(beta_hat) / lambda;

    if (c == 1.0) {
        return lambda * mag0 * s / (lambda + nd * mag0 * static_cast<double>(k));
    }
    if (c < 1.0) {
        const double ck = std::pow(c, static_cast<double>(k));
        const double geom = (1.0 - ck) / (1.0 - c);
        return ck * lambda * mag0 * s / (lambda + nd * mag0 * geom);
    }
    // c > 1: divide numerator and denominator by c^k so nothing overflows.
    const double rk = std::pow(1.0 / c, static_cast<double>(k));
    const double geom = (1.0 - rk) / (c - 1.0);
    return lambda * mag0 * s / (lambda * rk + nd * mag0 * geom);
}

double one_d_rate_bound(double beta_hat, double lambda, long n, double b0, long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (b0 == 0.0) throw std::invalid_argument("rate bound requires b0 != 0");
    const double nd = static_cast<double>(n);
    const double a = nd * std::abs(beta_hat);
    const double bl = one_d_solution(beta_hat, lambda, n);
    const double gap0 = std::abs(b0 - bl);
    if (a < lambda) {
        return std::pow(a / lambda, static_cast<double>(k)) * gap0;
    }
    if (a == lambda) {
        return lambda / (nd * static_cast<double>(k));
    }
    return std::pow(lambda / a, static_cast<double>(k)) * std::abs(beta_hat / b0) * gap0;
}

}  // namespace slog
