#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace colebrook {

struct OmegaResult {
    double omega = 0.0;
    int iterations = 0;
    double residual = 0.0;  // |omega + ln(omega) - x|
};

// Wright omega on the real ray x >= 1, where it satisfies
//   omega + ln(omega) = x,  omega > 0.
// Halley iteration on h(w) = w + ln(w) - x from the guess w0 = x - ln(x);
// h' = (w+1)/w, h'' = -1/w^2.  Converges in a handful of steps everywhere
// on the Colebrook range.
inline OmegaResult wright_omega(double x) {
    if (!(x >= 1.0)) throw std::domain_error("wright_omega: requires x >= 1");

    constexpr int kMaxIter = 30;
    constexpr double kEps = std::numeric_limits<double>::epsilon();

    double w = x - std::log(x);
    if (w <= 0.0) w = 1.0;  // cannot happen for x >= 1; belt over braces
    int it = 0;
    while (it < kMaxIter) {
        const double lw = std::log(w);
        const double h = w + lw - x;
        const double hp = (w + 1.0) / w;
        const double step = 2.0 * h * hp / (2.0 * hp * hp + h / (w * w));
        w -= step;
        ++it;
        if (std::abs(step) <= 4.0 * kEps * w) {
            OmegaResult r;
            r.omega = w;
            r.iterations = it;
            r.residual = std::abs(w + std::log(w) - x);
            return r;
        }
    }
    throw std::runtime_error("wright_omega: no convergence in 30 iterations");
}

// y = omega(x) - x evaluated as -ln(omega): the direct difference loses up
// to half the significant digits once x >> |y|, the log form does not.
inline double omega_minus_x(double x) {
    return -std::log(wright_omega(x).omega);
}

}  // namespace colebrook
