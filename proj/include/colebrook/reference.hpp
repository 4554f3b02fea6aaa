#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "colebrook/series.hpp"
#include "colebrook/types.hpp"
#include "colebrook/wright_omega.hpp"

namespace colebrook {

enum class ReferenceRoute { newton_colebrook, omega_based };

struct ReferenceSolution {
    double f = 0.0;
    double inv_sqrt_f = 0.0;
    ReferenceRoute route = ReferenceRoute::newton_colebrook;
    double residual = 0.0;  // |1/sqrt(f) + 2 log10(2.51/(Re sqrt(f)) + eps/3.71)|
    int iterations = 0;
};

// Residual of the implicit Colebrook relation at F = 1/sqrt(f).
inline double colebrook_residual(const FlowPoint& p, double inv_sqrt_f) {
    return std::abs(inv_sqrt_f +
                    2.0 * std::log10(2.51 * inv_sqrt_f / p.re + p.eps / 3.71));
}

namespace detail {
inline void check_point(const FlowPoint& p, const char* who) {
    if (!(p.re > 0.0)) throw std::invalid_argument(std::string(who) + ": Re must be positive");
    if (!(p.eps >= 0.0)) throw std::invalid_argument(std::string(who) + ": eps must be nonnegative");
}
}  // namespace detail

// Canonical route: Newton iteration on
//   g(F) = F + 2 log10(2.51 F / Re + eps/3.71),  F = 1/sqrt(f),
// started from the first-order series form, which is already within ~0.2%
// of the root.
inline ReferenceSolution solve_reference(const FlowPoint& p) {
    detail::check_point(p, "solve_reference");

    const double a = p.re * p.eps / exact::a_divisor;
    const double b = std::log(p.re) - exact::b_offset;
    const double x = a + b;
    if (!(x > 0.0)) throw std::domain_error("solve_reference: x = A + B is not positive");

    double F = exact::prefactor * (b + s_term(1, x));

    constexpr int kMaxIter = 50;
    const double two_over_ln10 = 2.0 / std::numbers::ln10;
    int it = 0;
    bool converged = false;
    while (it < kMaxIter) {
        const double arg = 2.51 * F / p.re + p.eps / 3.71;
        const double g = F + 2.0 * std::log10(arg);
        const double dg = 1.0 + two_over_ln10 * (2.51 / p.re) / arg;
        const double step = g / dg;
        F -= step;
        ++it;
        if (std::abs(step) <= 1e-14 * F) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw std::runtime_error("solve_reference: Newton did not converge in 50 iterations");

    ReferenceSolution r;
    r.inv_sqrt_f = F;
    r.f = 1.0 / (F * F);
    r.route = ReferenceRoute::newton_colebrook;
    r.residual = colebrook_residual(p, F);
    r.iterations = it;
    return r;
}

// Cross-validation route through the Wright omega function.
inline ReferenceSolution solve_reference_omega(const FlowPoint& p) {
    detail::check_point(p, "solve_reference_omega");

    const double a = p.re * p.eps / exact::a_divisor;
    const double b = std::log(p.re) - exact::b_offset;
    const double x = a + b;
    if (!(x > 0.0)) throw std::domain_error("solve_reference_omega: x = A + B is not positive");

    const OmegaResult w = wright_omega(x);
    const double y = -std::log(w.omega);  // omega - x without cancellation
    const double F = exact::prefactor * (b + y);

    ReferenceSolution r;
    r.inv_sqrt_f = F;
    r.f = 1.0 / (F * F);
    r.route = ReferenceRoute::omega_based;
    r.residual = colebrook_residual(p, F);
    r.iterations = w.iterations;
    return r;
}

// Relative disagreement of the two routes; both solve the same equation, so
// this should sit at the rounding floor.
inline double cross_check(const FlowPoint& p) {
    const double f_newton = solve_reference(p).f;
    const double f_omega = solve_reference_omega(p).f;
    return std::abs(f_omega - f_newton) / f_newton;
}

}  // namespace colebrook
