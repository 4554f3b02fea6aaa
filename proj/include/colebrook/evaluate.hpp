#pragma once

#include <cmath>
#include <stdexcept>

#include "colebrook/corrections.hpp"
#include "colebrook/method.hpp"
#include "colebrook/reference.hpp"
#include "colebrook/series.hpp"
#include "colebrook/types.hpp"

namespace colebrook {

namespace detail {

// Series partial sum with a single reciprocal: the term-k coefficient is a
// degree-(k-1) polynomial in C, so the sum is one Horner pass in 1/x over
// independently computable C-polynomials.
inline double y_series_fast(double x, double c, int order) {
    const double inv = 1.0 / x;
    if (order == 1) return c * (inv - 1.0);
    const double inv2 = inv * inv;
    const double q2 = 0.5 * (c - 2.0);
    if (order == 2) return c * ((inv - 1.0) + inv2 * q2);
    const double q3 = ((2.0 * c - 9.0) * c + 6.0) * (1.0 / 6.0);
    if (order == 3) return c * ((inv - 1.0) + inv2 * (q2 + inv * q3));
    const double q4 = (((3.0 * c - 22.0) * c + 36.0) * c - 12.0) * (1.0 / 12.0);
    if (order == 4) return c * ((inv - 1.0) + inv2 * (q2 + inv * (q3 + inv * q4)));
    const double q5 =
        ((((12.0 * c - 125.0) * c + 350.0) * c - 300.0) * c + 60.0) * (1.0 / 60.0);
    return c * ((inv - 1.0) + inv2 * (q2 + inv * (q3 + inv * (q4 + inv * q5))));
}

}  // namespace detail

// y ~ omega(x) - x for one approximation; pure rational arithmetic in
// (x, C), no further transcendental calls.  The method identity is passed
// separately from the spec so callers that know it at compile time (the
// timing kernels) get the dispatch folded away.
inline double y_approx(MethodId id, const MethodSpec& m, double x, double c) {
    switch (id) {
        case MethodId::series1:
        case MethodId::series2:
        case MethodId::series3:
        case MethodId::series4:
        case MethodId::series5:
            return detail::y_series_fast(x, c, m.order);
        case MethodId::series_alpha1:
        case MethodId::series_alpha2:
        case MethodId::series_alpha3:
            return detail::y_series_fast(x, c, m.order) + m.alpha;
        case MethodId::series_xi:
            return s_term(1, x, c) + xi(x, c);
        case MethodId::sr_a:
            return y_sr_a(x, c, m.coeffs[0], m.coeffs[1]);
        case MethodId::sr_b:
            return y_sr_b(x, c, m.coeffs[0], m.coeffs[1]);
        case MethodId::sr_c:
        case MethodId::sr_c_opt:
            return y_sr_c(x, c, m.coeffs[0], m.coeffs[1]);
        case MethodId::sr_xi1: {
            const double y_cap = y_sr_c(x, c, m.coeffs[0], m.coeffs[1]);
            return y_cap - xi1(x, y_cap);
        }
        case MethodId::reference:
            break;
    }
    throw std::invalid_argument("y_approx: not a closed-form method");
}

inline double y_approx(const MethodSpec& m, double x, double c) {
    return y_approx(m.id, m, x, c);
}

// The id parameter must equal m.id; see y_approx for why it is separate.
template <class Log>
FrictionResult evaluate_as(MethodId id, const FlowPoint& p, const MethodSpec& m, Log&& ln) {
    if (id == MethodId::reference) {
        const ReferenceSolution r = solve_reference(p);
        FrictionResult out;
        out.f = r.f;
        out.inv_sqrt_f = r.inv_sqrt_f;
        out.y = r.inv_sqrt_f / exact::prefactor - (std::log(p.re) - exact::b_offset);
        out.in_domain = colebrook::in_domain(p);
        return out;
    }

    const TransformedPoint t = transform(p, m, ln);
    const double y = y_approx(id, m, t.x, t.c);
    const double inv_sqrt_f = m.prefactor * (t.b + y);
    if (!(inv_sqrt_f > 0.0))
        throw std::domain_error("evaluate: nonphysical result (1/sqrt(f) <= 0); "
                                "input far outside the validity range");

    FrictionResult out;
    out.f = 1.0 / (inv_sqrt_f * inv_sqrt_f);
    out.inv_sqrt_f = inv_sqrt_f;
    out.y = y;
    out.in_domain = colebrook::in_domain(p);
    return out;
}

template <class Log>
FrictionResult evaluate(const FlowPoint& p, const MethodSpec& m, Log&& ln) {
    return evaluate_as(m.id, p, m, static_cast<Log&&>(ln));
}

inline FrictionResult evaluate(const FlowPoint& p, const MethodSpec& m) {
    return evaluate(p, m, [](double v) { return std::log(v); });
}

}  // namespace colebrook
