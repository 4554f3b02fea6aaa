#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "colebrook/types.hpp"

namespace colebrook {

enum class AxisScale {
    linear,
    log,       // Re axis: decades weighted equally, like the Moody chart
    log_floor  // eps axis: log-uniform above a positive floor
};

struct DomainSpec {
    double re_min = kReMin;
    double re_max = kReMax;
    double eps_min = kEpsMin;
    double eps_max = kEpsMax;
    AxisScale re_scale = AxisScale::log;
    AxisScale eps_scale = AxisScale::linear;
    double eps_floor = 1e-6;  // used by AxisScale::log_floor only
};

inline void validate(const DomainSpec& d) {
    if (!(d.re_min > 0.0) || !(d.re_min < d.re_max))
        throw std::invalid_argument("DomainSpec: need 0 < re_min < re_max");
    if (!(d.eps_min >= 0.0) || !(d.eps_min <= d.eps_max))
        throw std::invalid_argument("DomainSpec: need 0 <= eps_min <= eps_max");
    if (d.re_scale == AxisScale::log_floor)
        throw std::invalid_argument("DomainSpec: log_floor applies to the eps axis only");
    if (d.eps_scale == AxisScale::log)
        throw std::invalid_argument("DomainSpec: eps axis supports linear or log_floor");
    if (d.eps_scale == AxisScale::log_floor && !(d.eps_floor > 0.0))
        throw std::invalid_argument("DomainSpec: eps_floor must be positive");
}

inline FlowPoint map_to_domain(double u1, double u2, const DomainSpec& d) {
    validate(d);
    FlowPoint p;
    if (d.re_scale == AxisScale::log) {
        const double lo = std::log10(d.re_min);
        const double hi = std::log10(d.re_max);
        // u1 = 0 must land on the corner exactly; pow(10, log10(m)) may not
        p.re = u1 == 0.0 ? d.re_min : std::pow(10.0, lo + u1 * (hi - lo));
    } else {
        p.re = d.re_min + u1 * (d.re_max - d.re_min);
    }
    if (d.eps_scale == AxisScale::linear) {
        p.eps = d.eps_min + u2 * (d.eps_max - d.eps_min);
    } else {
        const double lo = d.eps_min > d.eps_floor ? d.eps_min : d.eps_floor;
        p.eps = lo * std::pow(d.eps_max / lo, u2);
    }
    return p;
}

inline FlowPoint map_to_domain(const std::array<double, 2>& u, const DomainSpec& d) {
    return map_to_domain(u[0], u[1], d);
}

// Deterministic grid: n_re log-spaced Reynolds numbers crossed with n_eps
// linearly spaced roughness values, endpoints included exactly.
inline std::vector<FlowPoint> grid(const DomainSpec& d, int n_re, int n_eps) {
    validate(d);
    if (n_re < 2 || n_eps < 2) throw std::invalid_argument("grid: need n_re, n_eps >= 2");

    std::vector<double> res(static_cast<std::size_t>(n_re));
    const double lo = std::log10(d.re_min);
    const double hi = std::log10(d.re_max);
    for (int i = 0; i < n_re; ++i)
        res[static_cast<std::size_t>(i)] = std::pow(10.0, lo + (hi - lo) * i / (n_re - 1));
    res.front() = d.re_min;
    res.back() = d.re_max;

    std::vector<double> epss(static_cast<std::size_t>(n_eps));
    for (int j = 0; j < n_eps; ++j)
        epss[static_cast<std::size_t>(j)] =
            d.eps_min + (d.eps_max - d.eps_min) * j / (n_eps - 1);
    epss.front() = d.eps_min;
    epss.back() = d.eps_max;

    std::vector<FlowPoint> out;
    out.reserve(static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_eps));
    for (double re : res)
        for (double eps : epss) out.push_back({re, eps});
    return out;
}

}  // namespace colebrook
