#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "colebrook/types.hpp"

namespace colebrook {

enum class MethodId {
    reference,      // iterative solution, error oracle
    series1,        // first asymptotic term
    series2,
    series3,
    series4,
    series5,
    series_alpha1,  // series order k plus recentring constant
    series_alpha2,
    series_alpha3,
    series_xi,      // first term plus rational corrective function
    sr_a,           // symbolic-regression rational forms
    sr_b,
    sr_c,
    sr_c_opt,       // sr_c with globally optimized coefficients
    sr_xi1,         // sr_c plus rational corrective function
};

// One approximation with the constant set it was calibrated with.  The
// rounded sets differ per method on purpose: each method's published error
// bound was measured with exactly these roundings, so "harmonizing" them
// would change the observed maxima.
struct MethodSpec {
    MethodId id{};
    std::string_view name;    // stable CLI identifier
    std::string_view family;  // reporting group
    double prefactor = 0.0;   // multiplier of (B + y)
    double a_divisor = 0.0;   // A = Re*eps / a_divisor
    double b_offset = 0.0;    // B = ln(Re) - b_offset
    double alpha = 0.0;       // additive y-correction (series_alpha family)
    std::array<double, 2> coeffs{0.0, 0.0};  // rational-form coefficients
    int order = 0;            // series order (asymptotic families)
};

inline std::span<const MethodSpec> method_registry() {
    static const std::array<MethodSpec, 15> table = {{
        {MethodId::reference, "reference", "iterative reference",
         exact::prefactor, exact::a_divisor, exact::b_offset, 0.0, {}, 0},
        {MethodId::series1, "series1", "asymptotic series",
         0.8686, 8.0878, 0.7794, 0.0, {}, 1},
        {MethodId::series2, "series2", "asymptotic series",
         0.8686, 8.0878, 0.7794, 0.0, {}, 2},
        {MethodId::series3, "series3", "asymptotic series",
         0.8686, 8.0878, 0.7794, 0.0, {}, 3},
        {MethodId::series4, "series4", "asymptotic series",
         0.8686, 8.0878, 0.7794, 0.0, {}, 4},
        {MethodId::series5, "series5", "asymptotic series",
         0.8686, 8.0878, 0.7794, 0.0, {}, 5},
        {MethodId::series_alpha1, "series-alpha1", "series + constant",
         0.8686, 8.0878, 0.7794, 0.00056, {}, 1},
        {MethodId::series_alpha2, "series-alpha2", "series + constant",
         0.8686, 8.0878, 0.7794, -0.0014, {}, 2},
        {MethodId::series_alpha3, "series-alpha3", "series + constant",
         0.8686, 8.0878, 0.7794, -0.000093, {}, 3},
        {MethodId::series_xi, "series-xi", "series + corrective function",
         0.86858896, 8.0884, 0.779397, 0.0, {}, 1},
        {MethodId::sr_a, "sr-a", "symbolic regression",
         0.8686, 8.0884, 0.7794, 0.0, {1.038, 0.332}, 0},
        {MethodId::sr_b, "sr-b", "symbolic regression",
         0.8686, 8.0884, 0.7794, 0.0, {1.0119, 2.3849}, 0},
        {MethodId::sr_c, "sr-c", "symbolic regression",
         0.8686, 8.0878, 0.7794, 0.0, {0.5564, 1.207}, 0},
        {MethodId::sr_c_opt, "sr-c-opt", "optimized coefficients",
         0.8685972, 8.0897, 0.779626, 0.0, {0.5588, 1.2079}, 0},
        {MethodId::sr_xi1, "sr-xi1", "optimized + corrective function",
         0.868589, 8.088387, 0.7793975, 0.0, {0.5564, 1.207}, 0},
    }};
    return table;
}

inline const MethodSpec& method(MethodId id) {
    for (const MethodSpec& m : method_registry())
        if (m.id == id) return m;
    throw std::invalid_argument("method: id not registered");
}

inline std::string known_method_names() {
    std::string out;
    for (const MethodSpec& m : method_registry()) {
        if (!out.empty()) out += ", ";
        out += m.name;
    }
    return out;
}

inline const MethodSpec& find_method(std::string_view name) {
    for (const MethodSpec& m : method_registry())
        if (m.name == name) return m;
    throw std::invalid_argument("unknown method '" + std::string(name) +
                                "' (known: " + known_method_names() + ")");
}

// A = Re*eps / a_divisor, B = ln(Re) - b_offset, x = A + B, C = ln(x).
// The Log callable is invoked for every natural-log evaluation, which lets
// tests count them; exactly two calls happen here and none downstream.
template <class Log>
TransformedPoint transform(const FlowPoint& p, const MethodSpec& m, Log&& ln) {
    if (!(p.re > 0.0)) throw std::invalid_argument("transform: Re must be positive");
    TransformedPoint t;
    t.a = p.re * p.eps / m.a_divisor;
    t.b = ln(p.re) - m.b_offset;
    t.x = t.a + t.b;
    if (!(t.x > 0.0))
        throw std::domain_error("transform: x = A + B is not positive (Re too small)");
    t.c = ln(t.x);
    return t;
}

inline TransformedPoint transform(const FlowPoint& p, const MethodSpec& m) {
    return transform(p, m, [](double v) { return std::log(v); });
}

}  // namespace colebrook
