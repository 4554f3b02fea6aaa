#pragma once

#include <cmath>
#include <stdexcept>

namespace colebrook {

// Rational corrective function paired with the first-order series term:
//   y ~ -C + C/x + xi(x, C).
// The denominator is strictly positive for x > 0.
inline double xi(double x, double c) {
    const double c2 = c * c;
    const double num = 0.3896 * c * (c - 1.0) - 0.9873;
    const double den = 0.8421 * x * x + 0.01274 * x * (c2 * c2) + x + 5.882;
    return num / den;
}

// Corrective function for the y_cap rational form below, fit so that
// y ~ Y - xi1(x, Y) cancels the residual of Y over the engineering domain.
// All denominator terms are nonnegative for x > 0, so den > 18178.
inline double xi1(double x, double y_cap) {
    const double y2 = y_cap * y_cap;
    const double x2 = x * x;
    const double num = x * y2 + 3.0636 * x * y_cap + 18.58;
    const double den = 19.5 * (y2 * x2 + x2 * x) + 169.9 * x2 + 1260.0 * x + 18178.0;
    return num / den;
}

// Symbolic-regression rational forms for omega(x) - x, parameterized on
// their printed coefficients.
inline double y_sr_a(double x, double c, double gain, double shift) {
    return -c + gain * c / (x + shift);
}

inline double y_sr_b(double x, double c, double gain, double shift) {
    const double inv = 1.0 / x;
    return -c + gain * c * inv + (c - shift) * inv * inv;
}

inline double y_sr_c(double x, double c, double k1, double k2) {
    return -c + c / (x - k1 * c + k2);
}

enum class SrVariant {
    A,     // -C + 1.038*C/(x + 0.332)
    B,     // -C + 1.0119*C/x + (C - 2.3849)/x^2
    C,     // -C + C/(x - 0.5564*C + 1.207)
    COpt,  // C-shape with globally optimized coefficients 0.5588, 1.2079
};

inline double y_sr(double x, double c, SrVariant variant) {
    switch (variant) {
        case SrVariant::A:
            return y_sr_a(x, c, 1.038, 0.332);
        case SrVariant::B:
            return y_sr_b(x, c, 1.0119, 2.3849);
        case SrVariant::C:
            return y_sr_c(x, c, 0.5564, 1.207);
        case SrVariant::COpt:
            return y_sr_c(x, c, 0.5588, 1.2079);
    }
    throw std::invalid_argument("y_sr: unknown variant");
}

}  // namespace colebrook
