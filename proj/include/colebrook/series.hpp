#pragma once

#include <cmath>
#include <stdexcept>

namespace colebrook {

// Terms of the asymptotic expansion of omega(x) - x about infinity,
// with C = ln(x):
//   s1 = C*(1/x - 1)
//   s2 = C/(2 x^2) * (C - 2)
//   s3 = C/(6 x^3) * (2 C^2 - 9 C + 6)
//   s4 = C/(12 x^4) * (3 C^3 - 22 C^2 + 36 C - 12)
//   s5 = C/(60 x^5) * (12 C^4 - 125 C^3 + 350 C^2 - 300 C + 60)
// The polynomial coefficients are the unsigned Stirling numbers of the
// first kind arranged for W(e^x).
inline double s_term(int i, double x, double c) {
    const double x2 = x * x;
    switch (i) {
        case 1:
            return c * (1.0 / x - 1.0);
        case 2:
            return c / (2.0 * x2) * (c - 2.0);
        case 3:
            return c / (6.0 * x2 * x) * ((2.0 * c - 9.0) * c + 6.0);
        case 4:
            return c / (12.0 * x2 * x2) * (((3.0 * c - 22.0) * c + 36.0) * c - 12.0);
        case 5:
            return c / (60.0 * x2 * x2 * x) *
                   ((((12.0 * c - 125.0) * c + 350.0) * c - 300.0) * c + 60.0);
        default:
            throw std::invalid_argument("s_term: term index must be in 1..5");
    }
}

inline double s_term(int i, double x) {
    if (i < 1 || i > 5) throw std::invalid_argument("s_term: term index must be in 1..5");
    return s_term(i, x, std::log(x));
}

// Partial sum s1 + ... + sk approximating omega(x) - x; ln(x) is evaluated
// exactly once and threaded through as c.
inline double y_series(double x, double c, int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("y_series: order must be in 1..5");
    double y = 0.0;
    for (int i = 1; i <= k; ++i) y += s_term(i, x, c);
    return y;
}

inline double y_series(double x, int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("y_series: order must be in 1..5");
    return y_series(x, std::log(x), k);
}

// Additive corrections that recentre the error of the first three partial
// sums over the engineering domain.
inline constexpr double kSeriesAlpha[3] = {0.00056, -0.0014, -0.000093};

inline double y_series_alpha(double x, double c, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("y_series_alpha: order must be in 1..3");
    return y_series(x, c, k) + kSeriesAlpha[k - 1];
}

inline double y_series_alpha(double x, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("y_series_alpha: order must be in 1..3");
    return y_series_alpha(x, std::log(x), k);
}

}  // namespace colebrook
