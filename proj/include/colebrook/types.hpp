#pragma once

#include <cmath>
#include <numbers>

namespace colebrook {

// Engineering domain of the Colebrook relation (turbulent region of the
// Moody chart): Re in [4e3, 1e8], relative roughness in [0, 0.05].
inline constexpr double kReMin = 4000.0;
inline constexpr double kReMax = 1.0e8;
inline constexpr double kEpsMin = 0.0;
inline constexpr double kEpsMax = 0.05;

// Input pair for one friction-factor query.
struct FlowPoint {
    double re = 0.0;   // Reynolds number
    double eps = 0.0;  // relative roughness of the inner pipe surface
};

inline bool in_domain(const FlowPoint& p) {
    return p.re >= kReMin && p.re <= kReMax && p.eps >= kEpsMin && p.eps <= kEpsMax;
}

// Intermediates of the Wright-omega form of the Colebrook equation:
//   1/sqrt(f) = prefactor * (B + y),  y = omega(x) - x
//   A = Re*eps / a_divisor,  B = ln(Re) - b_offset,  x = A + B,  C = ln(x)
struct TransformedPoint {
    double a = 0.0;
    double b = 0.0;
    double x = 0.0;
    double c = 0.0;  // ln(x)
};

struct FrictionResult {
    double f = 0.0;           // Darcy friction factor
    double inv_sqrt_f = 0.0;  // 1/sqrt(f)
    double y = 0.0;           // omega(x) - x value used
    bool in_domain = true;
};

// Exact transform constants, z = 2*2.51/ln(10).  The reference solver always
// uses these; the closed-form approximations carry their own rounded sets.
namespace exact {
inline constexpr double z = 2.0 * 2.51 / std::numbers::ln10;
inline constexpr double prefactor = 2.0 / std::numbers::ln10;  // z / 2.51
inline constexpr double a_divisor = z * 3.71;
inline const double b_offset = std::log(z);  // ln(z)
}  // namespace exact

}  // namespace colebrook
