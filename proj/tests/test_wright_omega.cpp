#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "colebrook/series.hpp"
#include "colebrook/wright_omega.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
// Independent check: omega is the fixed point of w -> x - ln(w), which is a
// contraction on the range of interest (|d/dw| = 1/w < 1 for w > 1).
double omega_fixed_point(double x) {
    double w = x;
    for (int i = 0; i < 500; ++i) w = x - std::log(w);
    return w;
}
}  // namespace

TEST_CASE("omega(1) = 1") {
    const auto r = colebrook::wright_omega(1.0);
    CHECK_THAT(r.omega, WithinAbs(1.0, 1e-15));
    CHECK(r.residual <= 1e-15);
}

TEST_CASE("omega identity residual over the working range") {
    for (double lx = 0.0; lx <= std::log(1e6); lx += 0.01) {
        const double x = std::exp(lx);
        if (x < 1.0) continue;
        const auto r = colebrook::wright_omega(x);
        CHECK(r.omega > 0.0);
        CHECK(r.iterations <= 30);
        CHECK(r.residual <= 1e-14 * std::max(1.0, x));
    }
}

TEST_CASE("omega agrees with the fixed-point iteration") {
    for (double x : {7.5147, 12.0, 50.0, 300.0, 619.0}) {
        const double w_fp = omega_fixed_point(x);
        CHECK_THAT(colebrook::wright_omega(x).omega, WithinRel(w_fp, 1e-13));
    }
}

TEST_CASE("omega spot values cross-checked against scipy.special.wrightomega") {
    CHECK_THAT(colebrook::wright_omega(7.5147).omega,
               WithinRel(5.763206070653371, 1e-13));
    CHECK_THAT(colebrook::wright_omega(618187.8426862813).omega,
               WithinRel(618174.508160209, 1e-13));
}

TEST_CASE("omega_minus_x avoids cancellation at large x") {
    // At x ~ 6e5 the order-5 series is exact to double precision, so any
    // visible difference would be cancellation noise in the omega route.
    for (double x : {1e4, 1e5, 618187.8426862813}) {
        CHECK_THAT(colebrook::omega_minus_x(x),
                   WithinAbs(colebrook::y_series(x, 5), 1e-12));
    }
}

TEST_CASE("omega_minus_x is negative and strictly decreasing for x > 1") {
    double prev = 0.0;
    bool first = true;
    for (double lx = std::log(7.5147); lx <= std::log(6.2e5); lx += 0.001) {
        const double y = colebrook::omega_minus_x(std::exp(lx));
        CHECK(y < 0.0);
        if (!first) CHECK(y < prev);
        prev = y;
        first = false;
    }
}

TEST_CASE("omega domain guard") {
    CHECK_THROWS_AS(colebrook::wright_omega(0.5), std::domain_error);
    CHECK_THROWS_AS(colebrook::wright_omega(-3.0), std::domain_error);
}
