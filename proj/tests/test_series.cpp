#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "colebrook/series.hpp"
#include "colebrook/wright_omega.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) xs.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
    return xs;
}
}  // namespace

TEST_CASE("s_term closed-form values") {
    const double e = std::exp(1.0);
    CHECK(colebrook::s_term(1, 1.0) == 0.0);  // ln(1) = 0
    CHECK_THAT(colebrook::s_term(1, e), WithinRel(1.0 / e - 1.0, 1e-15));
    // s3(e) = (2 - 9 + 6) / (6 e^3) = -1/(6 e^3)
    CHECK_THAT(colebrook::s_term(3, e), WithinRel(-1.0 / (6.0 * e * e * e), 1e-14));
}

TEST_CASE("s_term rejects unsupported indices") {
    CHECK_THROWS_AS(colebrook::s_term(0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::s_term(6, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::s_term(-1, 10.0, 2.3), std::invalid_argument);
}

TEST_CASE("s_term overloads agree once ln(x) is threaded through") {
    for (double x : log_grid(2.0, 1e6, 64))
        for (int i = 1; i <= 5; ++i)
            CHECK(colebrook::s_term(i, x) == colebrook::s_term(i, x, std::log(x)));
}

TEST_CASE("y_series partial sums") {
    CHECK(colebrook::y_series(1.0, 5) == 0.0);  // every term vanishes at x = 1
    CHECK_THAT(colebrook::y_series(100.0, 1),
               WithinRel(std::log(100.0) * (1.0 / 100.0 - 1.0), 1e-15));
    CHECK_THAT(colebrook::y_series(100.0, 1), WithinRel(-4.559118484128211, 1e-14));

    for (double x : log_grid(7.5, 6.2e5, 32)) {
        const double c = std::log(x);
        for (int k = 1; k <= 5; ++k) {
            double sum = 0.0;
            for (int i = 1; i <= k; ++i) sum += colebrook::s_term(i, x, c);
            CHECK(colebrook::y_series(x, k) == sum);
        }
    }

    CHECK_THROWS_AS(colebrook::y_series(10.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::y_series(10.0, 6), std::invalid_argument);
}

TEST_CASE("y_series at the domain entry point tracks omega(x) - x") {
    // Lowest in-domain x (Re = 4000, smooth pipe).  The order-5 truncation
    // error here stays within the band that induces at most 0.00247%
    // friction-factor error: |dy| <= 0.00247/200 * (B + y) ~ 7.1e-5.
    const double x0 = 7.5147;
    const double diff = std::abs(colebrook::y_series(x0, 5) - colebrook::omega_minus_x(x0));
    CHECK(diff < 7.1e-5);
    CHECK_THAT(colebrook::y_series(x0, 5) - colebrook::omega_minus_x(x0),
               WithinAbs(-1.1258e-5, 2e-8));
}

TEST_CASE("y_series_alpha adds the recentring constant") {
    const double alphas[3] = {0.00056, -0.0014, -0.000093};
    for (double x : log_grid(7.5, 6.2e5, 16))
        for (int k = 1; k <= 3; ++k)
            CHECK_THAT(colebrook::y_series_alpha(x, k) - colebrook::y_series(x, k),
                       WithinAbs(alphas[k - 1], 1e-12));
    CHECK_THROWS_AS(colebrook::y_series_alpha(10.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::y_series_alpha(10.0, 0), std::invalid_argument);
}

TEST_CASE("y_series is negative and strictly decreasing over the domain") {
    for (int k = 1; k <= 5; ++k) {
        double prev = 0.0;
        bool first = true;
        for (double x : log_grid(7.5147, 6.2e5, 2000)) {
            const double y = colebrook::y_series(x, k);
            CHECK(y < 0.0);
            if (!first) CHECK(y < prev);
            prev = y;
            first = false;
        }
    }
}

TEST_CASE("grid maximum of |y_series - (omega - x)| improves with order") {
    // Pointwise improvement does not hold near x ~ 7.5 (the order-2 sum is
    // locally worse than order-1 at the edge of the asymptotic regime), but
    // the worst case over the domain shrinks with every added term.
    double prev_max = std::numeric_limits<double>::infinity();
    const auto xs = log_grid(7.5147, 6.2e5, 4000);
    for (int k = 1; k <= 5; ++k) {
        double worst = 0.0;
        for (double x : xs)
            worst = std::max(worst,
                             std::abs(colebrook::y_series(x, k) - colebrook::omega_minus_x(x)));
        CHECK(worst <= prev_max);
        prev_max = worst;
    }
    CHECK(prev_max < 1.2e-5);  // order-5 worst case observed 1.126e-5
}
