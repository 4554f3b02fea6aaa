#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "colebrook/domain.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using colebrook::AxisScale;
using colebrook::DomainSpec;

TEST_CASE("map_to_domain hits the corners") {
    const DomainSpec d{};
    const auto lo = colebrook::map_to_domain(0.0, 0.0, d);
    CHECK(lo.re == 4000.0);
    CHECK(lo.eps == 0.0);

    const double u_top = 1.0 - 0x1p-32;
    const auto hi = colebrook::map_to_domain(u_top, u_top, d);
    CHECK_THAT(hi.re, WithinRel(1e8, 1e-5));
    CHECK_THAT(hi.eps, WithinRel(0.05, 1e-6));
    CHECK(hi.re <= 1e8);
    CHECK(hi.eps <= 0.05);
}

TEST_CASE("log scale places the midpoint at the geometric mean") {
    const auto mid = colebrook::map_to_domain(0.5, 0.5, DomainSpec{});
    CHECK_THAT(mid.re, WithinRel(std::sqrt(4000.0 * 1e8), 1e-12));  // ~6.32e5
    CHECK_THAT(mid.eps, WithinAbs(0.025, 1e-15));
}

TEST_CASE("linear Reynolds scale") {
    DomainSpec d{};
    d.re_scale = AxisScale::linear;
    const auto mid = colebrook::map_to_domain(0.5, 0.0, d);
    CHECK_THAT(mid.re, WithinRel(0.5 * (4000.0 + 1e8), 1e-15));
}

TEST_CASE("log-floor roughness scale never returns zero") {
    DomainSpec d{};
    d.eps_scale = AxisScale::log_floor;
    CHECK(colebrook::map_to_domain(0.0, 0.0, d).eps == d.eps_floor);
    CHECK_THAT(colebrook::map_to_domain(0.0, 1.0, d).eps, WithinRel(0.05, 1e-12));
    const double mid = colebrook::map_to_domain(0.0, 0.5, d).eps;
    CHECK_THAT(mid, WithinRel(std::sqrt(d.eps_floor * 0.05), 1e-12));
}

TEST_CASE("domain validation") {
    DomainSpec d{};
    d.re_min = 5000.0;
    d.re_max = 4000.0;
    CHECK_THROWS_AS(colebrook::validate(d), std::invalid_argument);

    DomainSpec d2{};
    d2.eps_scale = AxisScale::log;
    CHECK_THROWS_AS(colebrook::validate(d2), std::invalid_argument);

    DomainSpec d3{};
    d3.re_scale = AxisScale::log_floor;
    CHECK_THROWS_AS(colebrook::validate(d3), std::invalid_argument);

    DomainSpec d4{};
    d4.eps_min = -0.01;
    CHECK_THROWS_AS(colebrook::validate(d4), std::invalid_argument);
}

TEST_CASE("grid endpoints and interior structure") {
    const DomainSpec d{};
    const auto corners = colebrook::grid(d, 2, 2);
    REQUIRE(corners.size() == 4);
    CHECK(corners[0].re == 4000.0);
    CHECK(corners[0].eps == 0.0);
    CHECK(corners[1].re == 4000.0);
    CHECK(corners[1].eps == 0.05);
    CHECK(corners[2].re == 1e8);
    CHECK(corners[2].eps == 0.0);
    CHECK(corners[3].re == 1e8);
    CHECK(corners[3].eps == 0.05);

    const auto g32 = colebrook::grid(d, 3, 2);
    REQUIRE(g32.size() == 6);
    CHECK_THAT(g32[2].re, WithinRel(std::sqrt(4000.0 * 1e8), 1e-12));

    for (const auto& p : colebrook::grid(d, 7, 5)) CHECK(colebrook::in_domain(p));

    CHECK_THROWS_AS(colebrook::grid(d, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::grid(d, 2, 0), std::invalid_argument);
}
