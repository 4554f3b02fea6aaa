#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "colebrook/io.hpp"

using colebrook::OutputRecord;

TEST_CASE("doubles round-trip through 17 significant digits") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> values = {0.0,   1.0,  0.05, 4000.0, 1e8, 1.0 / 3.0,
                                  3.141592653589793, 0.018512499481647092};
    for (int i = 0; i < 200; ++i) values.push_back(std::ldexp(u(rng), i % 60 - 30));
    for (double v : values) {
        CHECK(colebrook::parse_double(colebrook::format_double(v)) == v);
    }
}

TEST_CASE("csv rows serialize and parse losslessly") {
    OutputRecord r;
    r.method = "sr-c-opt";
    r.re = 123456.789;
    r.eps = 1e-4;
    r.f = 0.018512499481647092;
    r.inv_sqrt_f = 7.349641234;
    r.delta_pct = -0.000731;
    r.in_domain = true;

    const std::string line = colebrook::to_csv_row(r);
    const OutputRecord q = colebrook::parse_csv_row(line);
    CHECK(q.method == r.method);
    CHECK(q.re == r.re);
    CHECK(q.eps == r.eps);
    CHECK(q.f == r.f);
    CHECK(q.inv_sqrt_f == r.inv_sqrt_f);
    REQUIRE(q.delta_pct.has_value());
    CHECK(*q.delta_pct == *r.delta_pct);
    CHECK(q.in_domain == r.in_domain);
    CHECK(colebrook::to_csv_row(q) == line);  // byte-identical re-serialization
}

TEST_CASE("missing delta serializes as an empty field") {
    OutputRecord r;
    r.method = "reference";
    r.re = 4000.0;
    r.eps = 0.0;
    r.f = 0.0399070140556349;
    r.inv_sqrt_f = 5.0058;
    r.in_domain = false;

    const std::string line = colebrook::to_csv_row(r);
    CHECK(line.find(",,") != std::string::npos);
    const OutputRecord q = colebrook::parse_csv_row(line);
    CHECK_FALSE(q.delta_pct.has_value());
    CHECK_FALSE(q.in_domain);
    CHECK(colebrook::to_csv_row(q) == line);
}

TEST_CASE("malformed rows are rejected") {
    CHECK_THROWS_AS(colebrook::parse_csv_row("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::parse_csv_row("m,1,2,3,4,,maybe"), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::parse_csv_row("m,xx,2,3,4,,true"), std::invalid_argument);
    CHECK_THROWS_AS(colebrook::parse_csv_row("m,1,2,3,4,5,true,extra"),
                    std::invalid_argument);
}

TEST_CASE("schema header") {
    CHECK(colebrook::kCsvHeader == "method,re,eps,f,inv_sqrt_f,delta_pct,in_domain");
}
