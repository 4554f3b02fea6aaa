#pragma once

#include <array>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colebrook {

// Row schema shared by the compute and sweep commands.  Field order and
// names are fixed; numbers are serialized with 17 significant digits so a
// parse/serialize cycle is byte-identical.
struct OutputRecord {
    std::string method;
    double re = 0.0;
    double eps = 0.0;
    double f = 0.0;
    double inv_sqrt_f = 0.0;
    std::optional<double> delta_pct;
    bool in_domain = true;
};

inline constexpr std::string_view kCsvHeader = "method,re,eps,f,inv_sqrt_f,delta_pct,in_domain";

inline std::string format_double(double v) {
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double: malformed number '" + std::string(s) + "'");
    return v;
}

inline std::string to_csv_row(const OutputRecord& r) {
    std::string out;
    out += r.method;
    out += ',';
    out += format_double(r.re);
    out += ',';
    out += format_double(r.eps);
    out += ',';
    out += format_double(r.f);
    out += ',';
    out += format_double(r.inv_sqrt_f);
    out += ',';
    if (r.delta_pct) out += format_double(*r.delta_pct);
    out += ',';
    out += r.in_domain ? "true" : "false";
    return out;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

inline OutputRecord parse_csv_row(std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.size() != 7)
        throw std::invalid_argument("parse_csv_row: expected 7 fields, got " +
                                    std::to_string(fields.size()));
    OutputRecord r;
    r.method = std::string(fields[0]);
    r.re = parse_double(fields[1]);
    r.eps = parse_double(fields[2]);
    r.f = parse_double(fields[3]);
    r.inv_sqrt_f = parse_double(fields[4]);
    if (!fields[5].empty()) r.delta_pct = parse_double(fields[5]);
    if (fields[6] == "true")
        r.in_domain = true;
    else if (fields[6] == "false")
        r.in_domain = false;
    else
        throw std::invalid_argument("parse_csv_row: in_domain must be true or false");
    return r;
}

}  // namespace colebrook
