#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "colebrook/domain.hpp"
#include "colebrook/evaluate.hpp"
#include "colebrook/method.hpp"
#include "colebrook/reference.hpp"
#include "colebrook/sobol.hpp"
#include "colebrook/types.hpp"

namespace colebrook {

// delta% = (f_ref - f_approx) / f_ref * 100.  Statistics are taken on the
// absolute value; the signed extremes are kept for bias inspection.
inline double rel_error_pct(double f_ref, double f_approx) {
    if (!(f_ref > 0.0))
        throw std::invalid_argument("rel_error_pct: reference friction factor must be positive");
    return (f_ref - f_approx) / f_ref * 100.0;
}

struct ErrorStats {
    std::uint64_t n = 0;
    double max_rel_err_pct = 0.0;
    FlowPoint argmax{};
    double mean_rel_err_pct = 0.0;
    double signed_max = -std::numeric_limits<double>::infinity();
    double signed_min = std::numeric_limits<double>::infinity();
};

namespace detail {

struct SweepPartial {
    double sum_abs = 0.0;
    double max_abs = -1.0;
    FlowPoint argmax{};
    double signed_max = -std::numeric_limits<double>::infinity();
    double signed_min = std::numeric_limits<double>::infinity();
    std::exception_ptr failure;
};

inline void sweep_block(const MethodSpec& m, const DomainSpec& dom, SobolStream stream,
                        std::uint64_t count, SweepPartial& out) {
    try {
        for (std::uint64_t i = 0; i < count; ++i) {
            const FlowPoint p = map_to_domain(stream.next(), dom);
            double d;
            try {
                const double f_ref = solve_reference(p).f;
                const double f_m = evaluate(p, m).f;
                d = rel_error_pct(f_ref, f_m);
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << "error_sweep: failure at re=" << p.re << ", eps=" << p.eps << ": "
                    << e.what();
                throw std::runtime_error(msg.str());
            }
            const double ad = d < 0.0 ? -d : d;
            out.sum_abs += ad;
            if (ad > out.max_abs) {
                out.max_abs = ad;
                out.argmax = p;
            }
            if (d > out.signed_max) out.signed_max = d;
            if (d < out.signed_min) out.signed_min = d;
        }
    } catch (...) {
        out.failure = std::current_exception();
    }
}

}  // namespace detail

// Sweeps |delta%| of one method against the reference over the next n Sobol
// points of the stream.  Work is split into fixed-size index blocks whose
// partial results are merged in block order, so the outcome is bit-identical
// for any thread count.  The caller's stream ends up advanced by n.
inline ErrorStats error_sweep(const MethodSpec& m, SobolStream& stream, std::uint64_t n,
                              const DomainSpec& dom = {}, int threads = 1) {
    if (n < 1) throw std::invalid_argument("error_sweep: need n >= 1");
    validate(dom);

    constexpr std::uint64_t kBlock = 1u << 16;
    const std::uint64_t start = stream.index();
    const std::uint64_t n_blocks = (n + kBlock - 1) / kBlock;
    std::vector<detail::SweepPartial> partials(n_blocks);

    const auto run_blocks = [&](std::uint64_t first_block, std::uint64_t stride) {
        for (std::uint64_t b = first_block; b < n_blocks; b += stride) {
            SobolStream s = stream;
            s.seek(start + b * kBlock);
            const std::uint64_t count = std::min(kBlock, n - b * kBlock);
            detail::sweep_block(m, dom, s, count, partials[b]);
        }
    };

    const std::uint64_t t =
        std::clamp<std::uint64_t>(static_cast<std::uint64_t>(threads < 1 ? 1 : threads), 1,
                                  n_blocks);
    if (t == 1) {
        run_blocks(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(t);
        for (std::uint64_t w = 0; w < t; ++w) pool.emplace_back(run_blocks, w, t);
        for (auto& th : pool) th.join();
    }

    ErrorStats stats;
    stats.n = n;
    double sum = 0.0;
    for (const auto& p : partials) {
        if (p.failure) std::rethrow_exception(p.failure);
        sum += p.sum_abs;
        if (p.max_abs > stats.max_rel_err_pct) {
            stats.max_rel_err_pct = p.max_abs;
            stats.argmax = p.argmax;
        }
        if (p.signed_max > stats.signed_max) stats.signed_max = p.signed_max;
        if (p.signed_min < stats.signed_min) stats.signed_min = p.signed_min;
    }
    stats.mean_rel_err_pct = sum / static_cast<double>(n);
    stream.seek(start + n);
    return stats;
}

struct BenchmarkRecord {
    MethodId id{};
    std::string_view name;
    std::uint64_t n = 0;
    std::uint64_t elapsed_ns = 0;  // best repetition
    double ns_per_eval = 0.0;
    double checksum = 0.0;  // accumulated sum of f over the batch
    std::optional<ErrorStats> error;
};

namespace detail {

// One timed pass, instantiated per method so the formula dispatch happens
// at compile time and each kernel's code layout is independent of the
// calling binary.  Must add up exactly what evaluate() returns.
template <MethodId ID>
[[gnu::noinline]] double timed_pass(const MethodSpec& m, std::span<const FlowPoint> points) {
    double sum = 0.0;
    const auto ln = [](double v) { return std::log(v); };
    for (const FlowPoint& p : points) sum += evaluate_as(ID, p, m, ln).f;
    return sum;
}

inline double run_timed_pass(const MethodSpec& m, std::span<const FlowPoint> points) {
    switch (m.id) {
        case MethodId::reference: return timed_pass<MethodId::reference>(m, points);
        case MethodId::series1: return timed_pass<MethodId::series1>(m, points);
        case MethodId::series2: return timed_pass<MethodId::series2>(m, points);
        case MethodId::series3: return timed_pass<MethodId::series3>(m, points);
        case MethodId::series4: return timed_pass<MethodId::series4>(m, points);
        case MethodId::series5: return timed_pass<MethodId::series5>(m, points);
        case MethodId::series_alpha1: return timed_pass<MethodId::series_alpha1>(m, points);
        case MethodId::series_alpha2: return timed_pass<MethodId::series_alpha2>(m, points);
        case MethodId::series_alpha3: return timed_pass<MethodId::series_alpha3>(m, points);
        case MethodId::series_xi: return timed_pass<MethodId::series_xi>(m, points);
        case MethodId::sr_a: return timed_pass<MethodId::sr_a>(m, points);
        case MethodId::sr_b: return timed_pass<MethodId::sr_b>(m, points);
        case MethodId::sr_c: return timed_pass<MethodId::sr_c>(m, points);
        case MethodId::sr_c_opt: return timed_pass<MethodId::sr_c_opt>(m, points);
        case MethodId::sr_xi1: return timed_pass<MethodId::sr_xi1>(m, points);
    }
    throw std::invalid_argument("timing_run: unregistered method id");
}

}  // namespace detail

// Times the evaluation loop only: points are precomputed by the caller, one
// untimed warm-up pass runs first, and the best of `repetitions` timed
// passes is reported.  The checksum keeps the loop observable and doubles
// as a purity witness across repetitions.
inline BenchmarkRecord timing_run(const MethodSpec& m, std::span<const FlowPoint> points,
                                  int repetitions) {
    if (points.empty()) throw std::invalid_argument("timing_run: empty batch");
    if (repetitions < 1) throw std::invalid_argument("timing_run: need repetitions >= 1");

    const auto pass = [&]() { return detail::run_timed_pass(m, points); };

    const double warm = pass();
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (int r = 0; r < repetitions; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const double sum = pass();
        const auto t1 = std::chrono::steady_clock::now();
        if (sum != warm)
            throw std::logic_error("timing_run: checksum changed between repetitions");
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        best = std::min(best, static_cast<std::uint64_t>(ns));
    }

    BenchmarkRecord rec;
    rec.id = m.id;
    rec.name = m.name;
    rec.n = points.size();
    rec.elapsed_ns = best;
    rec.ns_per_eval = static_cast<double>(best) / static_cast<double>(points.size());
    rec.checksum = warm;
    return rec;
}

struct Table1Options {
    std::uint64_t n = 1'000'000;
    int repetitions = 3;
    int threads = 1;
    std::uint64_t seed_index = 1;
    DomainSpec domain{};
};

// Error sweep plus timing for every registered method, reference first.
// All sweeps rerun the same n Sobol points starting at seed_index; the
// timing batch is those same points, generated once up front.
inline std::vector<BenchmarkRecord> table1_report(const Table1Options& opt = {}) {
    if (opt.n < 1) throw std::invalid_argument("table1_report: need n >= 1");
    validate(opt.domain);

    std::vector<FlowPoint> batch;
    batch.reserve(opt.n);
    SobolStream gen;
    gen.seek(opt.seed_index);
    for (std::uint64_t i = 0; i < opt.n; ++i)
        batch.push_back(map_to_domain(gen.next(), opt.domain));

    std::vector<BenchmarkRecord> rows;
    rows.reserve(method_registry().size());
    for (const MethodSpec& m : method_registry()) {
        SobolStream sweep_stream;
        sweep_stream.seek(opt.seed_index);
        ErrorStats stats = error_sweep(m, sweep_stream, opt.n, opt.domain, opt.threads);
        BenchmarkRecord rec = timing_run(m, batch, opt.repetitions);
        rec.error = stats;
        rows.push_back(rec);
    }
    return rows;
}

}  // namespace colebrook
