// Command-line front end: single-point computation, accuracy/speed report,
// domain sweeps for plotting and a timing-only benchmark.
//
// Exit codes: 0 success, 1 internal/oracle failure, 2 usage error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colebrook/colebrook.hpp"

namespace {

using nlohmann::json;

struct DomainFlags {
    double re_min = colebrook::kReMin;
    double re_max = colebrook::kReMax;
    double eps_min = colebrook::kEpsMin;
    double eps_max = colebrook::kEpsMax;
    std::string re_scale = "log";
    std::string eps_scale = "linear";
};

void add_domain_flags(CLI::App* cmd, DomainFlags& df) {
    cmd->add_option("--re-min", df.re_min, "Lower Reynolds bound")->capture_default_str();
    cmd->add_option("--re-max", df.re_max, "Upper Reynolds bound")->capture_default_str();
    cmd->add_option("--eps-min", df.eps_min, "Lower roughness bound")->capture_default_str();
    cmd->add_option("--eps-max", df.eps_max, "Upper roughness bound")->capture_default_str();
    cmd->add_option("--re-scale", df.re_scale, "Reynolds sampling scale")
        ->check(CLI::IsMember({"log", "linear"}))
        ->capture_default_str();
    cmd->add_option("--eps-scale", df.eps_scale, "Roughness sampling scale")
        ->check(CLI::IsMember({"linear", "log-floor"}))
        ->capture_default_str();
}

colebrook::DomainSpec to_domain(const DomainFlags& df) {
    colebrook::DomainSpec d;
    d.re_min = df.re_min;
    d.re_max = df.re_max;
    d.eps_min = df.eps_min;
    d.eps_max = df.eps_max;
    d.re_scale = df.re_scale == "log" ? colebrook::AxisScale::log : colebrook::AxisScale::linear;
    d.eps_scale = df.eps_scale == "linear" ? colebrook::AxisScale::linear
                                           : colebrook::AxisScale::log_floor;
    colebrook::validate(d);
    return d;
}

json to_json(const colebrook::OutputRecord& r) {
    json j{{"method", r.method}, {"re", r.re},
           {"eps", r.eps},       {"f", r.f},
           {"inv_sqrt_f", r.inv_sqrt_f}, {"in_domain", r.in_domain}};
    if (r.delta_pct)
        j["delta_pct"] = *r.delta_pct;
    else
        j["delta_pct"] = nullptr;
    return j;
}

void warn_out_of_domain(const colebrook::FlowPoint& p) {
    std::cerr << "warning: (re=" << p.re << ", eps=" << p.eps
              << ") is outside the engineering domain re in [4000, 1e8], eps in [0, 0.05]; "
                 "result computed anyway\n";
}

int run_compute(double re, double eps, const std::string& method_name, bool with_reference,
                const std::string& format) {
    const colebrook::MethodSpec& m = colebrook::find_method(method_name);
    const colebrook::FlowPoint p{re, eps};
    const colebrook::FrictionResult r = colebrook::evaluate(p, m);

    colebrook::OutputRecord rec;
    rec.method = std::string(m.name);
    rec.re = re;
    rec.eps = eps;
    rec.f = r.f;
    rec.inv_sqrt_f = r.inv_sqrt_f;
    rec.in_domain = r.in_domain;
    if (with_reference) {
        const double f_ref = colebrook::solve_reference(p).f;
        rec.delta_pct = colebrook::rel_error_pct(f_ref, r.f);
    }
    if (!r.in_domain) warn_out_of_domain(p);

    if (format == "csv") {
        std::cout << colebrook::kCsvHeader << '\n' << colebrook::to_csv_row(rec) << '\n';
    } else if (format == "json") {
        std::cout << to_json(rec).dump() << '\n';
    } else {
        std::cout << "method      " << rec.method << '\n'
                  << "re          " << colebrook::format_double(rec.re) << '\n'
                  << "eps         " << colebrook::format_double(rec.eps) << '\n'
                  << "f           " << colebrook::format_double(rec.f) << '\n'
                  << "1/sqrt(f)   " << colebrook::format_double(rec.inv_sqrt_f) << '\n';
        if (rec.delta_pct)
            std::cout << "delta_pct   " << colebrook::format_double(*rec.delta_pct)
                      << "  (vs reference)\n";
        std::cout << "in_domain   " << (rec.in_domain ? "true" : "false") << '\n';
    }
    return 0;
}

int run_table1(std::uint64_t n, bool full, int reps, int threads, std::uint64_t seed_index,
                const DomainFlags& df, const std::string& format) {
    colebrook::Table1Options opt;
    opt.n = full ? 8'000'000ull : n;
    opt.repetitions = reps;
    opt.threads = threads;
    opt.seed_index = seed_index;
    opt.domain = to_domain(df);

    const std::vector<colebrook::BenchmarkRecord> rows = colebrook::table1_report(opt);
    const double ref_ns = rows.front().ns_per_eval;

    if (format == "csv") {
        std::cout << "method,family,n,max_delta_pct,mean_delta_pct,argmax_re,argmax_eps,"
                     "ns_per_eval,speedup\n";
        for (const auto& r : rows) {
            const colebrook::ErrorStats& e = *r.error;
            std::cout << r.name << ',' << colebrook::method(r.id).family << ',' << r.n << ','
                      << colebrook::format_double(e.max_rel_err_pct) << ','
                      << colebrook::format_double(e.mean_rel_err_pct) << ','
                      << colebrook::format_double(e.argmax.re) << ','
                      << colebrook::format_double(e.argmax.eps) << ','
                      << colebrook::format_double(r.ns_per_eval) << ','
                      << colebrook::format_double(ref_ns / r.ns_per_eval) << '\n';
        }
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            const colebrook::ErrorStats& e = *r.error;
            arr.push_back({{"method", r.name},
                           {"family", colebrook::method(r.id).family},
                           {"n", r.n},
                           {"max_delta_pct", e.max_rel_err_pct},
                           {"mean_delta_pct", e.mean_rel_err_pct},
                           {"argmax_re", e.argmax.re},
                           {"argmax_eps", e.argmax.eps},
                           {"ns_per_eval", r.ns_per_eval},
                           {"speedup", ref_ns / r.ns_per_eval}});
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(15) << "method" << std::setw(32) << "family"
                  << std::right << std::setw(13) << "max|d%|" << std::setw(13) << "mean|d%|"
                  << std::setw(11) << "ns/eval" << std::setw(10) << "speedup" << '\n';
        for (const auto& r : rows) {
            const colebrook::ErrorStats& e = *r.error;
            std::cout << std::left << std::setw(15) << r.name << std::setw(32)
                      << colebrook::method(r.id).family << std::right << std::setw(13)
                      << std::setprecision(4) << e.max_rel_err_pct << std::setw(13)
                      << e.mean_rel_err_pct << std::setw(11) << std::setprecision(1)
                      << std::fixed << r.ns_per_eval << std::setw(10)
                      << ref_ns / r.ns_per_eval << '\n';
            std::cout.unsetf(std::ios::fixed);
            std::cout << std::setprecision(6);
        }
        std::cout << "(n = " << rows.front().n << " quasi-Monte-Carlo points per method)\n";
    }
    return 0;
}

int run_sweep(const DomainFlags& df, int n_re, int n_eps,
              const std::vector<std::string>& methods, bool with_reference, bool figure1,
              std::uint64_t n_points, const std::string& format) {
    const colebrook::DomainSpec dom = to_domain(df);

    if (figure1) {
        // x-profile of y = omega(x) - x over the induced range of the domain.
        const colebrook::MethodSpec& ref = colebrook::method(colebrook::MethodId::reference);
        const double x_lo =
            colebrook::transform({dom.re_min, dom.eps_min}, ref).x;
        const double x_hi =
            colebrook::transform({dom.re_max, dom.eps_max}, ref).x;
        if (n_points < 2) throw std::invalid_argument("sweep: need --n >= 2 for figure1");
        std::cout << "x,y\n";
        const double llo = std::log(x_lo);
        const double lhi = std::log(x_hi);
        for (std::uint64_t i = 0; i < n_points; ++i) {
            double x = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                          static_cast<double>(n_points - 1));
            if (i == 0) x = x_lo;
            if (i == n_points - 1) x = x_hi;
            std::cout << colebrook::format_double(x) << ','
                      << colebrook::format_double(colebrook::omega_minus_x(x)) << '\n';
        }
        return 0;
    }

    const std::vector<colebrook::FlowPoint> pts = colebrook::grid(dom, n_re, n_eps);
    json arr = json::array();
    if (format != "json") std::cout << colebrook::kCsvHeader << '\n';
    for (const std::string& name : methods) {
        const colebrook::MethodSpec& m = colebrook::find_method(name);
        for (const colebrook::FlowPoint& p : pts) {
            const colebrook::FrictionResult r = colebrook::evaluate(p, m);
            colebrook::OutputRecord rec;
            rec.method = std::string(m.name);
            rec.re = p.re;
            rec.eps = p.eps;
            rec.f = r.f;
            rec.inv_sqrt_f = r.inv_sqrt_f;
            rec.in_domain = r.in_domain;
            if (with_reference)
                rec.delta_pct =
                    colebrook::rel_error_pct(colebrook::solve_reference(p).f, r.f);
            if (format == "json")
                arr.push_back(to_json(rec));
            else
                std::cout << colebrook::to_csv_row(rec) << '\n';
        }
    }
    if (format == "json") std::cout << arr.dump(2) << '\n';
    return 0;
}

int run_bench(std::uint64_t n, bool full, int reps, std::uint64_t seed_index,
              const DomainFlags& df, std::vector<std::string> methods,
              const std::string& format) {
    const colebrook::DomainSpec dom = to_domain(df);
    if (full) n = 8'000'000ull;
    if (n < 1) throw std::invalid_argument("bench: need --n >= 1");

    std::vector<colebrook::FlowPoint> batch;
    batch.reserve(n);
    colebrook::SobolStream gen;
    gen.seek(seed_index);
    for (std::uint64_t i = 0; i < n; ++i)
        batch.push_back(colebrook::map_to_domain(gen.next(), dom));

    if (methods.empty())
        for (const auto& m : colebrook::method_registry()) methods.emplace_back(m.name);

    const colebrook::BenchmarkRecord ref_rec = colebrook::timing_run(
        colebrook::method(colebrook::MethodId::reference), batch, reps);

    json arr = json::array();
    if (format == "csv")
        std::cout << "method,n,reps,ns_per_eval,elapsed_ns,checksum,speedup\n";
    else if (format != "json")
        std::cout << std::left << std::setw(15) << "method" << std::right << std::setw(11)
                  << "ns/eval" << std::setw(10) << "speedup" << '\n';

    for (const std::string& name : methods) {
        const colebrook::MethodSpec& m = colebrook::find_method(name);
        const colebrook::BenchmarkRecord r =
            m.id == colebrook::MethodId::reference ? ref_rec
                                                   : colebrook::timing_run(m, batch, reps);
        const double speedup = ref_rec.ns_per_eval / r.ns_per_eval;
        if (format == "csv") {
            std::cout << r.name << ',' << r.n << ',' << reps << ','
                      << colebrook::format_double(r.ns_per_eval) << ',' << r.elapsed_ns << ','
                      << colebrook::format_double(r.checksum) << ','
                      << colebrook::format_double(speedup) << '\n';
        } else if (format == "json") {
            arr.push_back({{"method", r.name},
                           {"n", r.n},
                           {"reps", reps},
                           {"ns_per_eval", r.ns_per_eval},
                           {"elapsed_ns", r.elapsed_ns},
                           {"checksum", r.checksum},
                           {"speedup", speedup}});
        } else {
            std::cout << std::left << std::setw(15) << r.name << std::right << std::setw(11)
                      << std::fixed << std::setprecision(1) << r.ns_per_eval << std::setw(10)
                      << speedup << '\n';
            std::cout.unsetf(std::ios::fixed);
            std::cout << std::setprecision(6);
        }
    }
    if (format == "json") std::cout << arr.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colebrook flow-friction toolkit: explicit Wright-omega approximations, "
                 "iterative reference solution, accuracy sweeps and speed benchmarks"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"plain", "csv", "json"};

    // compute
    double re = 0.0, eps = 0.0;
    std::string method_name = "sr-c-opt";
    bool with_reference = false;
    std::string format = "plain";
    CLI::App* compute = app.add_subcommand("compute", "Friction factor at one (Re, eps) point");
    compute->add_option("--re", re, "Reynolds number")->required()->check(CLI::PositiveNumber);
    compute->add_option("--eps", eps, "Relative roughness")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    compute->add_option("--method", method_name, "Approximation to use")
        ->capture_default_str();
    compute->add_flag("--with-reference", with_reference,
                      "Also solve the reference and report delta_pct");
    compute->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    compute->callback(
        [&] { run_compute(re, eps, method_name, with_reference, format); });

    // table1
    std::uint64_t t_n = 1'000'000;
    bool t_full = false;
    int t_reps = 3;
    int t_threads = 1;
    std::uint64_t t_seed = 1;
    DomainFlags t_df;
    std::string t_format = "plain";
    CLI::App* table1 = app.add_subcommand(
        "table1", "Accuracy and speed report for every registered method");
    table1->add_option("--n", t_n, "Quasi-Monte-Carlo sample size")->capture_default_str();
    table1->add_flag("--full", t_full, "Use the full 8e6-point sample");
    table1->add_option("--reps", t_reps, "Timing repetitions")->capture_default_str();
    table1->add_option("--threads", t_threads, "Worker threads for the error sweeps")
        ->capture_default_str();
    table1->add_option("--seed-index", t_seed, "First Sobol point index")
        ->capture_default_str();
    add_domain_flags(table1, t_df);
    table1->add_option("--format", t_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    table1->callback([&] {
        run_table1(t_n, t_full, t_reps, t_threads, t_seed, t_df, t_format);
    });

    // sweep
    DomainFlags s_df;
    int s_nre = 50, s_neps = 5;
    std::vector<std::string> s_methods = {"sr-c-opt"};
    bool s_withref = false, s_figure1 = false;
    std::uint64_t s_n = 10'000;
    std::string s_format = "csv";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Deterministic grid sweep (CSV for external plotting)");
    add_domain_flags(sweep, s_df);
    sweep->add_option("--n-re", s_nre, "Grid points along Re")->capture_default_str();
    sweep->add_option("--n-eps", s_neps, "Grid points along eps")->capture_default_str();
    sweep->add_option("--method", s_methods, "Methods to emit")->capture_default_str();
    sweep->add_flag("--with-reference", s_withref, "Include delta_pct vs the reference");
    sweep->add_flag("--figure1", s_figure1,
                    "Emit the (x, omega(x)-x) profile instead of friction rows");
    sweep->add_option("--n", s_n, "Points for the figure1 profile")->capture_default_str();
    sweep->add_option("--format", s_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sweep->callback([&] {
        run_sweep(s_df, s_nre, s_neps, s_methods, s_withref, s_figure1, s_n, s_format);
    });

    // bench
    std::uint64_t b_n = 1'000'000;
    bool b_full = false;
    int b_reps = 5;
    std::uint64_t b_seed = 1;
    DomainFlags b_df;
    std::vector<std::string> b_methods;
    std::string b_format = "plain";
    CLI::App* bench = app.add_subcommand(
        "bench", "Timing-only benchmark (single-threaded by contract)");
    bench->add_option("--n", b_n, "Evaluation batch size")->capture_default_str();
    bench->add_flag("--full", b_full, "Use the full 8e6-point batch");
    bench->add_option("--reps", b_reps, "Timing repetitions")->capture_default_str();
    bench->add_option("--seed-index", b_seed, "First Sobol point index")
        ->capture_default_str();
    add_domain_flags(bench, b_df);
    bench->add_option("--method", b_methods, "Methods to time (default: all)");
    bench->add_option("--format", b_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    bench->callback([&] {
        run_bench(b_n, b_full, b_reps, b_seed, b_df, b_methods, b_format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
