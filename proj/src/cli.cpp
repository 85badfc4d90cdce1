#include "dtmm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtmm/basis.hpp"
#include "dtmm/bloch.hpp"
#include "dtmm/errors.hpp"
#include "dtmm/oracle.hpp"
#include "dtmm/propagate.hpp"

namespace dtmm {

namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& message) { throw ConfigError(message); }

double as_double(const json& j, const std::string& key) {
    if (!j.is_number()) bad_config("config key '" + key + "' must be a number");
    return j.get<double>();
}

int as_positive_int(const json& j, const std::string& key) {
    if (!j.is_number_integer() || j.get<long long>() < 1)
        bad_config("config key '" + key + "' must be a positive integer");
    return static_cast<int>(j.get<long long>());
}

std::string as_string(const json& j, const std::string& key) {
    if (!j.is_string()) bad_config("config key '" + key + "' must be a string");
    return j.get<std::string>();
}

template <std::size_t N>
std::array<double, N> as_array(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != N)
        bad_config("config key '" + key + "' must be an array of " + std::to_string(N) +
                   " numbers");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = as_double(j[i], key);
    return out;
}

Expression parse_config_expression(const std::string& text, const std::string& key) {
    try {
        return parse_expression(text);
    } catch (const ParseError& e) {
        bad_config("config key '" + key + "': " + e.what());
    }
}

// Spot-check that an expression evaluates to finite values across a window.
void check_finite(const Expression& e, double lo, double hi, const std::string& key) {
    const int scan = 256;
    try {
        for (int i = 0; i <= scan; ++i) {
            double t = lo + (hi - lo) * i / scan;
            e.eval(t);
        }
    } catch (const DomainError& err) {
        bad_config("config key '" + key + "' is not evaluable over the domain: " +
                   err.what());
    }
}

struct SolveSetup {
    CoefficientProfile profile;
    double alpha = 0.0;
    double x_end = 0.0;
    int sections = 1;
};

SolveSetup validate_solve_config(const ProblemConfig& cfg) {
    if (cfg.g.empty()) bad_config("config key 'g' is required");
    if (!cfg.domain) bad_config("config key 'domain' is required");
    double lo = (*cfg.domain)[0];
    double hi = (*cfg.domain)[1];
    if (!(lo <= hi)) bad_config("config key 'domain' must satisfy lo <= hi");

    CoefficientProfile profile;
    profile.g = parse_config_expression(cfg.g, "g");
    if (cfg.h) profile.h = parse_config_expression(*cfg.h, "h");
    profile.lo = lo;
    profile.hi = hi;
    check_finite(profile.g, lo, hi, "g");
    if (profile.h) check_finite(*profile.h, lo, hi, "h");

    double alpha = cfg.alpha.value_or(lo);
    if (!(alpha >= lo && alpha <= hi)) bad_config("config key 'alpha' must lie in the domain");

    int sections = cfg.sections ? *cfg.sections : default_sections(profile, alpha, hi);
    return {std::move(profile), alpha, hi, sections};
}

struct BandSetup {
    Expression V;
    double e_lo = 0.0, e_hi = 0.0;
    int count = 1;
    double L = 1.0;
    double x0 = 0.0;
    int sections = 1;
};

BandSetup validate_band_config(const ProblemConfig& cfg) {
    if (!cfg.V) bad_config("band mode requires config key 'V'");
    if (!cfg.E_range) bad_config("band mode requires config key 'E_range'");
    if (!cfg.L) bad_config("band mode requires config key 'L'");
    double L = *cfg.L;
    if (!(L > 0.0)) bad_config("config key 'L' must be positive");
    double count_raw = (*cfg.E_range)[2];
    if (!(count_raw >= 1.0) || count_raw != std::floor(count_raw))
        bad_config("config key 'E_range' count must be a positive integer");

    BandSetup setup{parse_config_expression(*cfg.V, "V"),
                    (*cfg.E_range)[0],
                    (*cfg.E_range)[1],
                    static_cast<int>(count_raw),
                    L,
                    cfg.domain ? (*cfg.domain)[0] : -0.5 * L,
                    0};
    check_finite(setup.V, setup.x0, setup.x0 + L, "V");

    if (cfg.sections) {
        setup.sections = *cfg.sections;
    } else {
        CoefficientProfile worst;
        double e_big = std::max(std::abs(setup.e_lo), std::abs(setup.e_hi));
        worst.g = binary_expr('+', number_expr(e_big),
                              call_expr(Func::abs, setup.V));
        worst.lo = setup.x0;
        worst.hi = setup.x0 + L;
        setup.sections = default_sections(worst, setup.x0, setup.x0 + L);
    }
    return setup;
}

std::string csv_field(double v) {
    if (std::isnan(v)) return "nan";
    return fmt17(v);
}

} // namespace

std::string fmt17(double v) {
    if (v == 0.0) return "0";  // never emit the cosmetic "-0"
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_config("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad_config("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) bad_config("config root must be a JSON object");

    ProblemConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "g") cfg.g = as_string(value, key);
        else if (key == "h") cfg.h = as_string(value, key);
        else if (key == "domain") cfg.domain = as_array<2>(value, key);
        else if (key == "initial") cfg.initial = as_array<4>(value, key);
        else if (key == "alpha") cfg.alpha = as_double(value, key);
        else if (key == "sections") cfg.sections = as_positive_int(value, key);
        else if (key == "corrected") {
            if (!value.is_boolean()) bad_config("config key 'corrected' must be a boolean");
            cfg.corrected = value.get<bool>();
        }
        else if (key == "V") cfg.V = as_string(value, key);
        else if (key == "E_range") cfg.E_range = as_array<3>(value, key);
        else if (key == "L") cfg.L = as_double(value, key);
        else bad_config("unknown config key '" + key + "'");
    }
    return cfg;
}

int default_sections(const CoefficientProfile& p, double a, double b) {
    const int scan = 256;
    double worst = 0.0;
    for (int i = 0; i <= scan; ++i) {
        double t = a + (b - a) * i / scan;
        worst = std::max(worst, std::hypot(p.eval_g(t), p.eval_h(t)));
    }
    double n = 64.0 * std::sqrt(worst) * std::abs(b - a);
    n = std::clamp(n, 1.0, 200000.0);
    return static_cast<int>(std::ceil(n));
}

int cmd_solve(const ProblemConfig& cfg, std::ostream& out, std::ostream& err) {
    SolveSetup setup;
    State s0{cfg.initial[0], cfg.initial[1], cfg.initial[2], cfg.initial[3]};
    int per_section = 1;
    try {
        setup = validate_solve_config(cfg);
        per_section = cfg.samples.value_or(1);
        if (per_section < 1) bad_config("samples must be >= 1");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Partition part = make_partition(setup.alpha, setup.x_end, setup.sections);
    SolutionTrace trace;
    try {
        trace = solve_ivp(setup.profile, part, s0, cfg.corrected, per_section);
    } catch (const std::exception& e) {
        err << "solve failed: " << e.what() << "\n";
        return 1;
    }

    out << "x,u,v,du,dv\n";
    for (const auto& row : trace)
        out << fmt17(row.x) << ',' << fmt17(row.s.u) << ',' << fmt17(row.s.v) << ','
            << fmt17(row.s.du) << ',' << fmt17(row.s.dv) << '\n';
    return 0;
}

int cmd_basis(const ProblemConfig& cfg, std::ostream& out, std::ostream& err) {
    SolveSetup setup;
    int rows = 101;
    try {
        setup = validate_solve_config(cfg);
        if (!setup.profile.is_real())
            bad_config("basis mode requires a real profile (no 'h')");
        rows = cfg.samples.value_or(101);
        if (rows < 1) bad_config("samples must be >= 1");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    struct Row {
        double x;
        BasisEval b;
        WkbEval w;
    };
    std::vector<Row> table;
    table.reserve(static_cast<std::size_t>(rows));
    try {
        for (int i = 0; i < rows; ++i) {
            double x = rows == 1 ? setup.alpha
                                 : setup.alpha + (setup.x_end - setup.alpha) * i / (rows - 1);
            table.push_back({x, basis_at(setup.profile, setup.alpha, x, cfg.corrected),
                             wkb_at(setup.profile, setup.alpha, x)});
        }
    } catch (const std::exception& e) {
        err << "basis evaluation failed: " << e.what() << "\n";
        return 1;
    }

    out << "x,psi1,psi2,psi3,psi4,wkb_u1,wkb_u2\n";
    for (const auto& row : table) {
        out << fmt17(row.x) << ',' << fmt17(row.b.psi1) << ',' << fmt17(row.b.psi2) << ','
            << fmt17(row.b.psi3) << ',' << fmt17(row.b.psi4) << ',';
        if (row.w.turning_point)
            out << "div,div\n";
        else
            out << fmt17(row.w.u1) << ',' << fmt17(row.w.u2) << '\n';
    }
    return 0;
}

int cmd_band(const ProblemConfig& cfg, std::ostream& out, std::ostream& err) {
    BandSetup setup;
    try {
        setup = validate_band_config(cfg);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<BandPoint> points =
        band_scan(setup.V, setup.e_lo, setup.e_hi, setup.count, setup.L, setup.x0,
                  setup.sections, cfg.corrected, {}, ExecPolicy::parallel);

    out << "E,re_kappa1,im_kappa1,re_kappa2,im_kappa2,propagating\n";
    int ok_count = 0;
    for (const auto& pt : points) {
        out << fmt17(pt.E) << ',' << csv_field(pt.kappa1.real()) << ','
            << csv_field(pt.kappa1.imag()) << ',' << csv_field(pt.kappa2.real()) << ','
            << csv_field(pt.kappa2.imag()) << ',' << (pt.propagating ? '1' : '0') << '\n';
        if (pt.ok) ++ok_count;
    }
    if (ok_count == 0) {
        err << "band scan failed at every sampled energy\n";
        return 1;
    }
    return 0;
}

int cmd_compare(const ProblemConfig& cfg, std::ostream& out, std::ostream& err) {
    SolveSetup setup;
    try {
        setup = validate_solve_config(cfg);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    State s0{cfg.initial[0], cfg.initial[1], cfg.initial[2], cfg.initial[3]};

    Partition part = make_partition(setup.alpha, setup.x_end, setup.sections);
    SolutionTrace trace;
    std::vector<State> reference;
    try {
        trace = solve_ivp(setup.profile, part, s0, cfg.corrected, 1);
        std::vector<double> xs;
        xs.reserve(trace.size());
        for (const auto& row : trace) xs.push_back(row.x);
        OracleConfig ocfg;
        ocfg.step = 1e-2;
        ocfg.tolerance = 1e-10;
        reference = rk_trace(setup.profile, setup.alpha, s0, xs, ocfg);
    } catch (const std::exception& e) {
        err << "compare failed: " << e.what() << "\n";
        return 1;
    }

    out << "x,u_dtmm,u_oracle,abs_err\n";
    double worst = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        double a = trace[i].s.u;
        double b = reference[i].u;
        double e = std::abs(a - b);
        worst = std::max(worst, e);
        out << fmt17(trace[i].x) << ',' << fmt17(a) << ',' << fmt17(b) << ',' << fmt17(e)
            << '\n';
    }
    err << "max_abs_err=" << fmt17(worst) << "\n";
    return 0;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Transfer-matrix solver for y'' + f(x) y = 0 with complex-valued f"};
    app.require_subcommand(1);

    struct ModeOpts {
        std::string config;
        std::string out_path;
        int sections = 0;
        int samples = 0;
        CLI::Option* sections_opt = nullptr;
        CLI::Option* samples_opt = nullptr;
        CLI::Option* corrected_opt = nullptr;
        CLI::Option* uncorrected_opt = nullptr;
    };

    auto add_mode = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        auto opts = std::make_shared<ModeOpts>();
        sub->add_option("--config", opts->config, "JSON problem description")
            ->required();
        sub->add_option("--out", opts->out_path, "output CSV path (default: stdout)");
        opts->sections_opt =
            sub->add_option("--sections", opts->sections, "override section count");
        opts->samples_opt = sub->add_option("--samples", opts->samples,
                                            "solve: samples per section; basis: total rows");
        opts->corrected_opt =
            sub->add_flag("--corrected", "enable the commutator correction");
        opts->uncorrected_opt =
            sub->add_flag("--uncorrected", "disable the commutator correction");
        opts->corrected_opt->excludes(opts->uncorrected_opt);
        return std::pair{sub, opts};
    };

    auto [solve_cmd, solve_opts] = add_mode("solve", "sectioned initial-value solve, CSV trace");
    auto [basis_cmd, basis_opts] = add_mode("basis", "basis functions vs the WKB pair");
    auto [band_cmd, band_opts] = add_mode("band", "Bloch band structure over an energy range");
    auto [compare_cmd, compare_opts] =
        add_mode("compare", "solve vs the brute-force reference integrator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto selected = [&]() -> std::pair<int (*)(const ProblemConfig&, std::ostream&, std::ostream&),
                                       std::shared_ptr<ModeOpts>> {
        if (app.got_subcommand(solve_cmd)) return {cmd_solve, solve_opts};
        if (app.got_subcommand(basis_cmd)) return {cmd_basis, basis_opts};
        if (app.got_subcommand(band_cmd)) return {cmd_band, band_opts};
        return {cmd_compare, compare_opts};
    }();

    try {
        ProblemConfig cfg = load_config(selected.second->config);
        const ModeOpts& mo = *selected.second;
        if (mo.sections_opt->count() > 0) {
            if (mo.sections < 1) bad_config("--sections must be >= 1");
            cfg.sections = mo.sections;
        }
        if (mo.samples_opt->count() > 0) {
            if (mo.samples < 1) bad_config("--samples must be >= 1");
            cfg.samples = mo.samples;
        }
        if (mo.corrected_opt->count() > 0) cfg.corrected = true;
        if (mo.uncorrected_opt->count() > 0) cfg.corrected = false;

        std::ofstream file;
        if (!mo.out_path.empty()) {
            file.open(mo.out_path);
            if (!file) bad_config("cannot open output file '" + mo.out_path + "'");
        }
        std::ostream& out = mo.out_path.empty() ? std::cout : file;
        return selected.first(cfg, out, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dtmm
