// cli.hpp — command-line front end.  Subcommands: spectrum, smatrix,
// contrast, route, features, verify, sweep.  Exit codes: 0 success,
// 1 verification/evaluation failure, 2 usage or config errors.

#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmol/analysis.hpp"
#include "gmol/oracle.hpp"
#include "gmol/sweep.hpp"
#include "gmol/verify.hpp"

namespace gmol::cli {

namespace detail {

// Scalar flags are taken as strings so values like "0.5pi" work everywhere.
struct ParamFlags {
    std::string gamma_all, glr, gll, ger, gel;
    std::string g, theta, theta_l, theta_d, tau, tau_l, tau_d;

    void attach(CLI::App* cmd) {
        cmd->add_option("--gamma-all", gamma_all,
                        "all four decay rates (reference-rate units)");
        cmd->add_option("--gamma-lambda-r", glr,
                        "atom a -> right-movers of waveguide M");
        cmd->add_option("--gamma-lambda-l", gll,
                        "atom a -> left-movers of waveguide M");
        cmd->add_option("--gamma-eta-r", ger,
                        "atom b -> right-movers of waveguide N");
        cmd->add_option("--gamma-eta-l", gel,
                        "atom b -> left-movers of waveguide N");
        cmd->add_option("--g", g, "inner atom-atom coupling");
        cmd->add_option("--theta", theta,
                        "constant leg phase, both legs (accepts pi suffix)");
        cmd->add_option("--theta-l", theta_l, "constant phase, M leg");
        cmd->add_option("--theta-d", theta_d, "constant phase, N leg");
        cmd->add_option("--tau", tau, "propagation time, both legs");
        cmd->add_option("--tau-l", tau_l, "propagation time, M leg");
        cmd->add_option("--tau-d", tau_d, "propagation time, N leg");
    }

    SystemParams build(std::ostream& err) const {
        SystemParams p;
        const auto set = [](const std::string& s, auto&&... fields) {
            if (!s.empty()) {
                const double v = sweep::parse_scalar(s);
                ((fields = v), ...);
            }
        };
        set(gamma_all, p.gamma_lambda_r, p.gamma_lambda_l, p.gamma_eta_r,
            p.gamma_eta_l);
        set(glr, p.gamma_lambda_r);
        set(gll, p.gamma_lambda_l);
        set(ger, p.gamma_eta_r);
        set(gel, p.gamma_eta_l);
        set(g, p.g);
        set(theta, p.theta_l, p.theta_d);
        set(theta_l, p.theta_l);
        set(theta_d, p.theta_d);
        set(tau, p.tau_l, p.tau_d);
        set(tau_l, p.tau_l);
        set(tau_d, p.tau_d);
        p.validate();
        if (p.all_rates_zero())
            err << "warning: all decay rates are zero; the device is "
                   "trivially transparent\n";
        return p;
    }
};

struct GridFlags {
    std::string delta, dmin = "-8", dmax = "8";
    int points = 1001;

    void attach(CLI::App* cmd, bool single_default = false) {
        if (single_default)
            cmd->add_option("--delta", delta, "detuning (single point)");
        else
            cmd->add_option("--delta", delta,
                            "single detuning instead of a grid");
        cmd->add_option("--delta-min", dmin, "grid start");
        cmd->add_option("--delta-max", dmax, "grid stop");
        cmd->add_option("--delta-points", points, "grid size")
            ->check(CLI::Range(2, 100000000));
    }

    bool single() const { return !delta.empty(); }
    double single_value() const { return sweep::parse_scalar(delta); }
    std::vector<double> grid() const {
        const double lo = sweep::parse_scalar(dmin);
        const double hi = sweep::parse_scalar(dmax);
        if (!(hi > lo))
            throw std::invalid_argument("delta grid: need max > min");
        std::vector<double> xs(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i)
            xs[std::size_t(i)] =
                lo + (hi - lo) * double(i) / double(points - 1);
        return xs;
    }
};

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt(const cplx& z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%+.10g%+.10gi)", z.real(), z.imag());
    return buf;
}

inline double coefficient_value(const SystemParams& p, double delta,
                                const std::string& name) {
    const bool tilde = name.size() > 1 && name[1] == 't';
    const auto c = coefficients(tilde ? amplitudes_port2(p, delta)
                                      : amplitudes_port1(p, delta));
    const std::string base = tilde ? name.substr(0, 1) + name.substr(2)
                                   : name;
    if (base == "R_N") return c.r_near;
    if (base == "T_N") return c.t_far;
    if (base == "R_M") return c.r_same;
    if (base == "T_M") return c.t_same;
    throw std::invalid_argument("unknown coefficient '" + name + "'");
}

struct OutFlags {
    std::string path;
    std::string format = "csv";

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", path, "output file (default: stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }

    template <typename Fn>
    void write(std::ostream& fallback, Fn&& fn) const {
        if (path.empty()) {
            fn(fallback);
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot open output file '" + path +
                                        "'");
        fn(file);
    }
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
    CLI::App app{
        "single-photon scattering in a chiral giant-molecule double-waveguide "
        "system"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- spectrum ----------------------------------------------------------
    auto* spectrum =
        app.add_subcommand("spectrum", "scattering coefficients vs detuning");
    auto spectrum_params = std::make_shared<detail::ParamFlags>();
    auto spectrum_grid = std::make_shared<detail::GridFlags>();
    auto spectrum_out = std::make_shared<detail::OutFlags>();
    spectrum_params->attach(spectrum);
    spectrum_grid->attach(spectrum);
    spectrum_out->attach(spectrum);
    spectrum->callback([&, spectrum_params, spectrum_grid, spectrum_out] {
        const SystemParams p = spectrum_params->build(err);
        std::vector<sweep::SpectrumRecord> records;
        if (spectrum_grid->single()) {
            records.push_back(
                sweep::evaluate_point(p, spectrum_grid->single_value()));
        } else {
            for (double d : spectrum_grid->grid())
                records.push_back(sweep::evaluate_point(p, d));
        }
        const auto format = spectrum_out->format == "json"
                                ? sweep::Format::json
                                : sweep::Format::csv;
        spectrum_out->write(
            out, [&](std::ostream& os) { sweep::emit(records, format, os); });
    });

    // ---- smatrix -----------------------------------------------------------
    auto* smatrix =
        app.add_subcommand("smatrix", "4x4 scattering matrix at one detuning");
    auto smatrix_params = std::make_shared<detail::ParamFlags>();
    auto smatrix_delta = std::make_shared<std::string>("0");
    auto smatrix_json = std::make_shared<bool>(false);
    auto smatrix_dump = std::make_shared<bool>(false);
    smatrix_params->attach(smatrix);
    smatrix->add_option("--delta", *smatrix_delta, "detuning");
    smatrix->add_flag("--json", *smatrix_json, "machine-readable output");
    smatrix->add_flag("--dump-oracle-system", *smatrix_dump,
                      "also print the assembled boundary-matching systems");
    smatrix->callback([&, smatrix_params, smatrix_delta, smatrix_json,
                       smatrix_dump] {
        const SystemParams p = smatrix_params->build(err);
        const double delta = sweep::parse_scalar(*smatrix_delta);
        const SMatrix m = build_smatrix(p, delta);
        if (*smatrix_json) {
            nlohmann::ordered_json j;
            j["delta"] = delta;
            auto rows = nlohmann::ordered_json::array();
            for (int i = 0; i < 4; ++i) {
                auto row = nlohmann::ordered_json::array();
                for (int k = 0; k < 4; ++k)
                    row.push_back({m.s[i][k].real(), m.s[i][k].imag()});
                rows.push_back(std::move(row));
            }
            j["s"] = std::move(rows);
            j["column_norms"] = m.column_norms();
            j["unitarity_defect"] = m.unitarity_defect();
            out << j.dump(1) << '\n';
        } else {
            out << "S(delta = " << detail::fmt(delta)
                << "), s[exit][injection]:\n";
            for (int i = 0; i < 4; ++i) {
                out << "  ";
                for (int k = 0; k < 4; ++k)
                    out << detail::fmt(m.s[i][k]) << (k == 3 ? "\n" : "  ");
            }
            const auto norms = m.column_norms();
            out << "column 2-norms:";
            for (double n : norms) out << ' ' << detail::fmt(n);
            out << "\nunitarity defect: " << detail::fmt(m.unitarity_defect())
                << '\n';
        }
        if (*smatrix_dump) {
            out << oracle::format_system(p, delta, 1);
            out << oracle::format_system(p, delta, 2);
        }
    });

    // ---- contrast ----------------------------------------------------------
    auto* contrast = app.add_subcommand(
        "contrast", "chirality I_N and nonreciprocity I_M contrast ratios");
    auto contrast_params = std::make_shared<detail::ParamFlags>();
    auto contrast_grid = std::make_shared<detail::GridFlags>();
    auto contrast_out = std::make_shared<detail::OutFlags>();
    contrast_params->attach(contrast);
    contrast_grid->attach(contrast);
    contrast_out->attach(contrast);
    contrast->callback([&, contrast_params, contrast_grid, contrast_out] {
        const SystemParams p = contrast_params->build(err);
        const auto fmt_opt = [](const std::optional<double>& v) {
            return v ? detail::fmt(*v) : std::string("undefined");
        };
        if (contrast_grid->single()) {
            const double d = contrast_grid->single_value();
            const auto cr = analysis::contrast_ratios(p, d);
            try {
                out << "I_N (closed form) = "
                    << detail::fmt(analysis::contrast_in_closed(p)) << '\n';
            } catch (const DomainError&) {
                out << "I_N (closed form) = undefined (no cross-waveguide "
                       "channel)\n";
            }
            out << "I_N = " << fmt_opt(cr.i_n) << '\n';
            out << "I_M = " << fmt_opt(cr.i_m) << '\n';
        } else {
            contrast_out->write(out, [&](std::ostream& os) {
                os << "delta,I_N,I_M\n";
                for (double d : contrast_grid->grid()) {
                    const auto cr = analysis::contrast_ratios(p, d);
                    const double nan =
                        std::numeric_limits<double>::quiet_NaN();
                    os << detail::fmt(d) << ','
                       << detail::fmt(cr.i_n ? *cr.i_n : nan) << ','
                       << detail::fmt(cr.i_m ? *cr.i_m : nan) << '\n';
                }
            });
        }
    });

    // ---- route -------------------------------------------------------------
    auto* route = app.add_subcommand(
        "route", "directional-routing report for ideal chiral couplings");
    auto route_params = std::make_shared<detail::ParamFlags>();
    auto route_grid = std::make_shared<detail::GridFlags>();
    auto route_case = std::make_shared<int>(0);
    auto route_gamma = std::make_shared<std::string>("1");
    auto route_threshold = std::make_shared<double>(0.999);
    auto route_port = std::make_shared<int>(1);
    route_params->attach(route);
    route_grid->attach(route);
    route->add_option("--case", *route_case,
                      "ideal coupling case 1..4 (overrides the rate flags)")
        ->check(CLI::Range(1, 4));
    route->add_option("--gamma", *route_gamma,
                      "rate scale used with --case");
    route->add_option("--threshold", *route_threshold,
                      "probability counted as routed");
    route->add_option("--port", *route_port, "injection port")
        ->check(CLI::Range(1, 2));
    route->callback([&, route_params, route_grid, route_case, route_gamma,
                     route_threshold, route_port] {
        SystemParams p = route_params->build(err);
        if (*route_case != 0) {
            const double gamma = sweep::parse_scalar(*route_gamma);
            const SystemParams rates =
                analysis::ideal_case_params(*route_case, gamma);
            p.gamma_lambda_r = rates.gamma_lambda_r;
            p.gamma_lambda_l = rates.gamma_lambda_l;
            p.gamma_eta_r = rates.gamma_eta_r;
            p.gamma_eta_l = rates.gamma_eta_l;
        }
        const auto grid = route_grid->grid();
        const auto report = analysis::routing_targets(
            p, grid, *route_threshold, *route_port);
        if (report.routing_case.ideal())
            out << "routing case: table row " << report.routing_case.table_row
                << " (gamma = " << detail::fmt(report.routing_case.gamma)
                << ")\n";
        else
            out << "routing case: generic\n";
        const auto pattern = [](const std::array<analysis::RoutingCase::Entry,
                                                 4>& pat) {
            std::string s;
            const char* names[] = {"0", "1", "C1", "C2"};
            for (int i = 0; i < 4; ++i) {
                s += names[int(pat[std::size_t(i)])];
                if (i != 3) s += ' ';
            }
            return s;
        };
        if (report.routing_case.ideal()) {
            out << "expected port-1 exits (R_N T_N R_M T_M): "
                << pattern(report.routing_case.port1_pattern) << '\n';
            out << "expected port-2 exits (Rt_N Tt_N Rt_M Tt_M): "
                << pattern(report.routing_case.port2_pattern) << '\n';
            double worst = 0.0;
            for (double d : grid) {
                const double c1 = analysis::table_c1(
                    report.routing_case.gamma, p.g, p.leg_l(), p.leg_d(), d);
                const double c2 = analysis::table_c2(
                    report.routing_case.gamma, p.g, p.leg_l(), p.leg_d(), d);
                worst = std::max(worst, std::abs(c1 + c2 - 1.0));
            }
            out << "max |C1 + C2 - 1| over the grid: " << detail::fmt(worst)
                << '\n';
        }
        if (!report.predicted_peaks.empty()) {
            out << "predicted cross-waveguide peaks: delta =";
            for (double d : report.predicted_peaks)
                out << ' ' << detail::fmt(d);
            out << '\n';
        }
        out << "grid points with one exit above "
            << detail::fmt(*route_threshold) << ": "
            << report.targets.size() << '\n';
        if (!report.targets.empty()) {
            int port_hist[5] = {0, 0, 0, 0, 0};
            for (const auto& t : report.targets)
                ++port_hist[t.exit_port];
            out << "routed exit ports:";
            for (int port = 1; port <= 4; ++port)
                if (port_hist[port] > 0)
                    out << " port " << port << " (" << port_hist[port]
                        << " points)";
            out << '\n';
        }
    });

    // ---- features ----------------------------------------------------------
    auto* features = app.add_subcommand(
        "features", "peaks, dips and symmetry of one coefficient spectrum");
    auto features_params = std::make_shared<detail::ParamFlags>();
    auto features_grid = std::make_shared<detail::GridFlags>();
    auto features_coeff = std::make_shared<std::string>("T_N");
    auto features_prom = std::make_shared<double>(1e-6);
    features_params->attach(features);
    features_grid->attach(features);
    features->add_option("--coefficient", *features_coeff,
                         "one of R_N T_N R_M T_M Rt_N Tt_N Rt_M Tt_M")
        ->check(CLI::IsMember({"R_N", "T_N", "R_M", "T_M", "Rt_N", "Tt_N",
                               "Rt_M", "Tt_M"}));
    features->add_option("--prominence", *features_prom,
                         "prominence floor for peak counting");
    features->callback([&, features_params, features_grid, features_coeff,
                        features_prom] {
        const SystemParams p = features_params->build(err);
        const auto f = [&](double d) {
            return detail::coefficient_value(p, d, *features_coeff);
        };
        const auto xs = features_grid->grid();
        std::vector<double> vs(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = f(xs[i]);
        analysis::FeatureOptions fopt;
        fopt.prominence_floor = *features_prom;
        const auto result = analysis::find_features(xs, vs, f, fopt);
        out << *features_coeff << ": " << result.peaks.size() << " peak(s), "
            << result.dips.size() << " dip(s)\n";
        for (const auto& pk : result.peaks)
            out << "  peak  delta = " << detail::fmt(pk.delta)
                << "  value = " << detail::fmt(pk.value) << '\n';
        for (const auto& dp : result.dips)
            out << "  dip   delta = " << detail::fmt(dp.delta)
                << "  value = " << detail::fmt(dp.value) << '\n';
        if (result.splitting_distance)
            out << "splitting distance: "
                << detail::fmt(*result.splitting_distance) << '\n';
        if (result.symmetry_center)
            out << "symmetry center: " << detail::fmt(*result.symmetry_center)
                << '\n';
    });

    // ---- verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand(
        "verify", "run the randomized and deterministic invariant suites");
    auto verify_opts = std::make_shared<verify::Options>();
    verify_cmd->add_option("--draws", verify_opts->draws,
                           "random draws per randomized suite")
        ->check(CLI::Range(1, 100000000));
    verify_cmd->add_option("--seed", verify_opts->seed, "sampler seed");
    verify_cmd->callback([&, verify_opts] {
        bool all_passed = true;
        for (const auto& suite : verify::run_all(*verify_opts)) {
            out << suite.name << ": " << (suite.passed ? "PASS" : "FAIL")
                << " (worst " << detail::fmt(suite.worst) << ", tolerance "
                << detail::fmt(suite.tolerance) << ", " << suite.count
                << " checks)";
            if (!suite.detail.empty()) out << " [" << suite.detail << "]";
            out << '\n';
            all_passed = all_passed && suite.passed;
        }
        if (!all_passed) exit_code = 1;
    });

    // ---- sweep -------------------------------------------------------------
    auto* sweep_cmd =
        app.add_subcommand("sweep", "run a config-driven parameter sweep");
    auto sweep_config = std::make_shared<std::string>();
    auto sweep_out = std::make_shared<detail::OutFlags>();
    sweep_cmd
        ->add_option("--config", *sweep_config, "sweep config file")
        ->required();
    sweep_out->attach(sweep_cmd);
    sweep_cmd->callback([&, sweep_config, sweep_out] {
        std::ifstream file(*sweep_config);
        if (!file)
            throw std::invalid_argument("cannot open config file '" +
                                        *sweep_config + "'");
        std::ostringstream text;
        text << file.rdbuf();
        const auto spec = sweep::parse_config(text.str());
        if (spec.base.all_rates_zero())
            err << "warning: all decay rates are zero; the device is "
                   "trivially transparent\n";
        const auto records = sweep::run_sweep(spec);
        const auto format = sweep_out->format == "json" ? sweep::Format::json
                                                        : sweep::Format::csv;
        sweep_out->write(
            out, [&](std::ostream& os) { sweep::emit(records, format, os); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const sweep::ParseError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const sweep::RangeError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("gmol");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(int(argv.size()), argv.data(), out, err);
}

}  // namespace gmol::cli
