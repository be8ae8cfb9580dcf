#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "gmol/analysis.hpp"
#include "gmol/verify.hpp"

using namespace gmol;
using namespace gmol::analysis;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("closed-form chirality contrast") {
    SECTION("equal rates give zero") {
        CHECK(contrast_in_closed(SystemParams::symmetric(
                  1.0, 3.0, {0.0, 0.5 * pi}, {0.0, 0.5 * pi})) == 0.0);
    }
    SECTION("vanishing left couplings give one") {
        CHECK(contrast_in_closed(ideal_case_params(1, 1.0)) == 1.0);
    }
    SECTION("equal products with unequal individual rates give zero") {
        // left product 0.5 * 12 = right product 2 * 3
        const SystemParams p{2.0, 0.5, 3.0, 12.0, 1.0, 0.0, 0.0, 0.0, 0.0};
        CHECK(contrast_in_closed(p) == Approx(0.0).margin(1e-15));
    }
    SECTION("no channel in either direction is a domain error") {
        // lambda_l = eta_r = 0: both rate products vanish
        const SystemParams p{1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(contrast_in_closed(p), DomainError);
    }
}

TEST_CASE("closed-form contrast ignores every nuisance parameter") {
    verify::ParamSampler sampler(3);
    for (int k = 0; k < 200; ++k) {
        SystemParams p = sampler.params(false);
        const double base = contrast_in_closed(p);
        p.g = sampler.rate();
        p.theta_l = sampler.phase();
        p.theta_d = sampler.phase();
        p.tau_l = sampler.retardation();
        p.tau_d = sampler.retardation();
        CHECK(contrast_in_closed(p) == base);
    }
}

TEST_CASE("coefficient-route contrast matches the closed form") {
    verify::ParamSampler sampler(17);
    for (int k = 0; k < 300; ++k) {
        const SystemParams p = sampler.params(k % 2 == 0);
        const double delta = sampler.detuning();
        // contrast_ratios carries the cross-check internally and throws on
        // disagreement beyond 1e-12
        const auto cr = contrast_ratios(p, delta);
        if (cr.i_n) {
            CHECK(*cr.i_n == Approx(contrast_in_closed(p)).margin(1e-12));
            CHECK(std::abs(*cr.i_n) <= 1.0 + 1e-12);
        }
        if (cr.i_m) CHECK(std::abs(*cr.i_m) <= 1.0 + 1e-12);
    }
}

TEST_CASE("contrast ratios in the symmetric case vanish") {
    const SystemParams p =
        SystemParams::symmetric(1.0, 3.0, {0.0, 0.5 * pi}, {0.0, 0.5 * pi});
    const auto cr = contrast_ratios(p, 0.9);
    REQUIRE(cr.i_n.has_value());
    REQUIRE(cr.i_m.has_value());
    CHECK(*cr.i_n == Approx(0.0).margin(1e-13));
    CHECK(*cr.i_m == Approx(0.0).margin(1e-13));
}

TEST_CASE("Markovian transmission is reciprocal at theta = odd pi") {
    // decay ratio 0.5, theta = 81 pi: the pass-through limit applies, so
    // T_M = Tt_M = 1 exactly and I_M = 0
    SystemParams p{1.0, 0.5, 1.0, 0.5, 2.0, 81.0 * pi, 81.0 * pi, 0.0, 0.0};
    for (double delta : {-3.0, 0.4, 2.0}) {
        const auto cr = contrast_ratios(p, delta);
        REQUIRE(cr.i_m.has_value());
        CHECK(*cr.i_m == 0.0);
        CHECK_FALSE(cr.i_n.has_value());  // no cross channel at decoupling
    }
}

TEST_CASE("retardation enhances the nonreciprocity at theta = odd pi") {
    // max |I_M| over a grid grows with the propagation time
    double prev = -1.0;
    for (double tau : {0.0, 1.0, 2.0}) {
        SystemParams p{1.0, 0.5, 1.0, 0.5, 2.0, 81.0 * pi, 81.0 * pi, tau, tau};
        double best = 0.0;
        for (int i = 0; i <= 4000; ++i) {
            const double delta = -20.0 + 40.0 * double(i) / 4000.0;
            const auto cr = contrast_ratios(p, delta);
            if (cr.i_m) best = std::max(best, std::abs(*cr.i_m));
        }
        CHECK(best > prev);
        prev = best;
    }
    CHECK(prev > 0.5);
}

TEST_CASE("undefined contrast is flagged, not zeroed") {
    SystemParams p = SystemParams::symmetric(1.0, 0.0, {0.0, 0.5 * pi},
                                             {0.0, 0.5 * pi});
    const auto cr = contrast_ratios(p, 0.7);  // g = 0: no cross channel
    CHECK_FALSE(cr.i_n.has_value());
    CHECK(cr.i_m.has_value());
}

TEST_CASE("routing classification recognizes the four ideal rows") {
    for (int row = 1; row <= 4; ++row) {
        SystemParams p = ideal_case_params(row, 2.5);
        p.g = 3.0;
        const auto rc = classify_routing(p);
        CHECK(rc.table_row == row);
        CHECK(rc.gamma == Approx(2.5));
        CHECK(rc.ideal());
    }
    SECTION("specific expected patterns") {
        using E = RoutingCase::Entry;
        const auto rc1 = classify_routing(ideal_case_params(1, 1.0));
        CHECK(rc1.port1_pattern ==
              std::array<E, 4>{E::zero, E::c1, E::zero, E::c2});
        CHECK(rc1.port2_pattern ==
              std::array<E, 4>{E::zero, E::zero, E::zero, E::unit});
        const auto rc4 = classify_routing(ideal_case_params(4, 1.0));
        CHECK(rc4.port1_pattern ==
              std::array<E, 4>{E::c1, E::zero, E::zero, E::c2});
    }
    SECTION("generic parameters classify as generic") {
        CHECK_FALSE(classify_routing(SystemParams{}).ideal());
        SystemParams p = ideal_case_params(1, 1.0);
        p.gamma_lambda_l = 1e-3;  // spoils the zero pattern
        CHECK_FALSE(classify_routing(p).ideal());
        SystemParams q = ideal_case_params(1, 1.0);
        q.gamma_eta_r = 1.001;  // rates no longer matched
        CHECK_FALSE(classify_routing(q).ideal());
        SystemParams r = ideal_case_params(1, 1.0);
        r.gamma_eta_r = 1.0 + 1e-12;  // inside the matching tolerance
        CHECK(classify_routing(r).table_row == 1);
    }
}

TEST_CASE("tabulated C values sum to one and match the coefficients") {
    const LegPhase leg_l{0.0, 0.5 * pi}, leg_d{0.0, 0.5 * pi};
    SystemParams p = ideal_case_params(1, 1.0);
    p.g = 3.0;
    p.theta_l = p.theta_d = 0.5 * pi;
    for (int i = 0; i <= 500; ++i) {
        const double delta = -8.0 + 16.0 * double(i) / 500.0;
        const double c1 = table_c1(1.0, 3.0, leg_l, leg_d, delta);
        const double c2 = table_c2(1.0, 3.0, leg_l, leg_d, delta);
        CHECK(std::abs(c1 + c2 - 1.0) < 1e-10);
        const auto c = coefficients(amplitudes_port1(p, delta));
        CHECK(std::abs(c.t_far - c1) < 1e-12);
        CHECK(std::abs(c.t_same - c2) < 1e-12);
    }
}

TEST_CASE("routing targets for the three ideal-router configurations") {
    std::vector<double> grid(3201);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = -8.0 + 16.0 * double(i) / double(grid.size() - 1);
    const double root8 = std::sqrt(8.0);

    SECTION("left-coupled molecule routes everything to port 2") {
        SystemParams p = ideal_case_params(2, 1.0);
        p.g = 3.0;
        p.theta_l = p.theta_d = 0.5 * pi;
        const auto report = routing_targets(p, grid);
        CHECK(report.routing_case.table_row == 2);
        CHECK(report.targets.size() == grid.size());
        for (const auto& t : report.targets) CHECK(t.exit_port == 2);
        CHECK(report.predicted_peaks.empty());
    }
    SECTION("right-coupled molecule routes to port 4 at the predicted peaks") {
        SystemParams p = ideal_case_params(1, 1.0);
        p.g = 3.0;
        p.theta_l = p.theta_d = 0.5 * pi;
        const auto report = routing_targets(p, grid);
        CHECK(report.routing_case.table_row == 1);
        REQUIRE(report.predicted_peaks.size() == 2);
        CHECK(report.predicted_peaks[0] == Approx(1.0 - root8).margin(1e-12));
        CHECK(report.predicted_peaks[1] == Approx(1.0 + root8).margin(1e-12));
        const auto probe_low = routing_probe(p, 1.0 - root8);
        const auto probe_high = routing_probe(p, 1.0 + root8);
        CHECK(probe_low.exit_probability[3] > 0.999);
        CHECK(probe_high.exit_probability[3] > 0.999);
        CHECK(probe_low.dominant_port == 4);
        REQUIRE(probe_low.c1.has_value());
        CHECK(*probe_low.c1 + *probe_low.c2 == Approx(1.0).margin(1e-12));
    }
    SECTION("cross-coupled molecule routes to port 3 at the same peaks") {
        SystemParams p = ideal_case_params(4, 1.0);
        p.g = 3.0;
        p.theta_l = p.theta_d = 0.5 * pi;
        const auto report = routing_targets(p, grid);
        CHECK(report.routing_case.table_row == 4);
        const auto probe = routing_probe(p, 1.0 + root8);
        CHECK(probe.exit_probability[2] > 0.999);
        CHECK(probe.dominant_port == 3);
    }
}

TEST_CASE("feature finder on a synthetic Lorentzian") {
    const auto lorentz = [](double x) {
        return 1.0 / (1.0 + (x - 0.7) * (x - 0.7) / 0.04);
    };
    const auto [xs, vs] = sample_grid(lorentz, -4.0, 4.0, 801);
    const auto f = find_features(xs, vs, lorentz);
    REQUIRE(f.peaks.size() == 1);
    CHECK(f.peaks[0].delta == Approx(0.7).margin(1e-6));
    CHECK(f.peaks[0].value == Approx(1.0).margin(1e-9));
    CHECK(f.dips.empty());
    CHECK_FALSE(f.splitting_distance.has_value());
    REQUIRE(f.symmetry_center.has_value());
    CHECK(*f.symmetry_center == Approx(0.7).margin(1e-6));
}

TEST_CASE("feature finder input validation") {
    const std::vector<double> x{0.0, 1.0, 0.5};
    const std::vector<double> v{0.0, 1.0, 0.0};
    CHECK_THROWS_AS(find_features(x, v), std::invalid_argument);
    const std::vector<double> two{0.0, 1.0};
    CHECK_THROWS_AS(find_features(two, two), std::invalid_argument);
}

TEST_CASE("split transmission peaks near theta = pi") {
    const double gamma = 1.0, g = 3.0, dl = 0.05;
    const LegPhase leg{0.0, pi + dl};
    const auto tn = [&](double d) {
        return coefficients(amplitudes_symmetric(gamma, g, leg, leg, d)).t_far;
    };
    const auto [xs, vs] = sample_grid(tn, -4.0, 4.0, 20001);
    FeatureOptions opt;
    opt.position_tol = 1e-9;
    const auto f = find_features(xs, vs, tn, opt);
    REQUIRE(f.peaks.size() == 2);
    REQUIRE(f.splitting_distance.has_value());
    CHECK(*f.splitting_distance ==
          Approx(rabi_peak_distance(gamma, g, dl)).margin(1e-3));
}

TEST_CASE("transmission peak census versus the inner coupling") {
    const LegPhase leg{0.0, 0.5 * pi};
    const auto census = [&](double g) {
        const auto tn = [&](double d) {
            return coefficients(amplitudes_symmetric(1.0, g, leg, leg, d))
                .t_far;
        };
        const auto [xs, vs] = sample_grid(tn, -8.0, 8.0, 8001);
        return find_features(xs, vs, tn);
    };
    for (double g : {0.5, 1.0, 1.5}) {
        const auto f = census(g);
        REQUIRE(f.peaks.size() == 1);
        CHECK(f.peaks[0].delta == Approx(2.0).margin(1e-3));
    }
    for (double g : {3.0, 5.0}) {
        const auto f = census(g);
        REQUIRE(f.peaks.size() == 2);
        const double off = std::sqrt(g * g - 4.0);
        CHECK(f.peaks[0].delta == Approx(2.0 - off).margin(1e-3));
        CHECK(f.peaks[1].delta == Approx(2.0 + off).margin(1e-3));
    }
}

TEST_CASE("retarded spectra carry dips at the predicted detunings") {
    const double tau = 1.0, theta = 80.0 * pi;
    const LegPhase leg{tau, theta};
    const auto tn = [&](double d) {
        return coefficients(amplitudes_symmetric(1.0, 2.0, leg, leg, d)).t_far;
    };
    const auto [xs, vs] = sample_grid(tn, -10.0, 10.0, 4001);
    const auto f = find_features(xs, vs, tn);
    REQUIRE(!f.dips.empty());
    // every predicted dip detuning inside the window appears among the dips
    for (int m = 37; m <= 43; ++m) {
        const double predicted = (double(2 * m + 1) - 80.0) * pi / tau;
        if (std::abs(predicted) > 9.5) continue;
        bool found = false;
        for (const auto& dip : f.dips)
            found = found || std::abs(dip.delta - predicted) < 1e-3;
        CHECK(found);
    }
}

TEST_CASE("symmetry validators") {
    SECTION("reflection about delta_1") {
        std::vector<double> offsets;
        for (int i = 1; i <= 400; ++i) offsets.push_back(8.0 * i / 400.0);
        CHECK(reflection_asymmetry_about_center(1.0, 3.0, 0.5 * pi, offsets) <
              1e-10);
        CHECK(reflection_asymmetry_about_center(1.0, 3.0, 0.75 * pi, offsets) <
              1e-10);
    }
    SECTION("exactly one theta-reflection variant holds") {
        std::vector<double> thetas, deltas;
        for (int i = 1; i <= 19; ++i) thetas.push_back(0.1 * i * pi);
        for (int i = 0; i <= 200; ++i) deltas.push_back(-8.0 + 16.0 * i / 200.0);
        const auto chk = theta_reflection_variants(1.0, 3.0, thetas, deltas);
        CHECK(chk.tt_max < 1e-10);
        CHECK(chk.tr_max > 1e-2);
    }
    SECTION("even spectra at theta = n pi with retardation") {
        std::vector<double> deltas;
        for (int i = 0; i <= 400; ++i) deltas.push_back(-10.0 + 20.0 * i / 400.0);
        CHECK(even_spectrum_asymmetry(1.0, 2.0, 80.0 * pi, 1.0, deltas) <
              1e-10);
        // an asymmetric counterexample: theta not a multiple of pi
        CHECK(even_spectrum_asymmetry(1.0, 2.0, 80.5 * pi, 1.0, deltas) >
              1e-3);
    }
    SECTION("equal-coefficient crossing at theta = 0.75 pi") {
        const auto res = equal_coefficient_crossing(1.0, 3.0, 0.75 * pi,
                                                    -8.0, 8.0);
        CHECK(res.residual < 0.01);
    }
    SECTION("bundled report") {
        SymmetryOptions opt;
        opt.grid_points = 201;
        const auto rep = symmetry_validators(1.0, 3.0, opt);
        CHECK(rep.reflection_asymmetry < 1e-10);
        CHECK(rep.tt_holds);
        CHECK_FALSE(rep.tr_holds);
        CHECK(rep.even_asymmetry < 1e-10);
        CHECK(rep.crossing.residual < 0.01);
        CHECK(rep.delta1 == Approx(2.0));
    }
}
