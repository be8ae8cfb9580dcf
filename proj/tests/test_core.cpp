#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "gmol/core.hpp"

using namespace gmol;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("phase_shift evaluates tau*delta + theta exactly") {
    CHECK(phase_shift({0.0, 0.5 * pi}, 7.3) == 0.5 * pi);
    CHECK(phase_shift({1.0, 0.0}, 0.0) == 0.0);
    CHECK(phase_shift({2.0, 81.0 * pi}, 1.5) == Approx(3.0 + 81.0 * pi).epsilon(1e-15));
}

TEST_CASE("phase_shift is linear in the detuning") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const LegPhase leg{std::abs(u(rng)), u(rng)};
        const double a = u(rng), b = u(rng);
        const double lhs = phase_shift(leg, a + b);
        const double rhs = phase_shift(leg, a) + phase_shift(leg, b) - leg.theta;
        CHECK(lhs == Approx(rhs).margin(1e-10));
    }
}

TEST_CASE("self energies at the decoupling phase vanish") {
    SystemParams p = SystemParams::symmetric(1.0, 2.0, {0.0, pi}, {0.0, pi});
    const auto se = self_energies(p, 1.7);
    CHECK(std::abs(se.f_lambda) < 1e-13);
    CHECK(std::abs(se.f_eta) < 1e-13);
    // D reduces to g^2 - delta^2
    CHECK(se.denominator.real() == Approx(4.0 - 1.7 * 1.7).margin(1e-12));
    CHECK(std::abs(se.denominator.imag()) < 1e-12);
}

TEST_CASE("self energies at simple phases") {
    SystemParams p;
    p.gamma_lambda_r = 0.5;
    p.gamma_lambda_l = 0.5;
    p.theta_l = 0.0;
    SECTION("phi = 0 gives F = 2i") {
        const auto se = self_energies(p, 0.0);
        CHECK(se.f_lambda.real() == Approx(0.0).margin(1e-15));
        CHECK(se.f_lambda.imag() == Approx(2.0).margin(1e-15));
    }
    SECTION("phi = pi/2, unit total rate gives F = -1 + i") {
        p.theta_l = 0.5 * pi;
        const auto se = self_energies(p, 0.0);
        CHECK(se.f_lambda.real() == Approx(-1.0).margin(1e-15));
        CHECK(se.f_lambda.imag() == Approx(1.0).margin(1e-15));
    }
}

TEST_CASE("self-energy magnitude is bounded by twice the total rate") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        SystemParams p;
        p.gamma_lambda_r = 100.0 * u(rng);
        p.gamma_lambda_l = 100.0 * u(rng);
        p.gamma_eta_r = 100.0 * u(rng);
        p.gamma_eta_l = 100.0 * u(rng);
        p.theta_l = 8.0 * pi * u(rng) - 4.0 * pi;
        p.theta_d = 8.0 * pi * u(rng) - 4.0 * pi;
        p.tau_l = 5.0 * u(rng);
        p.tau_d = 5.0 * u(rng);
        const double delta = 40.0 * u(rng) - 20.0;
        const auto se = self_energies(p, delta);
        const double bl = 2.0 * (p.gamma_lambda_l + p.gamma_lambda_r);
        const double bd = 2.0 * (p.gamma_eta_l + p.gamma_eta_r);
        CHECK(std::abs(se.f_lambda) <= bl * (1.0 + 1e-12));
        CHECK(std::abs(se.f_eta) <= bd * (1.0 + 1e-12));
    }
}

TEST_CASE("validate rejects negative parameters") {
    SystemParams p;
    p.gamma_eta_l = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = SystemParams{};
    p.tau_l = -2.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = SystemParams{};
    p.g = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("all rates zero is permitted but flagged") {
    SystemParams p;
    p.gamma_lambda_r = p.gamma_lambda_l = 0.0;
    p.gamma_eta_r = p.gamma_eta_l = 0.0;
    CHECK_NOTHROW(p.validate());
    CHECK(p.all_rates_zero());
    CHECK_FALSE(SystemParams{}.all_rates_zero());
}

TEST_CASE("waveguide swap exchanges the leg data and is an involution") {
    SystemParams p{1.0, 0.3, 0.7, 0.2, 2.0, 0.4 * pi, 1.1 * pi, 0.8, 1.3};
    const SystemParams q = p.swapped();
    CHECK(q.gamma_lambda_r == 0.7);
    CHECK(q.gamma_lambda_l == 0.2);
    CHECK(q.gamma_eta_r == 1.0);
    CHECK(q.gamma_eta_l == 0.3);
    CHECK(q.theta_l == 1.1 * pi);
    CHECK(q.theta_d == 0.4 * pi);
    CHECK(q.tau_l == 1.3);
    CHECK(q.tau_d == 0.8);
    CHECK(q.g == p.g);
    const SystemParams r = q.swapped();
    CHECK(r.gamma_lambda_r == p.gamma_lambda_r);
    CHECK(r.theta_l == p.theta_l);
    CHECK(r.tau_d == p.tau_d);
}
