// core.hpp — parameters, phase model and self-energies of the two-waveguide
// giant-molecule scatterer.
//
// Unit convention: hbar = 1, group velocity = 1, and every rate is expressed
// in a single reference rate.  Detunings are in units of that rate, times in
// its inverse, phases in radians.  Phases are stored unreduced; mod-2pi
// reduction happens only where decoupling is detected or values are printed.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gmol {

using cplx = std::complex<double>;

// Denominator of the scattering amplitudes vanished away from a decoupling
// point; the requested evaluation has no finite analytic value.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of the requested quantity.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Phase accumulated by a photon travelling between the two coupling points of
// one leg: phi(delta) = tau * delta + theta.  tau = 0 is the Markovian limit.
struct LegPhase {
    double tau = 0.0;    // propagation time between the coupling points
    double theta = 0.0;  // constant phase part (rad)
};

// Exact, unreduced leg phase at a given detuning.
inline double phase_shift(const LegPhase& leg, double delta) {
    return leg.tau * delta + leg.theta;
}

// Full physical parameter set.  Atom a couples to waveguide M (ports 1/2)
// through the lambda rates, atom b to waveguide N (ports 3/4) through the
// eta rates.  Both atoms share the same transition frequency.
struct SystemParams {
    double gamma_lambda_r = 1.0;  // atom a -> right-movers of waveguide M
    double gamma_lambda_l = 1.0;  // atom a -> left-movers of waveguide M
    double gamma_eta_r = 1.0;     // atom b -> right-movers of waveguide N
    double gamma_eta_l = 1.0;     // atom b -> left-movers of waveguide N
    double g = 0.0;               // inter-atom coupling strength
    double theta_l = 0.0;         // constant phase, waveguide-M leg (rad)
    double theta_d = 0.0;         // constant phase, waveguide-N leg (rad)
    double tau_l = 0.0;           // propagation time, waveguide-M leg
    double tau_d = 0.0;           // propagation time, waveguide-N leg

    LegPhase leg_l() const { return {tau_l, theta_l}; }
    LegPhase leg_d() const { return {tau_d, theta_d}; }

    // Throws std::invalid_argument on a negative rate, coupling or time.
    void validate() const {
        auto check = [](double v, const char* name) {
            if (v < 0.0 || !std::isfinite(v))
                throw std::invalid_argument(std::string(name) +
                                            " must be finite and >= 0, got " +
                                            std::to_string(v));
        };
        check(gamma_lambda_r, "gamma_lambda_r");
        check(gamma_lambda_l, "gamma_lambda_l");
        check(gamma_eta_r, "gamma_eta_r");
        check(gamma_eta_l, "gamma_eta_l");
        check(g, "g");
        check(tau_l, "tau_l");
        check(tau_d, "tau_d");
    }

    // All four decay rates vanish: the device is trivially transparent.
    // Permitted, but callers may want to warn.
    bool all_rates_zero() const {
        return gamma_lambda_r == 0.0 && gamma_lambda_l == 0.0 &&
               gamma_eta_r == 0.0 && gamma_eta_l == 0.0;
    }

    // Waveguide swap lambda <-> eta, l-leg <-> d-leg.  Injection through
    // ports 3/4 of the original system equals injection through ports 1/2 of
    // the swapped one (the atoms share a transition frequency).
    SystemParams swapped() const {
        SystemParams q = *this;
        std::swap(q.gamma_lambda_r, q.gamma_eta_r);
        std::swap(q.gamma_lambda_l, q.gamma_eta_l);
        std::swap(q.theta_l, q.theta_d);
        std::swap(q.tau_l, q.tau_d);
        return q;
    }

    static SystemParams symmetric(double gamma, double g, LegPhase leg_l,
                                  LegPhase leg_d) {
        SystemParams p;
        p.gamma_lambda_r = p.gamma_lambda_l = gamma;
        p.gamma_eta_r = p.gamma_eta_l = gamma;
        p.g = g;
        p.theta_l = leg_l.theta;
        p.tau_l = leg_l.tau;
        p.theta_d = leg_d.theta;
        p.tau_d = leg_d.tau;
        return p;
    }
};

// Self-energies of the two legs and the shared denominator
//   F_lambda = i (1 + e^{i phi_l}) (G_lL + G_lR)
//   F_eta    = i (1 + e^{i phi_d}) (G_eL + G_eR)
//   D        = g^2 - (delta + F_eta)(delta + F_lambda)
// F vanishes exactly at a decoupling point phi = pi (mod 2pi).
struct SelfEnergies {
    cplx f_lambda;
    cplx f_eta;
    cplx denominator;
};

inline SelfEnergies self_energies(const SystemParams& p, double delta) {
    const double phi_l = phase_shift(p.leg_l(), delta);
    const double phi_d = phase_shift(p.leg_d(), delta);
    const cplx al = 1.0 + std::polar(1.0, phi_l);
    const cplx ad = 1.0 + std::polar(1.0, phi_d);
    SelfEnergies se;
    se.f_lambda = cplx(0.0, 1.0) * al * (p.gamma_lambda_l + p.gamma_lambda_r);
    se.f_eta = cplx(0.0, 1.0) * ad * (p.gamma_eta_l + p.gamma_eta_r);
    se.denominator =
        p.g * p.g - (delta + se.f_eta) * (delta + se.f_lambda);
    return se;
}

}  // namespace gmol
