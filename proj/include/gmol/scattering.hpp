// scattering.hpp — closed-form single-photon scattering amplitudes of the
// four-port giant-molecule device, the symmetric-coupling reduction, the
// near-pi splitting approximation, and the 4x4 scattering matrix.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "gmol/core.hpp"

namespace gmol {

// A leg is treated as decoupled when |1 + e^{i phi}| falls below this.
inline constexpr double kDecoupleTol = 1e-9;

// Relative pole guard on |D|; see amplitudes_port1.
inline constexpr double kPoleGuardRel = 1e-12;

// The four exit amplitudes for one injection port.
//   r_near : other waveguide, exit on the injection side
//   t_far  : other waveguide, exit on the far side
//   r_same : reflection back out of the injection port
//   t_same : transmission to the opposite port of the injection waveguide
// For port 1 these are (r_N, t_N, r_M, t_M); for port 2 the tilde set.
struct AmplitudeSet {
    cplx r_near;
    cplx t_far;
    cplx r_same;
    cplx t_same;
    int injection_port = 1;

    // Amplitudes rearranged by exit port, index 0..3 = ports 1..4.
    std::array<cplx, 4> by_exit_port() const {
        switch (injection_port) {
            case 1: return {r_same, t_same, r_near, t_far};
            case 2: return {t_same, r_same, t_far, r_near};
            case 3: return {r_near, t_far, r_same, t_same};
            case 4: return {t_far, r_near, t_same, r_same};
        }
        throw std::invalid_argument("injection_port must be 1..4");
    }
};

// Squared magnitudes of an amplitude set (exit probabilities).
struct Coefficients {
    double r_near = 0.0;
    double t_far = 0.0;
    double r_same = 0.0;
    double t_same = 0.0;

    double sum() const { return r_near + t_far + r_same + t_same; }
};

inline Coefficients coefficients(const AmplitudeSet& a) {
    return {std::norm(a.r_near), std::norm(a.t_far), std::norm(a.r_same),
            std::norm(a.t_same)};
}

namespace detail {

inline bool leg_decoupled(const cplx& one_plus_e) {
    return std::abs(one_plus_e) < kDecoupleTol;
}

[[noreturn]] inline void throw_pole(const SystemParams& p, double delta,
                                    const cplx& denom) {
    std::ostringstream os;
    os << "scattering denominator |D| = " << std::abs(denom)
       << " below pole guard away from a decoupling point (delta = " << delta
       << ", g = " << p.g << ")";
    throw PoleError(os.str());
}

// Exact pass-through: both legs decoupled, the molecule is invisible and the
// photon keeps its direction of travel.
inline AmplitudeSet pass_through(int port) {
    AmplitudeSet a;
    a.t_same = 1.0;
    a.injection_port = port;
    return a;
}

struct Prologue {
    cplx el;   // e^{i phi_l}
    cplx ed;   // e^{i phi_d}
    cplx al;   // 1 + e^{i phi_l}
    cplx ad;   // 1 + e^{i phi_d}
    cplx qe;   // delta + F_eta
    cplx ql;   // delta + F_lambda
    cplx den;  // g^2 - qe * ql
};

// Shared front end of the port-1/port-2 evaluations.  Returns true when both
// legs are decoupled (caller must return the pass-through limit); throws
// PoleError when |D| vanishes anywhere else.
inline bool prologue(const SystemParams& p, double delta, Prologue& pr) {
    const double phi_l = phase_shift(p.leg_l(), delta);
    const double phi_d = phase_shift(p.leg_d(), delta);
    pr.el = std::polar(1.0, phi_l);
    pr.ed = std::polar(1.0, phi_d);
    pr.al = 1.0 + pr.el;
    pr.ad = 1.0 + pr.ed;
    if (leg_decoupled(pr.al) && leg_decoupled(pr.ad)) return true;
    const cplx i(0.0, 1.0);
    pr.ql = delta + i * pr.al * (p.gamma_lambda_l + p.gamma_lambda_r);
    pr.qe = delta + i * pr.ad * (p.gamma_eta_l + p.gamma_eta_r);
    pr.den = p.g * p.g - pr.qe * pr.ql;
    const double guard =
        kPoleGuardRel *
        std::max({p.g * p.g, std::abs(pr.qe) * std::abs(pr.ql), 1.0});
    if (std::abs(pr.den) < guard) throw_pole(p, delta, pr.den);
    return false;
}

}  // namespace detail

// Exit amplitudes for injection through port 1 (left end of waveguide M).
// When both legs are decoupled the exact pass-through limit (t_same = 1) is
// returned; a vanishing denominator anywhere else raises PoleError.
inline AmplitudeSet amplitudes_port1(const SystemParams& p, double delta) {
    detail::Prologue pr;
    if (detail::prologue(p, delta, pr)) return detail::pass_through(1);
    const cplx i(0.0, 1.0);
    AmplitudeSet a;
    a.injection_port = 1;
    a.r_near = i * pr.ad * pr.al * p.g *
               std::sqrt(p.gamma_eta_l * p.gamma_lambda_r) / pr.den;
    a.t_far = i * (1.0 + std::conj(pr.ed)) * pr.al * p.g *
              std::sqrt(p.gamma_eta_r * p.gamma_lambda_r) / pr.den;
    a.r_same = i * pr.al * pr.al * pr.qe *
               std::sqrt(p.gamma_lambda_l * p.gamma_lambda_r) / pr.den;
    a.t_same =
        (p.g * p.g -
         (i * pr.al *
              (p.gamma_lambda_l - std::conj(pr.el) * p.gamma_lambda_r) +
          delta) *
             pr.qe) /
        pr.den;
    return a;
}

// Exit amplitudes for injection through port 2 (right end of waveguide M);
// the tilde amplitude set.
inline AmplitudeSet amplitudes_port2(const SystemParams& p, double delta) {
    detail::Prologue pr;
    if (detail::prologue(p, delta, pr)) return detail::pass_through(2);
    const cplx i(0.0, 1.0);
    const cplx ali = 1.0 + std::conj(pr.el);  // 1 + e^{-i phi_l}
    const cplx adi = 1.0 + std::conj(pr.ed);  // 1 + e^{-i phi_d}
    AmplitudeSet a;
    a.injection_port = 2;
    a.r_near = i * adi * ali * p.g *
               std::sqrt(p.gamma_eta_r * p.gamma_lambda_l) / pr.den;
    a.t_far = i * pr.ad * ali * p.g *
              std::sqrt(p.gamma_eta_l * p.gamma_lambda_l) / pr.den;
    a.r_same = i * ali * ali * pr.qe *
               std::sqrt(p.gamma_lambda_l * p.gamma_lambda_r) / pr.den;
    a.t_same =
        (p.g * p.g -
         (i * pr.al *
              (p.gamma_lambda_r - std::conj(pr.el) * p.gamma_lambda_l) +
          delta) *
             pr.qe) /
        pr.den;
    return a;
}

// Exit amplitudes for injection through port 3 or 4 (ends of waveguide N),
// realised through the waveguide swap.
inline AmplitudeSet amplitudes_port34(const SystemParams& p, double delta,
                                      int port) {
    if (port != 3 && port != 4)
        throw std::invalid_argument("amplitudes_port34: port must be 3 or 4");
    const SystemParams q = p.swapped();
    AmplitudeSet a =
        port == 3 ? amplitudes_port1(q, delta) : amplitudes_port2(q, delta);
    a.injection_port = port;
    return a;
}

inline AmplitudeSet amplitudes_port(const SystemParams& p, double delta,
                                    int port) {
    switch (port) {
        case 1: return amplitudes_port1(p, delta);
        case 2: return amplitudes_port2(p, delta);
        case 3:
        case 4: return amplitudes_port34(p, delta, port);
    }
    throw std::invalid_argument("injection port must be 1..4");
}

// Port-1 amplitudes in the symmetric-coupling case (all four rates equal),
// written out in the reduced form.  Agrees with amplitudes_port1 under equal
// rates; kept as a separate evaluation path for cross-validation.
inline AmplitudeSet amplitudes_symmetric(double gamma, double g,
                                         LegPhase leg_l, LegPhase leg_d,
                                         double delta) {
    const double phi_l = phase_shift(leg_l, delta);
    const double phi_d = phase_shift(leg_d, delta);
    const cplx el = std::polar(1.0, phi_l);
    const cplx ed = std::polar(1.0, phi_d);
    const cplx al = 1.0 + el;
    const cplx ad = 1.0 + ed;
    if (detail::leg_decoupled(al) && detail::leg_decoupled(ad))
        return detail::pass_through(1);
    const cplx i(0.0, 1.0);
    const cplx ql = delta + i * al * (gamma + gamma);
    const cplx qd = delta + i * ad * (gamma + gamma);
    const cplx den = g * g - qd * ql;
    const double guard =
        kPoleGuardRel * std::max({g * g, std::abs(qd) * std::abs(ql), 1.0});
    if (std::abs(den) < guard) {
        SystemParams p = SystemParams::symmetric(gamma, g, leg_l, leg_d);
        detail::throw_pole(p, delta, den);
    }
    AmplitudeSet a;
    a.injection_port = 1;
    a.r_near = i * ad * al * g * gamma / den;
    a.t_far = i * (1.0 + std::conj(ed)) * al * g * gamma / den;
    a.r_same = i * al * al * qd * gamma / den;
    a.t_same = (g * g - (delta - 2.0 * gamma * std::sin(phi_l)) * qd) / den;
    return a;
}

// Near-decoupling approximation of the cross transmission amplitude t_N for
// symmetric coupling with theta = pi + small_delta:
//   t_N ~ i g Gamma d^2 / (g^2 - (Delta + 2 Gamma d + i Gamma d^2)^2).
// Valid for |small_delta| << 1 (not enforced).
inline cplx rabi_approx_tN(double gamma, double g, double delta,
                           double small_delta) {
    const double d2 = small_delta * small_delta;
    const cplx q = delta + 2.0 * gamma * small_delta + cplx(0.0, gamma * d2);
    const cplx den = g * g - q * q;
    if (den == cplx(0.0, 0.0))
        throw PoleError("rabi_approx_tN: denominator vanished exactly");
    return cplx(0.0, g * gamma * d2) / den;
}

// Distance between the two split peaks of |t_N|^2 near theta = pi:
// 2 sqrt(g^2 - Gamma^2 d^4), approaching 2g as d -> 0.
inline double rabi_peak_distance(double gamma, double g, double small_delta) {
    const double d2 = small_delta * small_delta;
    const double radicand = g * g - gamma * gamma * d2 * d2;
    if (radicand < 0.0)
        throw DomainError("rabi_peak_distance: g^2 < (gamma * delta^2)^2");
    return 2.0 * std::sqrt(radicand);
}

// 4x4 scattering matrix at one detuning; entry(i, j) is the amplitude from
// injection port j to exit port i (ports 1-based).
struct SMatrix {
    std::array<std::array<cplx, 4>, 4> s{};  // s[i][j], 0-based
    double delta = 0.0;

    cplx entry(int exit_port, int injection_port) const {
        return s[exit_port - 1][injection_port - 1];
    }

    // 2-norm of each column; 1 for a flux-conserving device.
    std::array<double, 4> column_norms() const {
        std::array<double, 4> n{};
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int i = 0; i < 4; ++i) acc += std::norm(s[i][j]);
            n[j] = std::sqrt(acc);
        }
        return n;
    }

    // max |(S^H S - I)_{ij}|; 0 for a unitary matrix.
    double unitarity_defect() const {
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                cplx acc = 0.0;
                for (int k = 0; k < 4; ++k)
                    acc += std::conj(s[k][i]) * s[k][j];
                if (i == j) acc -= 1.0;
                worst = std::max(worst, std::abs(acc));
            }
        }
        return worst;
    }
};

inline SMatrix build_smatrix(const SystemParams& p, double delta) {
    SMatrix m;
    m.delta = delta;
    for (int port = 1; port <= 4; ++port) {
        const auto exits = amplitudes_port(p, delta, port).by_exit_port();
        for (int i = 0; i < 4; ++i) m.s[i][port - 1] = exits[i];
    }
    return m;
}

}  // namespace gmol
