// oracle.hpp — independent ground truth for the scattering amplitudes: the
// stationary-state boundary-matching relations assembled as a dense 10x10
// complex linear system and solved by LU with partial pivoting.  Field values
// at the coupling points follow the midpoint convention
// phi(x0) = [phi(x0-) + phi(x0+)] / 2, which is where the 1/2 factors in the
// atom rows come from.
//
// Unknown ordering (fixed, so the assembled matrix is reproducible):
//   [t_l, r_l, t_d, r_d, t_M, r_M, t_N, r_N, u_a, u_b]
// where for port-2 injection the same slots carry the tilde amplitudes.
// Equation ordering: the jump relations of the four field branches at the
// first coupling point (RM, LM, RN, LN at x = 0), then at the second point
// (RM, LM at x = l; RN, LN at x = d), then the two atom relations.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdio>
#include <string>

#include "gmol/scattering.hpp"

namespace gmol::oracle {

// Linear system condition estimate exceeded this; the solve is refused
// rather than silently regularized.
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kConditionLimit = 1e12;

using Matrix10 = Eigen::Matrix<cplx, 10, 10>;
using Vector10 = Eigen::Matrix<cplx, 10, 1>;

// Full solution of one boundary-matching solve.
struct OracleSolution {
    cplx t_l, r_l;  // segment amplitudes between the waveguide-M points
    cplx t_d, r_d;  // segment amplitudes between the waveguide-N points
    cplx u_a, u_b;  // atomic excitation amplitudes
    AmplitudeSet exits;
    double phi_l = 0.0, phi_d = 0.0;
    double residual = 0.0;     // max |A x - b|
    double system_norm = 1.0;  // inf-norm scale of [A x | b]
    double rcond = 0.0;        // reciprocal condition estimate of A
};

namespace detail {

struct Inputs {
    double lam_r, lam_l, eta_r, eta_l;  // coupling amplitudes sqrt(Gamma)
    cplx el, eli, ed, edi;              // e^{+-i phi_l}, e^{+-i phi_d}
    double phi_l, phi_d;
};

inline Inputs make_inputs(const SystemParams& p, double delta) {
    Inputs in;
    in.lam_r = std::sqrt(p.gamma_lambda_r);
    in.lam_l = std::sqrt(p.gamma_lambda_l);
    in.eta_r = std::sqrt(p.gamma_eta_r);
    in.eta_l = std::sqrt(p.gamma_eta_l);
    in.phi_l = phase_shift(p.leg_l(), delta);
    in.phi_d = phase_shift(p.leg_d(), delta);
    in.el = std::polar(1.0, in.phi_l);
    in.eli = std::conj(in.el);
    in.ed = std::polar(1.0, in.phi_d);
    in.edi = std::conj(in.ed);
    return in;
}

}  // namespace detail

// Port-1 injection (unit right-mover entering waveguide M from the left).
inline void assemble_port1(const SystemParams& p, double delta, Matrix10& A,
                           Vector10& b) {
    const auto in = detail::make_inputs(p, delta);
    const cplx i(0.0, 1.0);
    A.setZero();
    b.setZero();
    // x = 0: i(1 - t_l) + u_a lam_r = 0
    A(0, 0) = -i;
    A(0, 8) = in.lam_r;
    b(0) = -i;
    // x = 0: i(r_l - r_M) + u_a lam_l = 0
    A(1, 1) = i;
    A(1, 5) = -i;
    A(1, 8) = in.lam_l;
    // x = 0: -i t_d + u_b eta_r = 0
    A(2, 2) = -i;
    A(2, 9) = in.eta_r;
    // x = 0: i(r_d - r_N) + u_b eta_l = 0
    A(3, 3) = i;
    A(3, 7) = -i;
    A(3, 9) = in.eta_l;
    // x = l: i(t_l - t_M) e^{i phi_l} + u_a lam_r = 0
    A(4, 0) = i * in.el;
    A(4, 4) = -i * in.el;
    A(4, 8) = in.lam_r;
    // x = l: -i r_l e^{-i phi_l} + u_a lam_l = 0
    A(5, 1) = -i * in.eli;
    A(5, 8) = in.lam_l;
    // x = d: i(t_d - t_N) e^{i phi_d} + u_b eta_r = 0
    A(6, 2) = i * in.ed;
    A(6, 6) = -i * in.ed;
    A(6, 9) = in.eta_r;
    // x = d: -i r_d e^{-i phi_d} + u_b eta_l = 0
    A(7, 3) = -i * in.edi;
    A(7, 9) = in.eta_l;
    // atom a: Delta u_a = g u_b + [lam_r(1 + t_l) + lam_l(r_M + r_l)]/2
    //                   + [lam_r(t_l + t_M) e^{i phi_l} + lam_l r_l e^{-i phi_l}]/2
    A(8, 8) = delta;
    A(8, 9) = -p.g;
    A(8, 0) = -0.5 * in.lam_r * (1.0 + in.el);
    A(8, 1) = -0.5 * in.lam_l * (1.0 + in.eli);
    A(8, 5) = -0.5 * in.lam_l;
    A(8, 4) = -0.5 * in.lam_r * in.el;
    b(8) = 0.5 * in.lam_r;
    // atom b: Delta u_b = g u_a + [eta_r t_d + eta_l(r_N + r_d)]/2
    //                   + [eta_r(t_d + t_N) e^{i phi_d} + eta_l r_d e^{-i phi_d}]/2
    A(9, 9) = delta;
    A(9, 8) = -p.g;
    A(9, 2) = -0.5 * in.eta_r * (1.0 + in.ed);
    A(9, 3) = -0.5 * in.eta_l * (1.0 + in.edi);
    A(9, 7) = -0.5 * in.eta_l;
    A(9, 6) = -0.5 * in.eta_r * in.ed;
}

// Port-2 injection (unit left-mover entering waveguide M from the right).
// The relation set follows from the same substitution that produces the
// port-1 relations, applied to the reversed-drive piecewise ansatz.
inline void assemble_port2(const SystemParams& p, double delta, Matrix10& A,
                           Vector10& b) {
    const auto in = detail::make_inputs(p, delta);
    const cplx i(0.0, 1.0);
    A.setZero();
    b.setZero();
    // x = 0: -i r_l + u_a lam_r = 0
    A(0, 1) = -i;
    A(0, 8) = in.lam_r;
    // x = 0: i(t_l - t_M) + u_a lam_l = 0
    A(1, 0) = i;
    A(1, 4) = -i;
    A(1, 8) = in.lam_l;
    // x = 0: -i r_d + u_b eta_r = 0
    A(2, 3) = -i;
    A(2, 9) = in.eta_r;
    // x = 0: i(t_d - t_N) + u_b eta_l = 0
    A(3, 2) = i;
    A(3, 6) = -i;
    A(3, 9) = in.eta_l;
    // x = l: i(r_l - r_M) e^{i phi_l} + u_a lam_r = 0
    A(4, 1) = i * in.el;
    A(4, 5) = -i * in.el;
    A(4, 8) = in.lam_r;
    // x = l: i(1 - t_l) e^{-i phi_l} + u_a lam_l = 0
    A(5, 0) = -i * in.eli;
    A(5, 8) = in.lam_l;
    b(5) = -i * in.eli;
    // x = d: i(r_d - r_N) e^{i phi_d} + u_b eta_r = 0
    A(6, 3) = i * in.ed;
    A(6, 7) = -i * in.ed;
    A(6, 9) = in.eta_r;
    // x = d: -i t_d e^{-i phi_d} + u_b eta_l = 0
    A(7, 2) = -i * in.edi;
    A(7, 9) = in.eta_l;
    // atom a: Delta u_a = g u_b + lam_r[r_l + (r_l + r_M) e^{i phi_l}]/2
    //                   + lam_l[(t_M + t_l) + (t_l + 1) e^{-i phi_l}]/2
    A(8, 8) = delta;
    A(8, 9) = -p.g;
    A(8, 1) = -0.5 * in.lam_r * (1.0 + in.el);
    A(8, 5) = -0.5 * in.lam_r * in.el;
    A(8, 0) = -0.5 * in.lam_l * (1.0 + in.eli);
    A(8, 4) = -0.5 * in.lam_l;
    b(8) = 0.5 * in.lam_l * in.eli;
    // atom b: Delta u_b = g u_a + eta_r[r_d + (r_d + r_N) e^{i phi_d}]/2
    //                   + eta_l[(t_N + t_d) + t_d e^{-i phi_d}]/2
    A(9, 9) = delta;
    A(9, 8) = -p.g;
    A(9, 3) = -0.5 * in.eta_r * (1.0 + in.ed);
    A(9, 7) = -0.5 * in.eta_r * in.ed;
    A(9, 2) = -0.5 * in.eta_l * (1.0 + in.edi);
    A(9, 6) = -0.5 * in.eta_l;
}

namespace detail {

inline OracleSolution solve(const SystemParams& p, double delta, int port) {
    Matrix10 A;
    Vector10 b;
    if (port == 1)
        assemble_port1(p, delta, A, b);
    else
        assemble_port2(p, delta, A, b);

    Eigen::PartialPivLU<Matrix10> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond > 1.0 / kConditionLimit)) {
        std::ostringstream os;
        os << "boundary-matching system is ill-conditioned (rcond = " << rcond
           << ") at delta = " << delta << ", g = " << p.g
           << ", theta_l = " << p.theta_l << ", theta_d = " << p.theta_d
           << ", tau_l = " << p.tau_l << ", tau_d = " << p.tau_d;
        throw SingularSystemError(os.str());
    }
    const Vector10 x = lu.solve(b);

    OracleSolution sol;
    sol.t_l = x(0);
    sol.r_l = x(1);
    sol.t_d = x(2);
    sol.r_d = x(3);
    sol.u_a = x(8);
    sol.u_b = x(9);
    sol.exits.t_same = x(4);
    sol.exits.r_same = x(5);
    sol.exits.t_far = x(6);
    sol.exits.r_near = x(7);
    sol.exits.injection_port = port;
    sol.phi_l = phase_shift(p.leg_l(), delta);
    sol.phi_d = phase_shift(p.leg_d(), delta);
    sol.residual = (A * x - b).cwiseAbs().maxCoeff();
    sol.system_norm =
        A.cwiseAbs().maxCoeff() * std::max(1.0, x.cwiseAbs().maxCoeff()) +
        b.cwiseAbs().maxCoeff();
    sol.rcond = rcond;
    return sol;
}

}  // namespace detail

inline OracleSolution oracle_solve_port1(const SystemParams& p, double delta) {
    return detail::solve(p, delta, 1);
}

inline OracleSolution oracle_solve_port2(const SystemParams& p, double delta) {
    return detail::solve(p, delta, 2);
}

// Plain-text dump of the assembled matrix and right-hand side for manual
// inspection: one row per line, "re,im" per entry, tab separated, with the
// right-hand side as the last column after a "|" separator.
inline std::string format_system(const SystemParams& p, double delta,
                                 int port) {
    Matrix10 A;
    Vector10 b;
    if (port == 1)
        assemble_port1(p, delta, A, b);
    else if (port == 2)
        assemble_port2(p, delta, A, b);
    else
        throw std::invalid_argument("format_system: port must be 1 or 2");

    auto cell = [](const cplx& z) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
        return std::string(buf);
    };
    std::string out;
    out += "# boundary-matching system, port ";
    out += std::to_string(port);
    out += ", unknowns [t_l r_l t_d r_d t_M r_M t_N r_N u_a u_b]\n";
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 10; ++c) {
            out += cell(A(r, c));
            out += '\t';
        }
        out += "|\t";
        out += cell(b(r));
        out += '\n';
    }
    return out;
}

enum class Waveguide { M, N };
enum class Direction { R, L };

// Piecewise plane-wave field of a solved configuration.  Positions are in
// units of the leg length of the chosen waveguide, so the inter-point segment
// is x in [0, 1] and the phase accumulated across it is the full leg phase.
// At x = 0 and x = 1 the midpoint value of the two adjacent segments is
// returned, matching the convention of the atom relations.
class FieldProfile {
public:
    explicit FieldProfile(const OracleSolution& sol)
        : phi_l_(sol.phi_l), phi_d_(sol.phi_d) {
        const cplx tM = sol.exits.t_same, rM = sol.exits.r_same;
        const cplx tN = sol.exits.t_far, rN = sol.exits.r_near;
        if (sol.exits.injection_port == 1) {
            seg_[0][0] = {1.0, sol.t_l, tM};       // M, R
            seg_[0][1] = {rM, sol.r_l, 0.0};       // M, L
            seg_[1][0] = {0.0, sol.t_d, tN};       // N, R
            seg_[1][1] = {rN, sol.r_d, 0.0};       // N, L
        } else if (sol.exits.injection_port == 2) {
            seg_[0][0] = {0.0, sol.r_l, rM};       // M, R
            seg_[0][1] = {tM, sol.t_l, 1.0};       // M, L
            seg_[1][0] = {0.0, sol.r_d, rN};       // N, R
            seg_[1][1] = {tN, sol.t_d, 0.0};       // N, L
        } else {
            throw std::invalid_argument(
                "FieldProfile: solution must be a port-1 or port-2 solve");
        }
    }

    cplx operator()(Waveguide wg, Direction dir, double x) const {
        const auto& c = seg_[wg == Waveguide::M ? 0 : 1]
                            [dir == Direction::R ? 0 : 1];
        cplx coeff;
        if (x < 0.0)
            coeff = c[0];
        else if (x == 0.0)
            coeff = 0.5 * (c[0] + c[1]);
        else if (x < 1.0)
            coeff = c[1];
        else if (x == 1.0)
            coeff = 0.5 * (c[1] + c[2]);
        else
            coeff = c[2];
        const double phi = wg == Waveguide::M ? phi_l_ : phi_d_;
        const double sign = dir == Direction::R ? 1.0 : -1.0;
        return coeff * std::polar(1.0, sign * phi * x);
    }

private:
    double phi_l_, phi_d_;
    std::array<cplx, 3> seg_[2][2];  // [waveguide][direction][segment]
};

inline cplx field_profile(const OracleSolution& sol, Waveguide wg,
                          Direction dir, double x) {
    return FieldProfile(sol)(wg, dir, x);
}

}  // namespace gmol::oracle
