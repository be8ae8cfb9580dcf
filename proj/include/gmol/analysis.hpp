// analysis.hpp — chirality and nonreciprocity contrast ratios, ideal-routing
// classification against the four chiral-coupling cases, spectrum feature
// extraction (peaks, dips, splitting, symmetry), and the symmetry validators.

#pragma once

#include <algorithm>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "gmol/scattering.hpp"

namespace gmol::analysis {

// ---------------------------------------------------------------------------
// Contrast ratios

// Contrast ratios at one detuning.  i_n compares the cross-waveguide
// transmissions (ports 1->4 vs 2->3), i_m the same-waveguide ones (1->2 vs
// 2->1).  A ratio is absent when both directions carry zero probability:
// "no channel" is a different statement from "reciprocal".
struct ContrastRatios {
    std::optional<double> i_n;
    std::optional<double> i_m;
    double delta = 0.0;
};

// Closed form of the cross-waveguide contrast,
//   I_N = 1 - 2 G_eL G_lL / (G_eL G_lL + G_eR G_lR),
// independent of detuning, of the propagation times and of g.
inline double contrast_in_closed(const SystemParams& p) {
    const double left = p.gamma_eta_l * p.gamma_lambda_l;
    const double right = p.gamma_eta_r * p.gamma_lambda_r;
    if (left + right <= 0.0)
        throw DomainError(
            "contrast_in_closed: no cross-waveguide channel in either "
            "direction (both rate products vanish)");
    return 1.0 - 2.0 * left / (left + right);
}

inline ContrastRatios contrast_ratios(const SystemParams& p, double delta) {
    const Coefficients c1 = coefficients(amplitudes_port1(p, delta));
    const Coefficients c2 = coefficients(amplitudes_port2(p, delta));
    ContrastRatios out;
    out.delta = delta;
    const double tn = c1.t_far, ttn = c2.t_far;
    if (tn + ttn > 0.0) {
        out.i_n = (tn - ttn) / (tn + ttn);
        const double left = p.gamma_eta_l * p.gamma_lambda_l;
        const double right = p.gamma_eta_r * p.gamma_lambda_r;
        if (left + right > 0.0) {
            const double closed = contrast_in_closed(p);
            if (std::abs(*out.i_n - closed) > 1e-12) {
                std::ostringstream os;
                os << "contrast_ratios: coefficient route " << *out.i_n
                   << " disagrees with the closed form " << closed
                   << " at delta = " << delta;
                throw std::logic_error(os.str());
            }
        }
    }
    const double tm = c1.t_same, ttm = c2.t_same;
    if (tm + ttm > 0.0) out.i_m = (tm - ttm) / (tm + ttm);
    return out;
}

// ---------------------------------------------------------------------------
// Ideal-routing classification (the four fully chiral coupling patterns)

struct RoutingCase {
    enum class Entry { zero, unit, c1, c2 };

    int table_row = 0;   // 1..4 when ideal, 0 for generic couplings
    double gamma = 0.0;  // the matched nonzero rate when ideal
    // Expected exit-probability patterns in the order
    // (R_N, T_N, R_M, T_M) for port-1 and the tilde set for port-2 injection.
    std::array<Entry, 4> port1_pattern{};
    std::array<Entry, 4> port2_pattern{};

    bool ideal() const { return table_row != 0; }
};

// Detects which (if any) of the four ideal chiral-coupling rows the rate
// pattern matches.  Vanishing rates are tested against an absolute 1e-12,
// matched rates against a relative 1e-9.
inline RoutingCase classify_routing(const SystemParams& p) {
    constexpr double kZeroTol = 1e-12;
    const auto zero = [&](double v) { return v < kZeroTol; };
    const auto match = [&](double a, double b) {
        return !zero(a) && !zero(b) &&
               std::abs(a - b) <= 1e-9 * std::max(a, b);
    };
    using E = RoutingCase::Entry;
    RoutingCase rc;
    const double lr = p.gamma_lambda_r, ll = p.gamma_lambda_l;
    const double er = p.gamma_eta_r, el = p.gamma_eta_l;
    if (zero(el) && zero(ll) && match(er, lr)) {
        rc.table_row = 1;
        rc.gamma = 0.5 * (er + lr);
        rc.port1_pattern = {E::zero, E::c1, E::zero, E::c2};
        rc.port2_pattern = {E::zero, E::zero, E::zero, E::unit};
    } else if (zero(er) && zero(lr) && match(el, ll)) {
        rc.table_row = 2;
        rc.gamma = 0.5 * (el + ll);
        rc.port1_pattern = {E::zero, E::zero, E::zero, E::unit};
        rc.port2_pattern = {E::zero, E::c1, E::zero, E::c2};
    } else if (zero(el) && zero(lr) && match(er, ll)) {
        rc.table_row = 3;
        rc.gamma = 0.5 * (er + ll);
        rc.port1_pattern = {E::zero, E::zero, E::zero, E::unit};
        rc.port2_pattern = {E::c1, E::zero, E::zero, E::c2};
    } else if (zero(er) && zero(ll) && match(el, lr)) {
        rc.table_row = 4;
        rc.gamma = 0.5 * (el + lr);
        rc.port1_pattern = {E::c1, E::zero, E::zero, E::c2};
        rc.port2_pattern = {E::zero, E::zero, E::zero, E::unit};
    }
    return rc;
}

// Rate pattern of one ideal chiral-coupling row.
inline SystemParams ideal_case_params(int row, double gamma) {
    if (row < 1 || row > 4)
        throw std::invalid_argument("ideal_case_params: row must be 1..4");
    SystemParams p;
    p.gamma_lambda_r = (row == 1 || row == 4) ? gamma : 0.0;
    p.gamma_lambda_l = (row == 2 || row == 3) ? gamma : 0.0;
    p.gamma_eta_r = (row == 1 || row == 3) ? gamma : 0.0;
    p.gamma_eta_l = (row == 2 || row == 4) ? gamma : 0.0;
    return p;
}

// The tabulated C1 / C2 probabilities of the ideal rows, evaluated from their
// own closed forms (not through the amplitude code, so the two can be checked
// against each other).  C1 + C2 = 1.
inline double table_c1(double gamma, double g, LegPhase leg_l, LegPhase leg_d,
                       double delta) {
    const cplx i(0.0, 1.0);
    const cplx el = std::polar(1.0, phase_shift(leg_l, delta));
    const cplx ed = std::polar(1.0, phase_shift(leg_d, delta));
    const cplx den = g * g - (delta + i * (1.0 + ed) * gamma) *
                                 (delta + i * (1.0 + el) * gamma);
    return std::norm(i * (1.0 + ed) * (1.0 + el) * g * gamma / den);
}

inline double table_c2(double gamma, double g, LegPhase leg_l, LegPhase leg_d,
                       double delta) {
    const cplx i(0.0, 1.0);
    const cplx el = std::polar(1.0, phase_shift(leg_l, delta));
    const cplx ed = std::polar(1.0, phase_shift(leg_d, delta));
    const cplx den = g * g - (delta + i * (1.0 + ed) * gamma) *
                                 (delta + i * (1.0 + el) * gamma);
    const cplx num = g * g - (delta + i * (1.0 + ed) * gamma) *
                                 (delta - i * (1.0 + std::conj(el)) * gamma);
    return std::norm(num / den);
}

// Exit probabilities at a single detuning, plus the tabulated C values when
// an ideal row applies.
struct RoutingProbe {
    double delta = 0.0;
    std::array<double, 4> exit_probability{};  // index 0..3 = ports 1..4
    int dominant_port = 0;
    std::optional<double> c1, c2;
};

inline RoutingProbe routing_probe(const SystemParams& p, double delta,
                                  int injection_port = 1) {
    RoutingProbe probe;
    probe.delta = delta;
    const auto exits =
        amplitudes_port(p, delta, injection_port).by_exit_port();
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
        probe.exit_probability[i] = std::norm(exits[i]);
        if (probe.exit_probability[i] > best) {
            best = probe.exit_probability[i];
            probe.dominant_port = i + 1;
        }
    }
    const RoutingCase rc = classify_routing(p);
    if (rc.ideal()) {
        probe.c1 = table_c1(rc.gamma, p.g, p.leg_l(), p.leg_d(), delta);
        probe.c2 = table_c2(rc.gamma, p.g, p.leg_l(), p.leg_d(), delta);
    }
    return probe;
}

struct RoutingTarget {
    double delta = 0.0;
    int exit_port = 0;
    double probability = 0.0;
};

struct RoutingReport {
    RoutingCase routing_case;
    int injection_port = 1;
    double threshold = 0.999;
    std::vector<RoutingTarget> targets;  // grid points routed to one port
    // Peak positions Gamma sin(theta) +- sqrt(g^2 - 3G^2/2 - 2G^2 cos(theta)
    // - G^2 cos(2 theta)/2) of the cross-waveguide probability, filled when
    // the ideal case with equal Markovian legs applies and the radicand is
    // nonnegative.
    std::vector<double> predicted_peaks;
};

// Scans the detuning grid and reports every point where a single exit
// carries more than `threshold` of the probability.
inline RoutingReport routing_targets(const SystemParams& p,
                                     std::span<const double> deltas,
                                     double threshold = 0.999,
                                     int injection_port = 1) {
    RoutingReport report;
    report.routing_case = classify_routing(p);
    report.injection_port = injection_port;
    report.threshold = threshold;
    for (double delta : deltas) {
        const auto probe = routing_probe(p, delta, injection_port);
        const double prob =
            probe.exit_probability[probe.dominant_port - 1];
        if (prob > threshold)
            report.targets.push_back({delta, probe.dominant_port, prob});
    }
    const int row = report.routing_case.table_row;
    const bool cross_pattern = (injection_port == 1 && (row == 1 || row == 4)) ||
                               (injection_port == 2 && (row == 2 || row == 3));
    if (cross_pattern && p.tau_l == 0.0 && p.tau_d == 0.0 &&
        p.theta_l == p.theta_d) {
        const double gm = report.routing_case.gamma;
        const double th = p.theta_l;
        const double radicand = p.g * p.g - 1.5 * gm * gm -
                                2.0 * gm * gm * std::cos(th) -
                                0.5 * gm * gm * std::cos(2.0 * th);
        if (radicand >= 0.0) {
            const double root = std::sqrt(radicand);
            report.predicted_peaks = {gm * std::sin(th) - root,
                                      gm * std::sin(th) + root};
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Spectrum feature extraction

struct FeaturePoint {
    double delta = 0.0;
    double value = 0.0;
};

struct SpectrumFeatures {
    std::vector<FeaturePoint> peaks;  // sorted by delta
    std::vector<FeaturePoint> dips;   // sorted by delta
    std::optional<double> symmetry_center;
    std::optional<double> splitting_distance;  // two highest peaks
};

struct FeatureOptions {
    double prominence_floor = 1e-6;  // suppress numerical ripples
    double position_tol = 1e-6;      // golden-section bracket width
};

namespace detail {

// Golden-section maximization on [lo, hi]; assumes a single interior maximum.
inline double golden_max(const std::function<double(double)>& f, double lo,
                         double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Vertex of the parabola through three samples, clamped into (x0, x2).
inline double parabola_vertex(double x0, double y0, double x1, double y1,
                              double x2, double y2) {
    const double d01 = x1 - x0, d12 = x1 - x2;
    const double num = d01 * d01 * (y1 - y2) - d12 * d12 * (y1 - y0);
    const double den = d01 * (y1 - y2) - d12 * (y1 - y0);
    if (den == 0.0) return x1;
    double v = x1 - 0.5 * num / den;
    return std::clamp(v, std::nextafter(x0, x2), std::nextafter(x2, x0));
}

// Topographic prominence of the local maximum at index i: height above the
// higher of the two minima separating it from larger values (or the ends).
inline double prominence(std::span<const double> v, std::size_t i) {
    double left_min = v[i];
    for (std::size_t j = i; j-- > 0;) {
        if (v[j] > v[i]) break;
        left_min = std::min(left_min, v[j]);
    }
    double right_min = v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (v[j] > v[i]) break;
        right_min = std::min(right_min, v[j]);
    }
    return v[i] - std::max(left_min, right_min);
}

inline std::vector<FeaturePoint> local_maxima(
    std::span<const double> x, std::span<const double> v,
    const FeatureOptions& opt, const std::function<double(double)>* f) {
    std::vector<FeaturePoint> out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (!(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
        if (prominence(v, i) < opt.prominence_floor) continue;
        FeaturePoint fp;
        fp.delta = parabola_vertex(x[i - 1], v[i - 1], x[i], v[i], x[i + 1],
                                   v[i + 1]);
        fp.value = v[i];
        if (f) {
            fp.delta = golden_max(*f, x[i - 1], x[i + 1], opt.position_tol);
            fp.value = (*f)(fp.delta);
        }
        out.push_back(fp);
    }
    return out;
}

inline std::optional<double> detect_symmetry_center(
    std::span<const double> x, std::span<const double> v,
    const std::vector<FeaturePoint>& peaks) {
    double center;
    if (peaks.size() >= 2) {
        auto by_value = [](const FeaturePoint& a, const FeaturePoint& b) {
            return a.value < b.value;
        };
        auto first = std::max_element(peaks.begin(), peaks.end(), by_value);
        double best2 = -1.0, pos2 = 0.0;
        for (const auto& pk : peaks) {
            if (&pk == &*first) continue;
            if (pk.value > best2) {
                best2 = pk.value;
                pos2 = pk.delta;
            }
        }
        center = 0.5 * (first->delta + pos2);
    } else if (peaks.size() == 1) {
        center = peaks.front().delta;
    } else {
        return std::nullopt;
    }
    // Mirror test by linear interpolation of the sampled series.
    const auto interp = [&](double xq) -> std::optional<double> {
        if (xq < x.front() || xq > x.back()) return std::nullopt;
        auto it = std::lower_bound(x.begin(), x.end(), xq);
        if (it == x.begin()) return v.front();
        const std::size_t hi = std::size_t(it - x.begin());
        const std::size_t lo = hi - 1;
        const double t = (xq - x[lo]) / (x[hi] - x[lo]);
        return v[lo] + t * (v[hi] - v[lo]);
    };
    double span_v = *std::max_element(v.begin(), v.end()) -
                    *std::min_element(v.begin(), v.end());
    if (span_v <= 0.0) return std::nullopt;
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto mirrored = interp(2.0 * center - x[i]);
        if (!mirrored) continue;
        worst = std::max(worst, std::abs(v[i] - *mirrored));
    }
    if (worst > 1e-3 * span_v) return std::nullopt;
    return center;
}

inline SpectrumFeatures find_features_impl(
    std::span<const double> deltas, std::span<const double> values,
    const FeatureOptions& opt, const std::function<double(double)>* f) {
    if (deltas.size() != values.size())
        throw std::invalid_argument("find_features: size mismatch");
    if (deltas.size() < 3)
        throw std::invalid_argument("find_features: need at least 3 samples");
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (!(deltas[i] > deltas[i - 1]))
            throw std::invalid_argument(
                "find_features: grid must be strictly increasing");

    SpectrumFeatures out;
    out.peaks = local_maxima(deltas, values, opt, f);

    std::vector<double> neg(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) neg[i] = -values[i];
    std::function<double(double)> negf;
    if (f) negf = [f](double x) { return -(*f)(x); };
    out.dips = local_maxima(deltas, neg, opt, f ? &negf : nullptr);
    for (auto& d : out.dips) d.value = -d.value;

    if (out.peaks.size() >= 2) {
        std::vector<FeaturePoint> sorted = out.peaks;
        std::sort(sorted.begin(), sorted.end(),
                  [](const FeaturePoint& a, const FeaturePoint& b) {
                      return a.value > b.value;
                  });
        out.splitting_distance = std::abs(sorted[0].delta - sorted[1].delta);
    }
    out.symmetry_center = detect_symmetry_center(deltas, values, out.peaks);
    return out;
}

}  // namespace detail

// Feature extraction on a sampled spectrum.  Peak and dip positions are
// refined by parabolic interpolation within their bracketing grid interval.
inline SpectrumFeatures find_features(std::span<const double> deltas,
                                      std::span<const double> values,
                                      const FeatureOptions& opt = {}) {
    return detail::find_features_impl(deltas, values, opt, nullptr);
}

// Same, with golden-section refinement against the underlying function; the
// position error is bounded by opt.position_tol.
inline SpectrumFeatures find_features(std::span<const double> deltas,
                                      std::span<const double> values,
                                      const std::function<double(double)>& f,
                                      const FeatureOptions& opt = {}) {
    return detail::find_features_impl(deltas, values, opt, &f);
}

// Convenience: sample a function on a uniform grid.
inline std::pair<std::vector<double>, std::vector<double>> sample_grid(
    const std::function<double(double)>& f, double lo, double hi, int count) {
    std::vector<double> x(count), v(count);
    for (int i = 0; i < count; ++i) {
        x[i] = lo + (hi - lo) * double(i) / double(count - 1);
        v[i] = f(x[i]);
    }
    return {std::move(x), std::move(v)};
}

// ---------------------------------------------------------------------------
// Symmetry validators

struct CrossingResult {
    double delta = 0.0;
    double residual = 0.0;  // max |coefficient - 1/4| at the crossing
};

struct SymmetryReport {
    double delta1 = 0.0;                // 2 Gamma sin(theta)
    double reflection_asymmetry = 0.0;  // spectra about delta1
    double tt_max = 0.0;                // T<->T variant of the theta map
    double tr_max = 0.0;                // T<->R variant as printed
    bool tt_holds = false;
    bool tr_holds = false;
    double even_asymmetry = 0.0;  // T(delta) vs T(-delta), theta = n pi
    CrossingResult crossing;
};

// (a) Largest asymmetry of the four port-1 spectra about
// delta1 = 2 Gamma sin(theta), symmetric coupling, Markovian legs.
inline double reflection_asymmetry_about_center(
    double gamma, double g, double theta, std::span<const double> offsets) {
    const double delta1 = 2.0 * gamma * std::sin(theta);
    const LegPhase leg{0.0, theta};
    double worst = 0.0;
    for (double x : offsets) {
        const auto a =
            coefficients(amplitudes_symmetric(gamma, g, leg, leg, delta1 + x));
        const auto b =
            coefficients(amplitudes_symmetric(gamma, g, leg, leg, delta1 - x));
        worst = std::max({worst, std::abs(a.r_near - b.r_near),
                          std::abs(a.t_far - b.t_far),
                          std::abs(a.r_same - b.r_same),
                          std::abs(a.t_same - b.t_same)});
    }
    return worst;
}

// (b) Both candidate forms of the (delta, theta) -> (-delta, 2pi - theta)
// reflection relation, evaluated over the given grids (symmetric coupling,
// Markovian).  tt_max tests X(delta, theta) = X(-delta, 2pi - theta) for all
// four coefficients; tr_max tests the variant that maps T into R.
struct ThetaReflectionCheck {
    double tt_max = 0.0;
    double tr_max = 0.0;
};

inline ThetaReflectionCheck theta_reflection_variants(
    double gamma, double g, std::span<const double> thetas,
    std::span<const double> deltas) {
    ThetaReflectionCheck chk;
    for (double th : thetas) {
        const LegPhase leg{0.0, th};
        const LegPhase leg_ref{0.0, 2.0 * std::numbers::pi - th};
        for (double d : deltas) {
            const auto a =
                coefficients(amplitudes_symmetric(gamma, g, leg, leg, d));
            const auto b = coefficients(
                amplitudes_symmetric(gamma, g, leg_ref, leg_ref, -d));
            chk.tt_max = std::max({chk.tt_max, std::abs(a.r_near - b.r_near),
                                   std::abs(a.t_far - b.t_far),
                                   std::abs(a.r_same - b.r_same),
                                   std::abs(a.t_same - b.t_same)});
            chk.tr_max = std::max({chk.tr_max, std::abs(a.t_far - b.r_near),
                                   std::abs(a.t_same - b.r_same)});
        }
    }
    return chk;
}

// (c) T(delta) vs T(-delta) at theta = n pi with retardation tau.
inline double even_spectrum_asymmetry(double gamma, double g, double theta,
                                      double tau,
                                      std::span<const double> deltas) {
    const LegPhase leg{tau, theta};
    double worst = 0.0;
    for (double d : deltas) {
        const auto a = coefficients(amplitudes_symmetric(gamma, g, leg, leg, d));
        const auto b =
            coefficients(amplitudes_symmetric(gamma, g, leg, leg, -d));
        worst = std::max({worst, std::abs(a.t_far - b.t_far),
                          std::abs(a.t_same - b.t_same)});
    }
    return worst;
}

// Detuning at which the four coefficients come closest to sharing the value
// 1/4 (symmetric coupling, Markovian legs); grid scan plus golden-section.
inline CrossingResult equal_coefficient_crossing(double gamma, double g,
                                                 double theta, double lo,
                                                 double hi,
                                                 int grid_points = 4001) {
    const LegPhase leg{0.0, theta};
    const auto residual = [&](double d) {
        const auto c = coefficients(amplitudes_symmetric(gamma, g, leg, leg, d));
        return std::max({std::abs(c.r_near - 0.25), std::abs(c.t_far - 0.25),
                         std::abs(c.r_same - 0.25),
                         std::abs(c.t_same - 0.25)});
    };
    double best = residual(lo);
    double best_d = lo;
    const double h = (hi - lo) / double(grid_points - 1);
    for (int i = 1; i < grid_points; ++i) {
        const double d = lo + h * double(i);
        const double r = residual(d);
        if (r < best) {
            best = r;
            best_d = d;
        }
    }
    const double a = std::max(lo, best_d - h), b = std::min(hi, best_d + h);
    const double refined = detail::golden_max(
        [&](double d) { return -residual(d); }, a, b, 1e-10);
    CrossingResult res;
    res.delta = refined;
    res.residual = residual(refined);
    if (best < res.residual) {
        res.delta = best_d;
        res.residual = best;
    }
    return res;
}

struct SymmetryOptions {
    double reflection_theta = 0.5 * std::numbers::pi;
    double even_theta = 80.0 * std::numbers::pi;
    double even_tau = 1.0;
    double crossing_theta = 0.75 * std::numbers::pi;
    double delta_span = 8.0;
    int grid_points = 1601;
    double tolerance = 1e-10;
};

// Runs all symmetry checks for the symmetric-coupling family at rate gamma
// and inner coupling g.
inline SymmetryReport symmetry_validators(double gamma, double g,
                                          const SymmetryOptions& opt = {}) {
    SymmetryReport rep;
    rep.delta1 = 2.0 * gamma * std::sin(opt.reflection_theta);

    std::vector<double> offsets(opt.grid_points);
    for (int i = 0; i < opt.grid_points; ++i)
        offsets[i] = opt.delta_span * double(i + 1) / double(opt.grid_points);
    rep.reflection_asymmetry = reflection_asymmetry_about_center(
        gamma, g, opt.reflection_theta, offsets);

    std::vector<double> thetas;
    for (int i = 1; i <= 19; ++i)
        thetas.push_back(0.1 * double(i) * std::numbers::pi);
    std::vector<double> deltas(201);
    for (int i = 0; i < 201; ++i)
        deltas[i] = -opt.delta_span + 2.0 * opt.delta_span * double(i) / 200.0;
    const auto chk = theta_reflection_variants(gamma, g, thetas, deltas);
    rep.tt_max = chk.tt_max;
    rep.tr_max = chk.tr_max;
    rep.tt_holds = chk.tt_max < opt.tolerance;
    rep.tr_holds = chk.tr_max < opt.tolerance;

    rep.even_asymmetry = even_spectrum_asymmetry(gamma, g, opt.even_theta,
                                                 opt.even_tau, deltas);
    rep.crossing =
        equal_coefficient_crossing(gamma, g, opt.crossing_theta,
                                   -opt.delta_span, opt.delta_span);
    return rep;
}

}  // namespace gmol::analysis
