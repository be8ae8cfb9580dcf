// sweep.hpp — config-driven parameter sweeps over the scattering model with
// deterministic CSV/JSON emission.
//
// Config format: line-oriented `key=value`, `#` starts a comment, blank lines
// ignored.  Scalars accept a trailing `pi` multiplier ("0.5pi").  Grid axes
// are declared as `axis=<name>:<start>:<stop>:<count>` (linear spacing, 1 to
// 3 axes, row-major in declaration order).  Axis names: delta, theta_l,
// theta_d, theta_both, g, tau_both, gamma_ratio_lr.  The gamma_ratio_lr axis
// sets both left rates to ratio * (their base right rates).

#pragma once

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gmol/analysis.hpp"
#include "gmol/scattering.hpp"

namespace gmol::sweep {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string key, const std::string& message)
        : std::runtime_error("config line " + std::to_string(line) + " (" +
                             key + "): " + message),
          line_number(line),
          key(std::move(key)) {}

    int line_number;
    std::string key;
};

class RangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scalar with optional "pi" suffix: "3", "-0.25pi", "2pi", "pi".
inline double parse_scalar(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty numeric value");
    double mult = 1.0;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        mult = std::numbers::pi;
        s.remove_suffix(2);
        if (s.empty()) return mult;  // bare "pi"
        if (s == "-") return -mult;
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed number '" + std::string(s) +
                                    "'");
    return v * mult;
}

enum class AxisName {
    delta,
    theta_l,
    theta_d,
    theta_both,
    g,
    tau_both,
    gamma_ratio_lr
};

inline std::string_view to_string(AxisName n) {
    switch (n) {
        case AxisName::delta: return "delta";
        case AxisName::theta_l: return "theta_l";
        case AxisName::theta_d: return "theta_d";
        case AxisName::theta_both: return "theta_both";
        case AxisName::g: return "g";
        case AxisName::tau_both: return "tau_both";
        case AxisName::gamma_ratio_lr: return "gamma_ratio_lr";
    }
    return "?";
}

inline std::optional<AxisName> axis_from_string(std::string_view s) {
    for (AxisName n :
         {AxisName::delta, AxisName::theta_l, AxisName::theta_d,
          AxisName::theta_both, AxisName::g, AxisName::tau_both,
          AxisName::gamma_ratio_lr})
        if (s == to_string(n)) return n;
    return std::nullopt;
}

struct Axis {
    AxisName name{};
    double start = 0.0;
    double stop = 0.0;
    int count = 0;

    double value(int i) const {
        return start + (stop - start) * double(i) / double(count - 1);
    }
};

struct SweepSpec {
    SystemParams base;
    double delta = 0.0;  // fixed detuning when no delta axis is declared
    std::vector<Axis> axes;
    bool port1 = true;
    bool port2 = true;
    bool contrasts = true;

    long total() const {
        long t = 1;
        for (const auto& a : axes) t *= a.count;
        return t;
    }
};

// One sweep row.  Field order matches the CSV header.
struct SpectrumRecord {
    double delta, theta_l, theta_d, g, tau_l, tau_d;
    double ratio_lambda, ratio_eta;  // Gamma_L / Gamma_R per atom
    double r_n, t_n, r_m, t_m;       // port-1 coefficients
    double rt_n, tt_n, rt_m, tt_m;   // port-2 (tilde) coefficients
    double i_n, i_m;                 // NaN when undefined or not requested
    double flux1, flux2;             // |sum - 1| per port; NaN on a pole row
};

inline constexpr std::string_view kCsvHeader =
    "delta,theta_l,theta_d,g,tau_l,tau_d,gLR_lambda,gLR_eta,"
    "R_N,T_N,R_M,T_M,Rt_N,Tt_N,Rt_M,Tt_M,I_N,I_M,flux1,flux2";

namespace detail {

inline void apply_axis(SystemParams& p, double& delta, AxisName name,
                       double v) {
    switch (name) {
        case AxisName::delta: delta = v; break;
        case AxisName::theta_l: p.theta_l = v; break;
        case AxisName::theta_d: p.theta_d = v; break;
        case AxisName::theta_both: p.theta_l = p.theta_d = v; break;
        case AxisName::g: p.g = v; break;
        case AxisName::tau_both: p.tau_l = p.tau_d = v; break;
        case AxisName::gamma_ratio_lr:
            p.gamma_lambda_l = v * p.gamma_lambda_r;
            p.gamma_eta_l = v * p.gamma_eta_r;
            break;
    }
}

inline SpectrumRecord evaluate_record(const SystemParams& p, double delta,
                                      bool port1, bool port2,
                                      bool contrasts) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SpectrumRecord r{};
    r.delta = delta;
    r.theta_l = p.theta_l;
    r.theta_d = p.theta_d;
    r.g = p.g;
    r.tau_l = p.tau_l;
    r.tau_d = p.tau_d;
    r.ratio_lambda = p.gamma_lambda_l / p.gamma_lambda_r;
    r.ratio_eta = p.gamma_eta_l / p.gamma_eta_r;
    r.r_n = r.t_n = r.r_m = r.t_m = nan;
    r.rt_n = r.tt_n = r.rt_m = r.tt_m = nan;
    r.i_n = r.i_m = nan;
    r.flux1 = r.flux2 = nan;
    try {
        if (port1) {
            const auto c = coefficients(amplitudes_port1(p, delta));
            r.r_n = c.r_near;
            r.t_n = c.t_far;
            r.r_m = c.r_same;
            r.t_m = c.t_same;
            r.flux1 = std::abs(c.sum() - 1.0);
        }
        if (port2) {
            const auto c = coefficients(amplitudes_port2(p, delta));
            r.rt_n = c.r_near;
            r.tt_n = c.t_far;
            r.rt_m = c.r_same;
            r.tt_m = c.t_same;
            r.flux2 = std::abs(c.sum() - 1.0);
        }
        if (contrasts && port1 && port2) {
            const auto cr = analysis::contrast_ratios(p, delta);
            if (cr.i_n) r.i_n = *cr.i_n;
            if (cr.i_m) r.i_m = *cr.i_m;
        }
    } catch (const PoleError&) {
        // recorded as a NaN row; the sweep carries on
    }
    return r;
}

inline int worker_count(long total) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = unsigned(v);
    }
    if (long(n) > total) n = unsigned(total > 0 ? total : 1);
    return int(n);
}

}  // namespace detail

// Full record (both ports, contrasts) at a single parameter point.
inline SpectrumRecord evaluate_point(const SystemParams& p, double delta) {
    return detail::evaluate_record(p, delta, true, true, true);
}

// Evaluates the whole grid.  Row order is the row-major order of the axes in
// declaration order, independent of how many workers execute the chunks.
inline std::vector<SpectrumRecord> run_sweep(const SweepSpec& spec) {
    const long total = spec.total();
    std::vector<SpectrumRecord> out(static_cast<std::size_t>(total));

    std::vector<long> strides(spec.axes.size(), 1);
    for (int a = int(spec.axes.size()) - 2; a >= 0; --a)
        strides[a] = strides[a + 1] * spec.axes[a + 1].count;

    const auto eval_index = [&](long idx) {
        SystemParams p = spec.base;
        double delta = spec.delta;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const int k = int((idx / strides[a]) % spec.axes[a].count);
            detail::apply_axis(p, delta, spec.axes[a].name,
                               spec.axes[a].value(k));
        }
        return detail::evaluate_record(p, delta, spec.port1, spec.port2,
                                       spec.contrasts);
    };

    const int workers = detail::worker_count(total);
    if (workers <= 1) {
        for (long i = 0; i < total; ++i) out[std::size_t(i)] = eval_index(i);
        return out;
    }
    const long chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        const long lo = w * chunk;
        const long hi = std::min(total, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            for (long i = lo; i < hi; ++i) out[std::size_t(i)] = eval_index(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

inline void run_sweep(const SweepSpec& spec,
                      const std::function<void(const SpectrumRecord&)>& sink) {
    for (const auto& r : run_sweep(spec)) sink(r);
}

// ---------------------------------------------------------------------------
// Config parsing

inline SweepSpec parse_config(std::string_view text) {
    SweepSpec spec;
    bool saw_outputs = false;
    int line_no = 0;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& key, const std::string& msg) {
        throw ParseError(line_no, key, msg);
    };
    const auto range_fail = [&](const std::string& key,
                                const std::string& msg) {
        throw RangeError("config line " + std::to_string(line_no) + " (" +
                         key + "): " + msg);
    };
    const auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t'))
            v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t' ||
                              v.back() == '\r'))
            v.remove_suffix(1);
        return v;
    };

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos
                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(std::string(line), "expected key=value");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) fail(key, "missing value");

        const auto scalar = [&]() {
            try {
                return parse_scalar(value);
            } catch (const std::invalid_argument& e) {
                fail(key, e.what());
            }
            return 0.0;  // unreachable
        };
        const auto nonneg = [&]() {
            const double v = scalar();
            if (v < 0.0) range_fail(key, "must be >= 0");
            return v;
        };

        if (key == "gamma_all") {
            const double v = nonneg();
            spec.base.gamma_lambda_r = spec.base.gamma_lambda_l = v;
            spec.base.gamma_eta_r = spec.base.gamma_eta_l = v;
        } else if (key == "gamma_lambda_r") {
            spec.base.gamma_lambda_r = nonneg();
        } else if (key == "gamma_lambda_l") {
            spec.base.gamma_lambda_l = nonneg();
        } else if (key == "gamma_eta_r") {
            spec.base.gamma_eta_r = nonneg();
        } else if (key == "gamma_eta_l") {
            spec.base.gamma_eta_l = nonneg();
        } else if (key == "g") {
            spec.base.g = nonneg();
        } else if (key == "theta_l") {
            spec.base.theta_l = scalar();
        } else if (key == "theta_d") {
            spec.base.theta_d = scalar();
        } else if (key == "theta_both") {
            spec.base.theta_l = spec.base.theta_d = scalar();
        } else if (key == "tau_l") {
            spec.base.tau_l = nonneg();
        } else if (key == "tau_d") {
            spec.base.tau_d = nonneg();
        } else if (key == "tau_both") {
            spec.base.tau_l = spec.base.tau_d = nonneg();
        } else if (key == "delta") {
            spec.delta = scalar();
        } else if (key == "ports") {
            spec.port1 = spec.port2 = false;
            if (value == "both" || value == "1,2" || value == "2,1") {
                spec.port1 = spec.port2 = true;
            } else if (value == "1") {
                spec.port1 = true;
            } else if (value == "2") {
                spec.port2 = true;
            } else {
                fail(key, "expected 1, 2, 1,2 or both");
            }
        } else if (key == "outputs") {
            saw_outputs = true;
            spec.contrasts = false;
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string_view item = trim(rest.substr(0, comma));
                rest = comma == std::string_view::npos
                           ? std::string_view{}
                           : rest.substr(comma + 1);
                if (item == "contrasts")
                    spec.contrasts = true;
                else if (item != "coefficients" && !item.empty())
                    fail(key, "unknown output '" + std::string(item) + "'");
            }
        } else if (key == "axis") {
            if (spec.axes.size() >= 3) fail(key, "at most 3 axes");
            Axis ax;
            std::string_view rest = value;
            std::array<std::string_view, 4> parts;
            for (int i = 0; i < 4; ++i) {
                const auto colon = rest.find(':');
                if (i < 3 && colon == std::string_view::npos)
                    fail(key, "expected name:start:stop:count");
                parts[std::size_t(i)] = trim(rest.substr(0, colon));
                rest = colon == std::string_view::npos
                           ? std::string_view{}
                           : rest.substr(colon + 1);
            }
            const auto name = axis_from_string(parts[0]);
            if (!name)
                fail(key, "unknown axis '" + std::string(parts[0]) + "'");
            ax.name = *name;
            for (const auto& existing : spec.axes)
                if (existing.name == ax.name)
                    fail(key, "duplicate axis '" + std::string(parts[0]) +
                                  "'");
            try {
                ax.start = parse_scalar(parts[1]);
                ax.stop = parse_scalar(parts[2]);
            } catch (const std::invalid_argument& e) {
                fail(key, e.what());
            }
            int count = 0;
            const auto [ptr, ec] = std::from_chars(
                parts[3].data(), parts[3].data() + parts[3].size(), count);
            if (ec != std::errc() || ptr != parts[3].data() + parts[3].size())
                fail(key, "malformed count");
            if (count < 2) range_fail(key, "axis count must be >= 2");
            if ((ax.name == AxisName::g || ax.name == AxisName::tau_both ||
                 ax.name == AxisName::gamma_ratio_lr) &&
                (ax.start < 0.0 || ax.stop < 0.0))
                range_fail(key, "axis values must be >= 0");
            ax.count = count;
            spec.axes.push_back(ax);
        } else {
            fail(key, "unknown key");
        }
    }

    if (spec.axes.empty())
        throw ParseError(line_no, "axis", "at least one axis is required");
    if (saw_outputs && spec.contrasts && !(spec.port1 && spec.port2))
        throw ParseError(line_no, "outputs",
                         "contrasts need both injection ports");
    if (!spec.port1 || !spec.port2) spec.contrasts = false;
    spec.base.validate();
    return spec;
}

// ---------------------------------------------------------------------------
// Emission

enum class Format { csv, json };

namespace detail {

inline void append_field(std::string& row, double v, bool first) {
    char buf[40];
    std::snprintf(buf, sizeof buf, first ? "%.17g" : ",%.17g", v);
    row += buf;
}

inline const std::array<double SpectrumRecord::*, 20>& record_fields() {
    static const std::array<double SpectrumRecord::*, 20> fields = {
        &SpectrumRecord::delta,   &SpectrumRecord::theta_l,
        &SpectrumRecord::theta_d, &SpectrumRecord::g,
        &SpectrumRecord::tau_l,   &SpectrumRecord::tau_d,
        &SpectrumRecord::ratio_lambda, &SpectrumRecord::ratio_eta,
        &SpectrumRecord::r_n,     &SpectrumRecord::t_n,
        &SpectrumRecord::r_m,     &SpectrumRecord::t_m,
        &SpectrumRecord::rt_n,    &SpectrumRecord::tt_n,
        &SpectrumRecord::rt_m,    &SpectrumRecord::tt_m,
        &SpectrumRecord::i_n,     &SpectrumRecord::i_m,
        &SpectrumRecord::flux1,   &SpectrumRecord::flux2};
    return fields;
}

}  // namespace detail

inline void emit_csv(std::span<const SpectrumRecord> records,
                     std::ostream& os) {
    os << kCsvHeader << '\n';
    std::string row;
    for (const auto& r : records) {
        row.clear();
        bool first = true;
        for (auto field : detail::record_fields()) {
            detail::append_field(row, r.*field, first);
            first = false;
        }
        row += '\n';
        os << row;
    }
    if (!os) throw std::ios_base::failure("emit_csv: stream write failed");
}

inline void emit_json(std::span<const SpectrumRecord> records,
                      std::ostream& os) {
    static constexpr std::array<std::string_view, 20> names = {
        "delta", "theta_l", "theta_d", "g", "tau_l", "tau_d", "gLR_lambda",
        "gLR_eta", "R_N", "T_N", "R_M", "T_M", "Rt_N", "Tt_N", "Rt_M",
        "Tt_M", "I_N", "I_M", "flux1", "flux2"};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        const auto& fields = detail::record_fields();
        for (std::size_t i = 0; i < names.size(); ++i)
            obj[std::string(names[i])] = r.*fields[i];
        arr.push_back(std::move(obj));
    }
    os << arr.dump(1) << '\n';  // NaN serializes as null
    if (!os) throw std::ios_base::failure("emit_json: stream write failed");
}

inline void emit(std::span<const SpectrumRecord> records, Format format,
                 std::ostream& os) {
    if (format == Format::csv)
        emit_csv(records, os);
    else
        emit_json(records, os);
}

}  // namespace gmol::sweep
