#include "cavharm/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace cavharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double envelope_period(double omega_d, double omega_r) {
    return kTwoPi / (omega_d > 0.0 ? omega_d : omega_r);
}

}  // namespace

double SimulationConfig::max_dt() const {
    const double w = std::max(drive.omega, omega_r);
    return w > 0.0 ? kTwoPi / w / 40.0 : std::numeric_limits<double>::infinity();
}

void SimulationConfig::validate() const {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("damping must be >= 0");
    if (!(duration > 0.0) || !std::isfinite(duration)) throw std::invalid_argument("duration must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!(omega_r >= 0.0) || !(drive.omega >= 0.0)) throw std::invalid_argument("frequencies must be >= 0");
    if (dt > max_dt() * (1.0 + 1e-12)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "time step %.6g exceeds 1/40 of the shortest period (%.6g)", dt, max_dt());
        throw std::invalid_argument(buf);
    }
}

SimulationConfig SimulationConfig::resolved(Drive drive, double omega_r, double gamma, double periods,
                                            int steps_per_period) {
    SimulationConfig cfg;
    cfg.drive = drive;
    cfg.omega_r = omega_r;
    cfg.gamma = gamma;
    const double w_max = std::max(drive.omega, omega_r);
    double w_min = std::min(drive.omega, omega_r);
    if (!(w_min > 0.0)) w_min = w_max;
    cfg.dt = kTwoPi / w_max / std::max(steps_per_period, 40);
    cfg.duration = periods * kTwoPi / w_min;
    return cfg;
}

void TimeSeries::write_columns(std::ostream& os) const {
    char buf[96];
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.15g %.15g\n", t[i], q[i]);
        os << buf;
    }
}

TimeSeries evolve_mode(const SimulationConfig& cfg) {
    cfg.validate();
    const double w2 = cfg.omega_r * cfg.omega_r;
    const double g = cfg.gamma;
    const double f = cfg.drive.amplitude;
    const double wd = cfg.drive.omega;
    const double ph = cfg.drive.phase;
    auto accel = [&](double t, double q, double v) { return f * std::cos(wd * t + ph) - g * v - w2 * q; };

    const auto steps = static_cast<std::size_t>(std::llround(cfg.duration / cfg.dt));
    TimeSeries s;
    s.t.reserve(steps + 1);
    s.q.reserve(steps + 1);
    s.v.reserve(steps + 1);

    double q = cfg.q0, v = cfg.v0;
    const double sqrt_e0 = std::sqrt(0.5 * v * v + 0.5 * w2 * q * q);
    s.t.push_back(0.0);
    s.q.push_back(q);
    s.v.push_back(v);

    const double h = cfg.dt;
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * h;
        const double k1q = v;
        const double k1v = accel(t, q, v);
        const double k2q = v + 0.5 * h * k1v;
        const double k2v = accel(t + 0.5 * h, q + 0.5 * h * k1q, k2q);
        const double k3q = v + 0.5 * h * k2v;
        const double k3v = accel(t + 0.5 * h, q + 0.5 * h * k2q, k3q);
        const double k4q = v + h * k3v;
        const double k4v = accel(t + h, q + h * k3q, k4q);
        q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

        const double tn = static_cast<double>(i + 1) * h;
        const double sqrt_e = std::sqrt(0.5 * v * v + 0.5 * w2 * q * q);
        const double bound = (sqrt_e0 + std::abs(f) * tn / std::sqrt(2.0)) * 1.001 + 1e-300;
        if (!std::isfinite(sqrt_e) || sqrt_e > bound) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "unstable integration at t=%.6g: energy blowup, use a smaller dt", tn);
            throw UnstableStep(buf);
        }
        s.t.push_back(tn);
        s.q.push_back(q);
        s.v.push_back(v);
    }
    return s;
}

std::vector<double> oscillator_energy(const TimeSeries& s, double omega_r) {
    std::vector<double> e(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        e[i] = 0.5 * s.v[i] * s.v[i] + 0.5 * omega_r * omega_r * s.q[i] * s.q[i];
    }
    return e;
}

Envelope extract_envelope(const TimeSeries& s, double period) {
    Envelope env;
    if (s.size() < 3 || !(period > 0.0)) return env;
    const double h = s.t[1] - s.t[0];
    std::size_t begin = 0;
    for (int w = 1;; ++w) {
        const double t_end = w * period;
        if (t_end > s.t.back()) break;
        std::size_t end = begin;
        while (end < s.size() && s.t[end] < t_end) ++end;
        std::size_t best = begin;
        for (std::size_t i = begin; i < end; ++i) {
            if (std::abs(s.q[i]) > std::abs(s.q[best])) best = i;
        }
        double amp = std::abs(s.q[best]);
        double t_peak = s.t[best];
        if (best > 0 && best + 1 < s.size()) {
            const double ym = std::abs(s.q[best - 1]);
            const double y0 = amp;
            const double yp = std::abs(s.q[best + 1]);
            const double denom = ym - 2.0 * y0 + yp;
            if (denom < 0.0) {
                const double d = 0.5 * (ym - yp) / denom;
                if (std::abs(d) <= 1.0) {
                    amp = y0 - 0.25 * (ym - yp) * d;
                    t_peak += d * h;
                }
            }
        }
        env.t.push_back(t_peak);
        env.amp.push_back(amp);
        begin = end;
    }
    return env;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    LinearFit fit;
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2) return fit;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) return fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

LinearFit growth_fit(const Envelope& env) {
    const std::size_t half = env.t.size() / 2;
    return fit_line(std::span(env.t).subspan(half), std::span(env.amp).subspan(half));
}

double steady_amplitude(const Envelope& env) {
    constexpr std::size_t kRun = 10;
    const auto& a = env.amp;
    if (a.size() < kRun + 1) throw SteadyStateNotReached("run too short to detect a steady state");
    const std::size_t first = a.size() - kRun - 1;
    double sum = a[first];
    for (std::size_t i = first + 1; i < a.size(); ++i) {
        const double ref = std::max(std::abs(a[i - 1]), 1e-300);
        if (std::abs(a[i] - a[i - 1]) / ref >= 1e-4) {
            throw SteadyStateNotReached("per-period amplitude still changing; increase the duration");
        }
        sum += a[i];
    }
    return sum / static_cast<double>(kRun + 1);
}

double resonant_growth_slope(double f, double omega_r) { return f / (2.0 * omega_r); }

double steady_response(double f, double omega_d, double omega_r, double gamma) {
    const double d = omega_r * omega_r - omega_d * omega_d;
    return f / std::sqrt(d * d + gamma * gamma * omega_d * omega_d);
}

double off_resonance_bound(double f, double omega_d, double omega_r, double phase) {
    // q = f/D [cos(wd t + ph) - cos ph cos(wr t) + (wd/wr) sin ph sin(wr t)]
    const double c = std::cos(phase), s = std::sin(phase) * omega_d / omega_r;
    return f * (1.0 + std::sqrt(c * c + s * s)) / std::abs(omega_r * omega_r - omega_d * omega_d);
}

SweepResult saturation_sweep(const SimulationConfig& base, std::span<const double> gammas) {
    SweepResult out;
    std::vector<double> lx, ly;
    for (double g : gammas) {
        if (!(g > 0.0)) throw std::invalid_argument("saturation sweep needs positive damping values");
        SimulationConfig cfg = base;
        cfg.gamma = g;
        cfg.duration = std::max(base.duration, 30.0 / g);
        const TimeSeries s = evolve_mode(cfg);
        const Envelope env = extract_envelope(s, envelope_period(cfg.drive.omega, cfg.omega_r));
        const double amp = cfg.drive.amplitude == 0.0 ? 0.0 : steady_amplitude(env);
        out.rows.push_back({g, amp, steady_response(cfg.drive.amplitude, cfg.drive.omega, cfg.omega_r, g)});
        if (amp > 0.0) {
            lx.push_back(std::log(g));
            ly.push_back(std::log(amp));
        }
    }
    if (lx.size() >= 2) out.exponent = fit_line(lx, ly).slope;
    return out;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Growing: return "growing";
        case Regime::Saturated: return "saturated";
        case Regime::Bounded: return "bounded";
        case Regime::Static: return "static";
    }
    return "?";
}

std::size_t SpectrumSummary::accumulating() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const auto& e) { return e.accumulates(); }));
}

SimulationConfig modal_config(const SourceTermRecord& rec, const ModalRunConfig& run) {
    Drive d;
    d.omega = rec.omega;
    d.amplitude = rec.amplitude;
    // Phase of the dominant component.
    const ComponentAmplitude* dom = nullptr;
    for (const auto& c : rec.components) {
        if (!dom || std::abs(c.amplitude) > std::abs(dom->amplitude)) dom = &c;
    }
    if (dom && dom->key.parity_of(Coord::t) == Parity::Sin) d.phase = -0.5 * std::numbers::pi;
    SimulationConfig cfg = SimulationConfig::resolved(d, rec.k_norm(), run.gamma, run.periods, run.steps_per_period);
    if (run.gamma > 0.0) cfg.duration = std::max(cfg.duration, 30.0 / run.gamma);
    return cfg;
}

SpectrumEntry simulate_record(const SourceTermRecord& rec, const ModalRunConfig& run) {
    SpectrumEntry e;
    e.lattice = rec.lattice;
    e.verdict = rec.verdict;
    e.self_resonance = rec.self_resonance;
    e.omega_drive = rec.omega;
    e.omega_r = rec.k_norm();
    e.drive_amplitude = rec.amplitude;

    const double tiny = 1e-12 * std::max(e.omega_drive, e.omega_r);
    if (e.omega_r <= tiny || e.omega_drive <= tiny) {
        e.regime = Regime::Static;
        return e;
    }
    if (e.drive_amplitude == 0.0) {
        e.regime = Regime::Bounded;
        return e;
    }

    const SimulationConfig cfg = modal_config(rec, run);
    const TimeSeries s = evolve_mode(cfg);
    const Envelope env = extract_envelope(s, envelope_period(cfg.drive.omega, cfg.omega_r));
    for (double a : env.amp) e.envelope_max = std::max(e.envelope_max, a);
    const double f = e.drive_amplitude;

    if (run.gamma == 0.0) {
        const LinearFit fit = growth_fit(env);
        e.slope = fit.slope;
        e.r2 = fit.r2;
        const bool grows = !env.amp.empty() && fit.slope > 0.0 && fit.r2 >= 0.99 &&
                           env.amp.back() >= 10.0 * env.amp.front();
        if (grows) {
            e.regime = Regime::Growing;
            e.oracle = resonant_growth_slope(f, e.omega_r);
            e.oracle_deviation = std::abs(fit.slope / e.oracle - 1.0);
        } else {
            e.regime = Regime::Bounded;
            e.oracle = off_resonance_bound(f, e.omega_drive, e.omega_r, cfg.drive.phase);
            e.oracle_deviation = e.envelope_max / e.oracle;
        }
        return e;
    }

    e.steady = steady_amplitude(env);
    e.oracle = steady_response(f, e.omega_drive, e.omega_r, run.gamma);
    e.oracle_deviation = std::abs(e.steady / e.oracle - 1.0);
    e.regime = e.steady >= 0.5 * f / (run.gamma * e.omega_r) ? Regime::Saturated : Regime::Bounded;
    return e;
}

SpectrumSummary end_to_end(const ResonanceReport& report, const ModalRunConfig& run) {
    SpectrumSummary out;
    out.entries.reserve(report.records.size());
    for (const auto& rec : report.records) out.entries.push_back(simulate_record(rec, run));
    return out;
}

SpectrumSummary end_to_end(const CavityGeometry& g, std::span<const ModeSpec> pumps,
                           const PhysicalConstants& c, const ModalRunConfig& run) {
    return end_to_end(analyze(g, pumps, c), run);
}

}  // namespace cavharm
