// Modal dynamics: each trig source term drives exactly one cavity
// eigenprofile, so the signal PDE reduces to independent oscillators
//   q'' + G q' + w_r^2 q = f cos(w_d t + phase).
#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavharm/resonance.hpp"

namespace cavharm {

class UnstableStep : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SteadyStateNotReached : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Drive {
    double omega = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;  // cos(w t + phase); -pi/2 gives a sin drive
};

struct SimulationConfig {
    double gamma = 0.0;
    double duration = 0.0;
    double dt = 0.0;
    Drive drive;
    double omega_r = 0.0;
    double q0 = 0.0;
    double v0 = 0.0;

    /// Largest step allowed: one fortieth of the shortest period involved.
    [[nodiscard]] double max_dt() const;
    /// Throws std::invalid_argument for negative damping, non-positive
    /// duration or step, or a step above max_dt().
    void validate() const;

    /// Config with dt set to `steps_per_period` steps of the shortest period
    /// and duration to `periods` periods of the longer of drive/response.
    static SimulationConfig resolved(Drive drive, double omega_r, double gamma, double periods,
                                     int steps_per_period = 64);
};

struct TimeSeries {
    std::vector<double> t;
    std::vector<double> q;
    std::vector<double> v;

    [[nodiscard]] std::size_t size() const { return t.size(); }
    /// Columnar "t q" text, 15 significant digits.
    void write_columns(std::ostream& os) const;
};

/// Classical fourth-order Runge-Kutta from (q0, v0). Throws UnstableStep if
/// the oscillator energy exceeds the bound a drive of this strength can
/// supply (sqrt(E) <= sqrt(E0) + f t / sqrt(2)).
[[nodiscard]] TimeSeries evolve_mode(const SimulationConfig& cfg);

/// Energy q'^2/2 + w^2 q^2/2 at every sample.
[[nodiscard]] std::vector<double> oscillator_energy(const TimeSeries& s, double omega_r);

struct Envelope {
    std::vector<double> t;    // time of the peak in each period
    std::vector<double> amp;  // max |q| in each period, parabolically refined
};

/// Per-period maxima of |q| over consecutive windows of length `period`.
[[nodiscard]] Envelope extract_envelope(const TimeSeries& s, double period);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

[[nodiscard]] LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least-squares envelope slope over the last half of the run.
[[nodiscard]] LinearFit growth_fit(const Envelope& env);

/// Steady amplitude: the last 10 consecutive periods must each change the
/// per-period amplitude by less than 1e-4 relative; returns their mean. Throws
/// SteadyStateNotReached otherwise.
[[nodiscard]] double steady_amplitude(const Envelope& env);

// ---- analytic references (closed-form driven oscillator) ---------------

/// f / (2 w): secular envelope slope of an undamped resonant drive.
[[nodiscard]] double resonant_growth_slope(double f, double omega_r);
/// f / sqrt((w_r^2 - w_d^2)^2 + G^2 w_d^2).
[[nodiscard]] double steady_response(double f, double omega_d, double omega_r, double gamma);
/// Largest |q| of an undamped off-resonant drive f cos(w_d t + phase) from
/// rest: f / |w_r^2 - w_d^2| (1 + sqrt(cos^2 phase + (w_d/w_r)^2 sin^2 phase)),
/// i.e. 2 f / |w_r^2 - w_d^2| for a cos drive.
[[nodiscard]] double off_resonance_bound(double f, double omega_d, double omega_r, double phase = 0.0);

// ---- sweeps ---------------------------------------------------------------

struct SweepRow {
    double gamma = 0.0;
    double amplitude = 0.0;
    double analytic = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double exponent = 0.0;  // amplitude ~ gamma^exponent
};

/// Runs `base` once per damping value, each for max(base.duration, 30/G),
/// and fits log amplitude vs log G. Throws std::invalid_argument for G <= 0.
[[nodiscard]] SweepResult saturation_sweep(const SimulationConfig& base, std::span<const double> gammas);

// ---- end to end -----------------------------------------------------------

enum class Regime {
    Growing,    // linear envelope growth, G = 0
    Saturated,  // steady amplitude within a factor 2 of f / (G w_r)
    Bounded,
    Static,     // no oscillatory profile (k = 0) or no drive frequency
};

[[nodiscard]] const char* to_string(Regime r);

struct ModalRunConfig {
    double gamma = 0.0;
    double periods = 400.0;
    int steps_per_period = 64;
};

struct SpectrumEntry {
    std::array<Coeff2, 4> lattice{};
    Verdict verdict = Verdict::NonResonant;
    bool self_resonance = false;
    double omega_drive = 0.0;
    double omega_r = 0.0;
    double drive_amplitude = 0.0;
    Regime regime = Regime::Bounded;
    double slope = 0.0;       // G = 0 runs
    double r2 = 0.0;
    double envelope_max = 0.0;
    double steady = 0.0;      // G > 0 runs
    double oracle = 0.0;      // analytic slope, steady amplitude or bound
    double oracle_deviation = 0.0;  // relative for growth/steady, ratio to bound otherwise

    [[nodiscard]] bool accumulates() const { return regime == Regime::Growing || regime == Regime::Saturated; }
};

struct SpectrumSummary {
    std::vector<SpectrumEntry> entries;  // report order
    [[nodiscard]] std::size_t accumulating() const;
};

/// Drive and response frequency for one classified record.
[[nodiscard]] SimulationConfig modal_config(const SourceTermRecord& rec, const ModalRunConfig& run);

[[nodiscard]] SpectrumEntry simulate_record(const SourceTermRecord& rec, const ModalRunConfig& run);

[[nodiscard]] SpectrumSummary end_to_end(const ResonanceReport& report, const ModalRunConfig& run);
[[nodiscard]] SpectrumSummary end_to_end(const CavityGeometry& g, std::span<const ModeSpec> pumps,
                                         const PhysicalConstants& c, const ModalRunConfig& run);

}  // namespace cavharm
