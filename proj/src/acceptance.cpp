#include "cavharm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cavharm/field_oracle.hpp"
#include "cavharm/report.hpp"

namespace cavharm::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

template <class Body>
CriterionResult timed(int id, std::string name, double budget, Body body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget_seconds = budget;
    const auto start = Clock::now();
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget > 0.0 && r.seconds >= budget) {
        r.pass = false;
        r.detail += (r.detail.empty() ? "" : "; ") + fmt("runtime budget of %g s exceeded", budget);
    }
    return r;
}

Coeff2 canon(Coeff2 c) {
    if (c[0] < 0 || (c[0] == 0 && c[1] < 0)) return {-c[0], -c[1]};
    return c;
}

HarmonicKey key_tx(Coeff2 t, Parity pt, Coeff2 x, Parity px) {
    HarmonicKey k;
    k.of(Coord::t) = t;
    k.parity[0] = pt;
    k.of(Coord::x) = x;
    k.parity[1] = px;
    return k;
}

// ---- table patterns --------------------------------------------------------

struct Cell {
    std::array<Coeff2, 3> spatial;
    std::vector<Coeff2> times;
    std::vector<Coeff2> resonant;
};

bool check_cells(const ResonanceReport& r, const std::vector<Cell>& cells, bool exhaustive, std::string& why) {
    const LabelStyle style = LabelStyle::for_pumps(r.pumps);
    for (const auto& cell : cells) {
        const std::array<Coeff2, 3> sp{canon(cell.spatial[0]), canon(cell.spatial[1]), canon(cell.spatial[2])};
        std::set<Coeff2> want, got;
        for (auto t : cell.times) want.insert(canon(t));
        std::set<Coeff2> res;
        for (auto t : cell.resonant) res.insert(canon(t));
        for (const auto& rec : r.records) {
            if (rec.spatial_key() != sp) continue;
            got.insert(rec.time_key());
            const bool is_res = rec.verdict == Verdict::Resonant;
            if (is_res != res.contains(rec.time_key())) {
                why = "cell " + style.wavenumbers(sp) + " @ " + style.frequency(rec.time_key()) + " is " +
                      to_string(rec.verdict);
                return false;
            }
        }
        if (got != want) {
            why = "column " + style.wavenumbers(sp) + " has a different frequency set";
            return false;
        }
    }
    if (exhaustive && r.rows.size() != cells.size()) {
        why = "expected " + std::to_string(cells.size()) + " wavenumber groups, got " + std::to_string(r.rows.size());
        return false;
    }
    return true;
}

std::vector<Cell> cells_single_1d() {
    return {{{{{1, 0}, {0, 0}, {0, 0}}}, {{1, 0}, {3, 0}}, {{1, 0}}},
            {{{{3, 0}, {0, 0}, {0, 0}}}, {{1, 0}}, {}}};
}

std::vector<Cell> cells_two_1d() {
    std::vector<Cell> out;
    // Rows for wavenumber n and the n <-> p mirror.
    for (int s = 0; s < 2; ++s) {
        auto sw = [s](Coeff2 c) { return s == 0 ? c : Coeff2{c[1], c[0]}; };
        auto x = [&](Coeff2 c) { return std::array<Coeff2, 3>{sw(c), Coeff2{0, 0}, Coeff2{0, 0}}; };
        out.push_back({x({1, 0}), {sw({1, 0}), sw({-1, 2}), sw({1, 2}), sw({3, 0})}, {sw({1, 0})}});
        out.push_back({x({3, 0}), {sw({1, 0})}, {}});
        out.push_back({x({2, -1}), {sw({0, 1}), sw({2, 1})}, {}});
        out.push_back({x({2, 1}), {sw({0, 1}), sw({2, -1})}, {}});
    }
    return out;
}

std::vector<Cell> cells_single_3d() {
    std::vector<Cell> out;
    for (int a : {1, 3})
        for (int b : {1, 3})
            for (int c : {1, 3}) {
                Cell cell{{{{a, 0}, {b, 0}, {c, 0}}}, {{1, 0}}, {}};
                if (a == 1 && b == 1 && c == 1) cell.resonant = {{1, 0}};
                if (!(a == 3 && b == 3 && c == 3)) cell.times.push_back({3, 0});
                out.push_back(cell);
            }
    return out;
}

// The columns printed in the two-pump 3D table; the elided ones are not
// individually checked.
std::vector<Cell> cells_two_3d_printed() {
    const Coeff2 one{1, 0};
    const std::vector<Coeff2> mixed{{-1, 2}, {1, 2}};
    const std::vector<Coeff2> combined_times{{1, 0}, {-1, 2}, {1, 2}};
    std::vector<Cell> out;
    out.push_back({{one, one, one}, {{1, 0}, {3, 0}, {-1, 2}, {1, 2}}, {{1, 0}}});
    out.push_back({{{{3, 0}, one, one}}, {{1, 0}, {3, 0}}, {}});
    out.push_back({{{one, {3, 0}, one}}, {{1, 0}, {3, 0}}, {}});
    out.push_back({{{{3, 0}, {3, 0}, {3, 0}}}, {{1, 0}}, {}});
    for (auto m : mixed) {
        out.push_back({{m, one, one}, combined_times, {}});
        out.push_back({{one, m, one}, combined_times, {}});
        out.push_back({{one, one, m}, combined_times, {}});
    }
    for (auto a : mixed)
        for (auto b : mixed)
            for (auto c : mixed) out.push_back({{a, b, c}, combined_times, {}});
    return out;
}

// ---- random configurations -------------------------------------------------

CavityGeometry random_geometry(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> len(0.3, 3.0);
    CavityGeometry g;
    g.lx = len(rng);
    g.ly = len(rng);
    g.lz = len(rng);
    return g;
}

ModeSpec random_3d_mode(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(0, 3);
    std::uniform_real_distribution<double> amp(0.5, 2.0);
    for (;;) {
        ModeSpec m = (rng() & 1) ? ModeSpec::te(idx(rng), idx(rng), idx(rng), amp(rng))
                                 : ModeSpec::tm(idx(rng), idx(rng), idx(rng), amp(rng));
        try {
            m.validate();
            return m;
        } catch (const InvalidMode&) {
        }
    }
}

bool parallel_indices(const ModeSpec& a, const ModeSpec& b) {
    const auto u = a.indices(), v = b.indices();
    return u[1] * v[2] == u[2] * v[1] && u[2] * v[0] == u[0] * v[2] && u[0] * v[1] == u[1] * v[0];
}

double l1(const TrigPoly& f) {
    double s = 0.0;
    for (const auto& [k, a] : f.terms()) s += std::abs(a);
    return s;
}

double l1(const VectorField& v) { return std::max({l1(v[0]), l1(v[1]), l1(v[2])}); }

}  // namespace

const std::vector<TableCase>& table_cases() {
    static const std::vector<TableCase> cases{
        {"table_single_1d.txt", "pi,10,10", {"1D:n=1"}, {kPi, 10, 10}, {ModeSpec::one_d(1)}},
        {"table_two_1d.txt", "pi,10,10", {"1D:n=1", "1D:n=2"}, {kPi, 10, 10},
         {ModeSpec::one_d(1), ModeSpec::one_d(2)}},
        {"table_single_3d.txt", "1,1.3,0.7", {"TM121"}, {1, 1.3, 0.7}, {ModeSpec::tm(1, 2, 1)}},
        {"table_two_3d.txt", "1,1.3,0.7", {"TM121", "TM213"}, {1, 1.3, 0.7},
         {ModeSpec::tm(1, 2, 1), ModeSpec::tm(2, 1, 3)}},
    };
    return cases;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CriterionResult source_coefficients() {
    return timed(1, "single 1D pump source coefficients", 1.0, [](std::string& detail) {
        const PhysicalConstants c{1.0, 7.0 / 4.0};
        const Coeff2 w{1, 0}, w3{3, 0};
        for (int n = 1; n <= 4; ++n) {
            const ModeSpec m = ModeSpec::one_d(n);
            const PumpConfiguration cfg = configure_pumps({kPi, 10, 10}, std::span(&m, 1));
            const WaveSources s = wave_rhs(cfg, c);
            const double omega = cfg.basis.omega[0];
            const double scale = 8.0 * c.kappa * omega * omega;

            const bool shape = s.e[0].empty() && s.e[2].empty() && s.b[0].empty() && s.b[1].empty() &&
                               s.e[1].size() == 3 && s.b[2].size() == 3;
            if (!shape) {
                detail = "n=" + std::to_string(n) + ": unexpected source components";
                return false;
            }
            const std::vector<std::pair<HarmonicKey, long>> ey{
                {key_tx(w, Parity::Sin, w, Parity::Sin), 2},
                {key_tx(w3, Parity::Sin, w, Parity::Sin), -3},
                {key_tx(w, Parity::Sin, w3, Parity::Sin), 1}};
            const std::vector<std::pair<HarmonicKey, long>> bz{
                {key_tx(w, Parity::Cos, w, Parity::Cos), 2},
                {key_tx(w3, Parity::Cos, w, Parity::Cos), -1},
                {key_tx(w, Parity::Cos, w3, Parity::Cos), 3}};
            auto matches = [&](const TrigPoly& f, const std::vector<std::pair<HarmonicKey, long>>& want) {
                for (const auto& st : snap_terms(f, scale)) {
                    auto it = std::find_if(want.begin(), want.end(), [&](auto& p) { return p.first == st.key; });
                    if (it == want.end() || st.ratio != Rational{it->second, 1}) return false;
                }
                return true;
            };
            if (!matches(s.e[1], ey) || !matches(s.b[2], bz)) {
                detail = "n=" + std::to_string(n) + ": coefficients differ from (2,-3,1) / (2,-1,3)";
                return false;
            }
        }
        detail = "n=1..4: E_y (2,-3,1), B_z (2,-1,3) x 8 kappa F0^3 w^2, no residual terms";
        return true;
    });
}

CriterionResult table_regressions(const std::string& golden_dir) {
    return timed(2, "resonance table regressions", 10.0, [&](std::string& detail) {
        const PhysicalConstants c;
        const std::array<std::pair<std::vector<Cell>, bool>, 4> patterns{
            {{cells_single_1d(), true}, {cells_two_1d(), true}, {cells_single_3d(), true},
             {cells_two_3d_printed(), false}}};
        for (std::size_t i = 0; i < table_cases().size(); ++i) {
            const auto& tc = table_cases()[i];
            const ResonanceReport rep = analyze(tc.g, tc.modes, c);
            std::string why;
            if (!check_cells(rep, patterns[i].first, patterns[i].second, why)) {
                detail = tc.file + ": " + why;
                return false;
            }
            if (render_table(rep) != read_file(golden_dir + "/" + tc.file)) {
                detail = tc.file + ": rendering differs from the golden file";
                return false;
            }
        }
        detail = "4 tables: cell patterns and golden renderings match";
        return true;
    });
}

CriterionResult third_harmonic_exclusion(std::uint64_t seed) {
    return timed(3, "third-harmonic exclusion", 60.0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> n1d(1, 4);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        const PhysicalConstants c;
        std::size_t checked = 0;
        for (int run = 0; run < 200; ++run) {
            const CavityGeometry g = random_geometry(rng);
            const ModeSpec m = run % 2 == 0 ? ModeSpec::one_d(n1d(rng), angle(rng)) : random_3d_mode(rng);
            const ResonanceReport rep = analyze(g, std::span(&m, 1), c);
            bool pump_resonant = false;
            for (const auto& rec : rep.records) {
                if (rec.time_key() == Coeff2{3, 0}) {
                    ++checked;
                    if (rec.verdict == Verdict::Resonant) {
                        detail = "run " + std::to_string(run) + " (" + m.label() + "): 3w term resonant";
                        return false;
                    }
                }
                if (rec.verdict == Verdict::Resonant && rec.self_resonance) pump_resonant = true;
            }
            if (!pump_resonant) {
                detail = "run " + std::to_string(run) + " (" + m.label() + "): pump cell not resonant";
                return false;
            }
        }
        detail = "200 runs, " + std::to_string(checked) + " 3w terms, none resonant";
        return true;
    });
}

CriterionResult plus_mode_exclusion(std::uint64_t seed) {
    return timed(4, "plus-mode exclusion", 120.0, [seed](std::string& detail) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        const PhysicalConstants c;
        std::size_t checked = 0;
        for (int run = 0; run < 200; ++run) {
            const CavityGeometry g = random_geometry(rng);
            const std::vector<ModeSpec> pumps{random_3d_mode(rng), random_3d_mode(rng)};
            const ResonanceReport rep = analyze(g, pumps, c);
            for (const auto& rec : rep.records) {
                const Coeff2 t = rec.time_key();
                if (t == Coeff2{2, 1} || t == Coeff2{1, 2}) {
                    ++checked;
                    if (rec.verdict == Verdict::Resonant) {
                        detail = "run " + std::to_string(run) + " (" + pumps[0].label() + "+" + pumps[1].label() +
                                 "): plus-mode term resonant";
                        return false;
                    }
                }
            }
        }

        std::uniform_int_distribution<int> idx(0, 6);
        int pairs = 0;
        double min_gap = 1.0;
        while (pairs < 10000) {
            const CavityGeometry g = random_geometry(rng);
            const ModeSpec a = ModeSpec::te(idx(rng), idx(rng), idx(rng));
            const ModeSpec b = ModeSpec::te(idx(rng), idx(rng), idx(rng));
            if (a.indices() == std::array<int, 3>{} || b.indices() == std::array<int, 3>{} ||
                parallel_indices(a, b)) {
                continue;
            }
            const TriangleRecord t = triangle_exclusion(wavevector(g, a.n, a.p, a.q), wavevector(g, b.n, b.p, b.q));
            if (!t.strict || t.parallel) {
                detail = "non-strict triangle inequality for " + a.label() + ", " + b.label();
                return false;
            }
            min_gap = std::min(min_gap, (t.lhs - t.rhs) / t.lhs);
            ++pairs;
        }
        detail = "200 runs, " + std::to_string(checked) + " 2wi+wj terms, none resonant; 10^4 pairs strict" +
                 fmt(" (min relative gap %.3g)", min_gap);
        return true;
    });
}

CriterionResult resonant_geometry() {
    return timed(5, "resonant geometry root", 5.0, [](std::string& detail) {
        const ModeSpec te = ModeSpec::te(0, 1, 1), tm = ModeSpec::tm(1, 1, 0);
        const GeometryConstraint lxly;
        const auto roots = solve_geometry(te, tm, {1, 3, 0}, CombinationSign::Minus, lxly);
        if (roots.size() != 1) {
            detail = "expected one root for signal 130, got " + std::to_string(roots.size());
            return false;
        }
        const double r = roots[0].ratio;
        const double err = std::abs(r - std::sqrt(std::sqrt(5.0) - 2.0));
        const auto& g = roots[0].geometry;
        const double a = g.lz / g.lx, b = g.lz / g.ly;
        const double cond = std::abs(a * a * b * b + a * a + 3.0 * b * b - 1.0);
        const auto none = solve_geometry(te, tm, {1, 3, 2}, CombinationSign::Minus, lxly);
        detail = fmt("r=%.15g", r) + fmt(" |r-sqrt(sqrt5-2)|=%.2g", err) + fmt(" condition residual %.2g", cond) +
                 "; signal 132 roots: " + std::to_string(none.size());
        return err <= 1e-10 && cond <= 1e-9 && none.empty();
    });
}

CriterionResult pointwise_sources(std::uint64_t seed) {
    return timed(6, "symbolic vs pointwise sources", 10.0, [seed](std::string& detail) {
        struct Config {
            CavityGeometry g;
            std::vector<ModeSpec> pumps;
        };
        const std::vector<Config> configs{
            {{2.1, 1, 1}, {ModeSpec::one_d(2, 0.7, 1.3), ModeSpec::one_d(3, -0.4)}},
            {{1, 1, std::sqrt(std::sqrt(5.0) - 2.0)}, {ModeSpec::te(0, 1, 1), ModeSpec::tm(1, 1, 0)}},
            {{1, 1.3, 0.7}, {ModeSpec::tm(1, 2, 1, 0.8), ModeSpec::te(2, 1, 3)}},
        };
        const PhysicalConstants c{1.0, 7.0 / 4.0};
        std::mt19937_64 rng(seed + 6);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = 0.0;
        const int points_per_config = 1000;
        for (const auto& cfgspec : configs) {
            const PumpConfiguration cfg = configure_pumps(cfgspec.g, cfgspec.pumps);
            const PolarizationMagnetization pm = polarization_magnetization(cfg.total, c);
            const WaveSources s = wave_rhs(pm, cfg.basis);
            const std::array<const VectorField*, 4> sym{&pm.p, &pm.m, &s.e, &s.b};
            std::array<double, 4> scale{};
            for (int q = 0; q < 4; ++q) scale[q] = l1(*sym[q]);
            for (int i = 0; i < points_per_config; ++i) {
                const SpacetimePoint pt{10.0 * unit(rng), cfgspec.g.lx * unit(rng), cfgspec.g.ly * unit(rng),
                                        cfgspec.g.lz * unit(rng)};
                const oracle::Sample ref = oracle::evaluate(cfgspec.g, cfgspec.pumps, c, {pt.t, pt.x, pt.y, pt.z});
                const std::array<const oracle::Vec3*, 4> num{&ref.p, &ref.m, &ref.se, &ref.sb};
                for (int q = 0; q < 4; ++q) {
                    const auto v = eval_at(*sym[q], cfg.basis, pt);
                    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(v[k] - (*num[q])[k]) / scale[q]);
                }
            }
        }
        detail = "3 configurations x 1000 points, max scale-normalized deviation " + fmt("%.2g", worst);
        return worst <= 1e-12;
    });
}

CriterionResult modal_dynamics() {
    return timed(7, "modal dynamics", 60.0, [](std::string& detail) {
        const double w = kPi, f = 1.0;
        bool ok = true;

        // Secular growth under resonant drive.
        const SimulationConfig res = SimulationConfig::resolved({w, f, 0.0}, w, 0.0, 200.0);
        const LinearFit fit = growth_fit(extract_envelope(evolve_mode(res), 2.0 * kPi / w));
        const double slope_dev = std::abs(fit.slope / resonant_growth_slope(f, w) - 1.0);
        ok = ok && slope_dev <= 0.01;

        // Saturation under damping.
        const std::vector<double> gammas{0.01 * w, 0.02 * w, 0.05 * w, 0.1 * w};
        const SweepResult sweep = saturation_sweep(SimulationConfig::resolved({w, f, 0.0}, w, 0.0, 50.0), gammas);
        double steady_dev = 0.0;
        for (const auto& row : sweep.rows) steady_dev = std::max(steady_dev, std::abs(row.amplitude * row.gamma * w / f - 1.0));
        ok = ok && std::abs(sweep.exponent + 1.0) <= 0.02 && steady_dev <= 0.01;

        // Third-harmonic drive: bounded, no secular growth.
        const SimulationConfig off = SimulationConfig::resolved({3.0 * w, f, 0.0}, w, 0.0, 200.0);
        const Envelope off_env = extract_envelope(evolve_mode(off), 2.0 * kPi / w);
        const double bound = off_resonance_bound(f, 3.0 * w, w);
        const double off_max = *std::max_element(off_env.amp.begin(), off_env.amp.end());
        const LinearFit off_fit = growth_fit(off_env);
        const double drift = std::abs(off_fit.slope) * off.duration / bound;
        const SimulationConfig damped = SimulationConfig::resolved({3.0 * w, f, 0.0}, w, 0.05 * w, 50.0);
        SimulationConfig damped_long = damped;
        damped_long.duration = std::max(damped.duration, 30.0 / damped.gamma);
        const double off_steady = steady_amplitude(extract_envelope(evolve_mode(damped_long), 2.0 * kPi / (3.0 * w)));
        const double steady_bound = f / std::abs(9.0 * w * w - w * w);
        ok = ok && off_max <= bound * (1.0 + 1e-3) && drift <= 0.05 && off_steady <= steady_bound * (1.0 + 1e-3);

        detail = fmt("growth slope deviation %.2g", slope_dev) + fmt(", exponent %.4f", sweep.exponent) +
                 fmt(", steady deviation %.2g", steady_dev) + fmt(", 3w max/bound %.3f", off_max / bound) +
                 fmt(", damped 3w steady/bound %.3f", off_steady / steady_bound);
        return ok;
    });
}

CriterionResult null_couplings() {
    return timed(8, "null couplings", 0.0, [](std::string& detail) {
        const PhysicalConstants zero{0.0, 7.0 / 4.0};
        const PhysicalConstants c;
        const std::vector<std::pair<CavityGeometry, std::vector<ModeSpec>>> zero_cases{
            {{kPi, 10, 10}, {ModeSpec::one_d(1)}},
            {{1, 1, std::sqrt(std::sqrt(5.0) - 2.0)}, {ModeSpec::te(0, 1, 1), ModeSpec::tm(1, 1, 0)}}};
        for (const auto& [g, pumps] : zero_cases) {
            const PumpConfiguration cfg = configure_pumps(g, pumps);
            if (!wave_rhs(cfg, zero).empty()) {
                detail = "kappa=0 sources not empty";
                return false;
            }
            const SpectrumSummary s = end_to_end(g, pumps, zero, {});
            if (s.accumulating() != 0 || !s.entries.empty()) {
                detail = "kappa=0 spectrum accumulates";
                return false;
            }
        }

        const std::vector<std::pair<CavityGeometry, std::vector<ModeSpec>>> parallel{
            {{kPi, 10, 10}, {ModeSpec::one_d(1), ModeSpec::one_d(3)}},
            {{kPi, 10, 10}, {ModeSpec::one_d(2, 0.3), ModeSpec::one_d(5, 1.1)}},
            {{1, 1.3, 0.7}, {ModeSpec::te(0, 1, 1), ModeSpec::te(0, 2, 2)}},
            {{1, 1.3, 0.7}, {ModeSpec::tm(1, 1, 0), ModeSpec::tm(2, 2, 0)}},
            {{1, 1.3, 0.7}, {ModeSpec::tm(1, 1, 1), ModeSpec::te(2, 2, 2)}},
        };
        std::size_t checked = 0;
        for (const auto& [g, pumps] : parallel) {
            const ResonanceReport rep = analyze(g, pumps, c);
            for (Coeff2 t : {Coeff2{2, 1}, Coeff2{2, -1}, Coeff2{1, 2}, Coeff2{-1, 2}}) {
                std::array<Coeff2, 4> lattice{canon(t)};
                for (int axis = 0; axis < 3; ++axis) {
                    const bool active = pumps[0].indices()[axis] != 0;
                    lattice[axis + 1] = active ? canon(t) : Coeff2{0, 0};
                }
                ++checked;
                const SourceTermRecord* rec = rep.find(lattice);
                if (rec && rec->verdict != Verdict::VanishingAmplitude) {
                    detail = pumps[0].label() + "+" + pumps[1].label() + ": combined term " +
                             format_combo(t, {{"w1", "w2"}}) + " survives along the pump direction";
                    return false;
                }
            }
        }
        detail = "kappa=0: empty sources, no accumulation; " + std::to_string(checked) +
                 " parallel combined-frequency cells vanish";
        return true;
    });
}

std::vector<CriterionResult> run_all(const Options& opts, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    auto add = [&](CriterionResult r) {
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    };
    add(source_coefficients());
    add(table_regressions(opts.golden_dir));
    add(third_harmonic_exclusion(opts.seed));
    add(plus_mode_exclusion(opts.seed));
    add(resonant_geometry());
    add(pointwise_sources(opts.seed));
    add(modal_dynamics());
    add(null_couplings());
    return out;
}

std::string format(const CriterionResult& r) {
    char timing[64];
    if (r.budget_seconds > 0.0) {
        std::snprintf(timing, sizeof timing, "(%.2f s / %g s)", r.seconds, r.budget_seconds);
    } else {
        std::snprintf(timing, sizeof timing, "(%.2f s)", r.seconds);
    }
    return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + " " + r.name + "  " + timing +
           "  " + r.detail;
}

}  // namespace cavharm::acceptance
