#include "cavharm/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace cavharm {

namespace {

// Boundary-condition sin/cos pattern (x, y, z) of each field component of a
// perfect-conductor cavity eigenmode.
Parity expected_parity(FieldKind f, int component, int axis) {
    const bool diagonal = component == axis;
    if (f == FieldKind::E) return diagonal ? Parity::Cos : Parity::Sin;
    return diagonal ? Parity::Sin : Parity::Cos;
}

double max_base_rate(const LatticeBasis& b) {
    double m = 0.0;
    for (int s = 0; s < 2; ++s) {
        m = std::max(m, std::abs(b.omega[s]));
        for (double v : b.k[s]) m = std::max(m, std::abs(v));
    }
    return m;
}

// Same frequency and same cavity mode indices as one of the pumps. Numeric,
// so coincident lattice points (e.g. 2p2-p1 = p1 when p1 = p2) count too.
bool is_self_resonance(const SourceTermRecord& rec, const LatticeBasis& basis,
                       const std::array<double, 3>& lengths) {
    for (int s = 0; s < 2; ++s) {
        if (!basis.slot_used(s)) continue;
        if (std::abs(rec.omega - basis.omega[s]) > 1e-9 * basis.omega[s]) continue;
        bool match = true;
        for (int axis = 0; axis < 3; ++axis) {
            const int idx = static_cast<int>(std::lround(basis.k[s][axis] * lengths[axis] / std::numbers::pi));
            if (idx != rec.mode_indices[axis]) match = false;
        }
        if (match) return true;
    }
    return false;
}

constexpr std::array<Coeff2, 8> kCubicCombos{{{1, 0}, {0, 1}, {2, 1}, {2, -1}, {1, 2}, {-1, 2}, {3, 0}, {0, 3}}};

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Resonant: return "resonant";
        case Verdict::NonResonant: return "non-resonant";
        case Verdict::VanishingAmplitude: return "vanishing";
        case Verdict::ParityMismatch: return "parity-mismatch";
    }
    return "?";
}

double SourceTermRecord::k_norm() const { return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]); }

VerdictCounts ResonanceReport::counts() const {
    VerdictCounts c;
    for (const auto& r : records) {
        switch (r.verdict) {
            case Verdict::Resonant:
                ++c.resonant;
                if (r.self_resonance) ++c.self_resonant;
                break;
            case Verdict::NonResonant: ++c.non_resonant; break;
            case Verdict::VanishingAmplitude: ++c.vanishing; break;
            case Verdict::ParityMismatch: ++c.parity_mismatch; break;
        }
    }
    return c;
}

const SourceTermRecord* ResonanceReport::find(const std::array<Coeff2, 4>& lattice) const {
    for (const auto& r : records) {
        if (r.lattice == lattice) return &r;
    }
    return nullptr;
}

ResonanceReport classify(const WaveSources& sources, const LatticeBasis& basis,
                         const CavityGeometry& geometry, const ClassifyOptions& opts) {
    geometry.validate();
    const double zero_rate = 1e-12 * std::max(max_base_rate(basis), 1e-300);

    std::map<std::array<Coeff2, 4>, SourceTermRecord> by_lattice;
    auto collect = [&](FieldKind f, const VectorField& v) {
        for (int comp = 0; comp < 3; ++comp) {
            for (const auto& [key, amp] : v[comp].terms()) {
                auto& rec = by_lattice[key.coeff];
                rec.lattice = key.coeff;
                rec.components.push_back({f, comp, key, amp});
            }
        }
    };
    collect(FieldKind::E, sources.e);
    collect(FieldKind::B, sources.b);

    ResonanceReport report;
    report.geometry = geometry;
    report.basis = basis;
    const auto lengths = geometry.lengths();

    for (auto& [lattice, rec] : by_lattice) {
        rec.omega = std::abs(basis.rate(Coord::t, lattice[0]));
        for (int axis = 0; axis < 3; ++axis) {
            rec.k[axis] = std::abs(basis.rate(kSpatialCoords[axis], lattice[axis + 1]));
            rec.mode_indices[axis] =
                static_cast<int>(std::lround(rec.k[axis] * lengths[axis] / std::numbers::pi));
        }

        // A sin factor whose numeric rate vanishes (commensurate pumps)
        // makes that component identically zero.
        double norm2 = 0.0;
        bool parity_ok = true;
        std::size_t live = 0;
        for (const auto& c : rec.components) {
            bool zero = false;
            for (Coord coord : kAllCoords) {
                if (c.key.parity_of(coord) == Parity::Sin &&
                    std::abs(basis.rate(coord, c.key.of(coord))) <= zero_rate) {
                    zero = true;
                }
            }
            if (zero) continue;
            ++live;
            norm2 += c.amplitude * c.amplitude;
            for (int axis = 0; axis < 3; ++axis) {
                if (rec.k[axis] <= zero_rate) continue;
                if (c.key.parity_of(kSpatialCoords[axis]) != expected_parity(c.field, c.axis, axis)) {
                    parity_ok = false;
                }
            }
        }
        rec.amplitude = std::sqrt(norm2);

        const double k2 = rec.k[0] * rec.k[0] + rec.k[1] * rec.k[1] + rec.k[2] * rec.k[2];
        const double w2 = rec.omega * rec.omega;
        rec.dispersion_residual =
            rec.omega > zero_rate ? std::abs(w2 - k2) / w2 : std::numeric_limits<double>::infinity();

        if (live == 0) {
            rec.verdict = Verdict::VanishingAmplitude;
        } else if (rec.omega <= zero_rate || rec.dispersion_residual > opts.dispersion_tol) {
            rec.verdict = Verdict::NonResonant;
        } else {
            rec.verdict = parity_ok ? Verdict::Resonant : Verdict::ParityMismatch;
        }
        rec.self_resonance = is_self_resonance(rec, basis, lengths);
        report.records.push_back(std::move(rec));
    }

    std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
        if (a.mode_indices != b.mode_indices) return a.mode_indices < b.mode_indices;
        if (a.spatial_key() != b.spatial_key()) return a.spatial_key() < b.spatial_key();
        if (a.omega != b.omega) return a.omega < b.omega;
        return a.lattice < b.lattice;
    });

    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        if (report.rows.empty() || report.rows.back().spatial != r.spatial_key()) {
            report.rows.push_back({r.spatial_key(), r.mode_indices, {}});
        }
        report.rows.back().records.push_back(i);
    }
    return report;
}

ResonanceReport classify(const WaveSources& sources, const PumpConfiguration& pumps,
                         const ClassifyOptions& opts) {
    ResonanceReport r = classify(sources, pumps.basis, pumps.geometry, opts);
    r.pumps = pumps.pumps;
    return r;
}

ResonanceReport analyze(const CavityGeometry& g, std::span<const ModeSpec> pumps,
                        const PhysicalConstants& c, const ClassifyOptions& opts) {
    const PumpConfiguration cfg = configure_pumps(g, pumps);
    return classify(wave_rhs(cfg, c), cfg, opts);
}

// ---- labels ---------------------------------------------------------------

LabelStyle LabelStyle::for_pumps(std::span<const ModeSpec> pumps) {
    LabelStyle s;
    s.one_d = !pumps.empty() && pumps[0].kind == ModeKind::OneD;
    s.two_pumps = pumps.size() > 1;
    return s;
}

std::string LabelStyle::wavenumbers(const std::array<Coeff2, 3>& spatial) const {
    if (one_d) {
        const ComboSymbols sym = two_pumps ? ComboSymbols{{"n", "p"}} : ComboSymbols{{"n", ""}};
        return format_combo(spatial[0], sym, true);
    }
    static const std::array<ComboSymbols, 3> single{{{{"n", ""}}, {{"p", ""}}, {{"q", ""}}}};
    static const std::array<ComboSymbols, 3> pair{{{{"n1", "n2"}}, {{"p1", "p2"}}, {{"q1", "q2"}}}};
    const auto& sym = two_pumps ? pair : single;
    return "(" + format_combo(spatial[0], sym[0], true) + ", " + format_combo(spatial[1], sym[1], true) +
           ", " + format_combo(spatial[2], sym[2], true) + ")";
}

std::string LabelStyle::frequency(const Coeff2& time) const {
    ComboSymbols sym;
    if (one_d) {
        sym = two_pumps ? ComboSymbols{{"ω_n", "ω_p"}} : ComboSymbols{{"ω_n", ""}};
    } else {
        sym = two_pumps ? ComboSymbols{{"ω1", "ω2"}} : ComboSymbols{{"ω", ""}};
    }
    return format_combo(time, sym, true);
}

// ---- triangle inequality --------------------------------------------------

TriangleRecord triangle_exclusion(const std::array<double, 3>& k1, const std::array<double, 3>& k2) {
    auto norm = [](const std::array<double, 3>& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); };
    const double n1 = norm(k1);
    const double n2 = norm(k2);
    if (!(n1 > 0.0) || !(n2 > 0.0)) throw std::invalid_argument("triangle_exclusion needs nonzero wavevectors");

    TriangleRecord r;
    r.lhs = 2.0 * n2 + n1;
    r.rhs = norm({2.0 * k2[0] + k1[0], 2.0 * k2[1] + k1[1], 2.0 * k2[2] + k1[2]});
    const std::array<double, 3> cross{k1[1] * k2[2] - k1[2] * k2[1], k1[2] * k2[0] - k1[0] * k2[2],
                                      k1[0] * k2[1] - k1[1] * k2[0]};
    const double dotp = k1[0] * k2[0] + k1[1] * k2[1] + k1[2] * k2[2];
    r.parallel = norm(cross) <= 1e-12 * n1 * n2 && dotp > 0.0;
    r.strict = r.lhs - r.rhs > 1e-14 * r.lhs && !r.parallel;
    r.exclusion = r.strict ? PlusModeExclusion::StrictInequality : PlusModeExclusion::ParallelVanishing;
    return r;
}

// ---- geometry search ------------------------------------------------------

void GeometryConstraint::validate() const {
    if (!(scan_lo > 0.0) || !(scan_hi > scan_lo) || !std::isfinite(scan_hi)) {
        throw std::invalid_argument("geometry scan interval must satisfy 0 < lo < hi");
    }
    if (!(tolerance > 0.0)) throw std::invalid_argument("root tolerance must be positive");
    if (kind == ConstraintKind::RatioXY && !(ratio_xy > 0.0 && std::isfinite(ratio_xy))) {
        throw std::invalid_argument("Ly/Lx ratio must be positive");
    }
    if (subdivisions < 1) throw std::invalid_argument("scan needs at least one subdivision");
}

CavityGeometry GeometryConstraint::at(double r) const { return {1.0 / r, rho() / r, 1.0}; }

void check_signal_candidate(const ModeSpec& pump1, const ModeSpec& pump2, const std::array<int, 3>& signal) {
    if (signal[0] < 0 || signal[1] < 0 || signal[2] < 0 || signal == std::array<int, 3>{0, 0, 0}) {
        throw std::invalid_argument("signal indices must be non-negative and not all zero");
    }
    const auto m1 = pump1.indices();
    const auto m2 = pump2.indices();
    for (int axis = 0; axis < 3; ++axis) {
        bool reachable = false;
        for (const auto& c : kCubicCombos) {
            if (std::abs(c[0] * m1[axis] + c[1] * m2[axis]) == signal[axis]) reachable = true;
        }
        if (!reachable) {
            throw std::invalid_argument("signal index " + std::to_string(signal[axis]) + " on axis " +
                                        "xyz"[axis] + " is not a cubic combination of the pump indices");
        }
    }
}

std::vector<GeometryRoot> solve_geometry(const ModeSpec& pump1, const ModeSpec& pump2,
                                         const std::array<int, 3>& signal, CombinationSign sign,
                                         const GeometryConstraint& constraint) {
    constraint.validate();
    pump1.validate();
    pump2.validate();
    check_signal_candidate(pump1, pump2, signal);
    const double s = sign == CombinationSign::Plus ? 1.0 : -1.0;

    auto mode_omega = [](const CavityGeometry& g, const ModeSpec& m) {
        LatticeBasis b;
        register_mode(g, m, 0, b);
        return b.omega[0];
    };
    // Scale-free mismatch, smooth in r.
    auto mismatch = [&](double r) {
        const CavityGeometry g = constraint.at(r);
        const double ws = eigenfrequency(g, signal[0], signal[1], signal[2]);
        return (2.0 * mode_omega(g, pump1) + s * mode_omega(g, pump2) - ws) / ws;
    };

    std::vector<GeometryRoot> roots;
    auto push_root = [&](double r) {
        if (!roots.empty() && std::abs(roots.back().ratio - r) <= 10.0 * constraint.tolerance) return;
        roots.push_back({r, constraint.at(r), mismatch(r)});
    };

    const int n = constraint.subdivisions;
    const double lo = constraint.scan_lo;
    const double step = (constraint.scan_hi - lo) / n;
    double a = lo;
    double fa = mismatch(a);
    for (int i = 1; i <= n; ++i) {
        const double b = i == n ? constraint.scan_hi : lo + i * step;
        const double fb = mismatch(b);
        if (fa == 0.0) {
            push_root(a);
        } else if (fa * fb < 0.0) {
            double l = a, h = b, fl = fa;
            while (h - l > constraint.tolerance) {
                const double mid = 0.5 * (l + h);
                const double fm = mismatch(mid);
                if (fm == 0.0) {
                    l = h = mid;
                    break;
                }
                if ((fm < 0.0) == (fl < 0.0)) {
                    l = mid;
                    fl = fm;
                } else {
                    h = mid;
                }
            }
            push_root(0.5 * (l + h));
        }
        a = b;
        fa = fb;
    }
    if (fa == 0.0) push_root(a);
    return roots;
}

}  // namespace cavharm
