#include "cavharm/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace cavharm {

namespace {

std::string num15_local(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Spatial factor for one axis of a mode component.
struct AxisFactor {
    int index;  // mode index along the axis
    Parity parity;
};

// Builds A * h_t(w t) * prod_i h_i(k_i x_i) with slot-unit coefficients on
// every axis whose index is nonzero. Returns empty when a sin factor has a
// zero index (the factor vanishes identically).
TrigPoly mode_term(double amplitude, int slot, Parity time_parity,
                   const std::array<AxisFactor, 3>& axes) {
    HarmonicKey key;
    key.of(Coord::t)[slot] = 1;
    key.parity[0] = time_parity;
    for (int i = 0; i < 3; ++i) {
        if (axes[i].index == 0) {
            if (axes[i].parity == Parity::Sin) return {};
            continue;
        }
        key.coeff[i + 1][slot] = 1;
        key.parity[i + 1] = axes[i].parity;
    }
    return TrigPoly::term(amplitude, key);
}

FieldPair with_magnetic_partner(VectorField e, const LatticeBasis& basis) {
    // curl E = -dB/dt  =>  B = -int curl E dt
    VectorField ce = curl(e, basis);
    VectorField b;
    for (int i = 0; i < 3; ++i) b[i] = -integrate_time(ce[i], basis);
    return {std::move(e), std::move(b)};
}

}  // namespace

void CavityGeometry::validate() const {
    for (double l : lengths()) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw std::invalid_argument("cavity lengths must be positive and finite");
        }
    }
}

ModeSpec ModeSpec::one_d(int n, double alpha, double amplitude) {
    return {ModeKind::OneD, n, 0, 0, amplitude, alpha};
}

ModeSpec ModeSpec::te(int n, int p, int q, double amplitude) {
    return {ModeKind::TE, n, p, q, amplitude, 0.0};
}

ModeSpec ModeSpec::tm(int n, int p, int q, double amplitude) {
    return {ModeKind::TM, n, p, q, amplitude, 0.0};
}

void ModeSpec::validate() const {
    if (n < 0 || p < 0 || q < 0) throw InvalidMode("mode indices must be non-negative: " + label());
    if (!std::isfinite(amplitude) || !std::isfinite(alpha)) {
        throw InvalidMode("mode amplitude and angle must be finite: " + label());
    }
    switch (kind) {
        case ModeKind::OneD:
            if (n < 1 || p != 0 || q != 0) throw InvalidMode("1D mode needs n >= 1 and p = q = 0");
            break;
        case ModeKind::TE:
            if (q < 1 || (n == 0 && p == 0)) {
                throw InvalidMode("TE mode needs q >= 1 and (n, p) != (0, 0): " + label());
            }
            break;
        case ModeKind::TM:
            if (n < 1 || p < 1) throw InvalidMode("TM mode needs n, p >= 1: " + label());
            break;
    }
}

std::string ModeSpec::label() const {
    std::string s;
    if (kind == ModeKind::OneD) {
        s = "1D:n=" + std::to_string(n);
        if (alpha != 0.0) s += ",alpha=" + num15_local(alpha);
        if (amplitude != 1.0) s += ",F0=" + num15_local(amplitude);
        return s;
    }
    s = kind == ModeKind::TE ? "TE" : "TM";
    const bool compact = n >= 0 && n < 10 && p >= 0 && p < 10 && q >= 0 && q < 10;
    if (compact) {
        s += std::to_string(n) + std::to_string(p) + std::to_string(q);
        if (amplitude != 1.0) s += ":F0=" + num15_local(amplitude);
    } else {
        s += ":n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q);
        if (amplitude != 1.0) s += ",F0=" + num15_local(amplitude);
    }
    return s;
}

std::array<double, 3> wavevector(const CavityGeometry& g, int n, int p, int q) {
    constexpr double pi = std::numbers::pi;
    return {n * pi / g.lx, p * pi / g.ly, q * pi / g.lz};
}

double eigenfrequency(const CavityGeometry& g, int n, int p, int q) {
    if (n == 0 && p == 0 && q == 0) throw InvalidMode("eigenfrequency of the (0,0,0) mode");
    g.validate();
    const double a = n / g.lx;
    const double b = p / g.ly;
    const double c = q / g.lz;
    return std::numbers::pi * std::sqrt(a * a + b * b + c * c);
}

void register_mode(const CavityGeometry& g, const ModeSpec& m, int slot, LatticeBasis& basis) {
    if (slot != 0 && slot != 1) throw std::invalid_argument("basis slot must be 0 or 1");
    if (m.kind == ModeKind::OneD) {
        const double k = m.n * std::numbers::pi / g.lx;
        basis.omega[slot] = k;
        basis.k[slot] = {k, 0.0, 0.0};
        return;
    }
    basis.k[slot] = wavevector(g, m.n, m.p, m.q);
    basis.omega[slot] = eigenfrequency(g, m.n, m.p, m.q);
}

FieldPair build_mode_1d(const CavityGeometry& g, const ModeSpec& m, int slot,
                        const LatticeBasis& basis) {
    if (m.kind != ModeKind::OneD) throw InvalidMode("build_mode_1d needs a 1D mode");
    m.validate();
    g.validate();
    const AxisFactor sx{m.n, Parity::Sin};
    const TrigPoly profile = mode_term(m.amplitude, slot, Parity::Sin, {sx, {0, Parity::Cos}, {0, Parity::Cos}});
    VectorField e;
    // cos(pi/2) is 6e-17, not 0: treat roundoff-level projections as zero.
    double ca = std::cos(m.alpha), sa = std::sin(m.alpha);
    if (std::abs(ca) <= kDropThreshold) ca = 0.0;
    if (std::abs(sa) <= kDropThreshold) sa = 0.0;
    e[1] = ca * profile;
    e[2] = sa * profile;
    return with_magnetic_partner(std::move(e), basis);
}

FieldPair build_mode_3d(const CavityGeometry& g, const ModeSpec& m, int slot,
                        const LatticeBasis& basis) {
    if (m.kind == ModeKind::OneD) throw InvalidMode("build_mode_3d needs a TE or TM mode");
    m.validate();
    g.validate();
    const auto [kx, ky, kz] = wavevector(g, m.n, m.p, m.q);
    const double kc2 = kx * kx + ky * ky;
    const double kc = std::sqrt(kc2);

    const std::array<AxisFactor, 3> ex_pattern{{{m.n, Parity::Cos}, {m.p, Parity::Sin}, {m.q, Parity::Sin}}};
    const std::array<AxisFactor, 3> ey_pattern{{{m.n, Parity::Sin}, {m.p, Parity::Cos}, {m.q, Parity::Sin}}};
    const std::array<AxisFactor, 3> ez_pattern{{{m.n, Parity::Sin}, {m.p, Parity::Sin}, {m.q, Parity::Cos}}};

    std::array<double, 3> coef{};
    if (m.kind == ModeKind::TM) {
        coef = {-kx * kz / kc2, -ky * kz / kc2, 1.0};
    } else {
        coef = {ky / kc, -kx / kc, 0.0};
    }
    const double peak = std::max({std::abs(coef[0]), std::abs(coef[1]), std::abs(coef[2])});
    const double e0 = m.amplitude / peak;

    VectorField e;
    e[0] = mode_term(e0 * coef[0], slot, Parity::Sin, ex_pattern);
    e[1] = mode_term(e0 * coef[1], slot, Parity::Sin, ey_pattern);
    e[2] = mode_term(e0 * coef[2], slot, Parity::Sin, ez_pattern);
    return with_magnetic_partner(std::move(e), basis);
}

FieldPair build_mode(const CavityGeometry& g, const ModeSpec& m, int slot, const LatticeBasis& basis) {
    return m.kind == ModeKind::OneD ? build_mode_1d(g, m, slot, basis) : build_mode_3d(g, m, slot, basis);
}

PumpConfiguration configure_pumps(const CavityGeometry& g, std::span<const ModeSpec> pumps) {
    if (pumps.empty() || pumps.size() > 2) throw InvalidMode("expected one or two pump modes");
    g.validate();
    const bool one_d = pumps[0].kind == ModeKind::OneD;
    for (const auto& m : pumps) {
        m.validate();
        if ((m.kind == ModeKind::OneD) != one_d) throw InvalidMode("cannot mix 1D and 3D pump modes");
    }
    PumpConfiguration cfg;
    cfg.geometry = g;
    cfg.pumps.assign(pumps.begin(), pumps.end());
    for (std::size_t s = 0; s < pumps.size(); ++s) register_mode(g, pumps[s], static_cast<int>(s), cfg.basis);
    cfg.basis.validate();
    for (std::size_t s = 0; s < pumps.size(); ++s) {
        cfg.fields.push_back(build_mode(g, pumps[s], static_cast<int>(s), cfg.basis));
        cfg.total += cfg.fields.back();
    }
    return cfg;
}

}  // namespace cavharm
