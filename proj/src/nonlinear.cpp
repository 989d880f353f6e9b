#include "cavharm/nonlinear.hpp"

#include <cmath>
#include <stdexcept>

namespace cavharm {

namespace {

constexpr double kFineStructure = 7.2973525693e-3;
constexpr double kElectronMassMeV = 0.51099895000;

}  // namespace

double PhysicalConstants::physical_kappa() {
    const double m2 = kElectronMassMeV * kElectronMassMeV;
    return kFineStructure * kFineStructure / (90.0 * m2 * m2);
}

void PhysicalConstants::validate() const {
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("kappa must be >= 0");
    if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
}

FieldInvariants invariants(const FieldPair& fields) {
    TrigPoly f = dot(fields.e, fields.e) - dot(fields.b, fields.b);
    f *= -2.0;
    TrigPoly g = dot(fields.e, fields.b);
    g *= -4.0;
    return {std::move(f), std::move(g)};
}

PolarizationMagnetization polarization_magnetization(const FieldPair& fields,
                                                     const PhysicalConstants& c) {
    c.validate();
    if (c.kappa == 0.0) return {};
    const TrigPoly s = dot(fields.e, fields.e) - dot(fields.b, fields.b);
    const TrigPoly eb = dot(fields.e, fields.b);
    const double k16 = 16.0 * c.kappa;
    const double b2 = 2.0 * c.beta;

    VectorField p = scale(s, fields.e) + b2 * scale(eb, fields.b);
    VectorField m = scale(s, fields.b) - b2 * scale(eb, fields.e);
    p *= k16;
    m *= k16;
    return {std::move(p), std::move(m)};
}

WaveSources wave_rhs(const PolarizationMagnetization& pm, const LatticeBasis& basis) {
    const auto& p = pm.p;
    const auto& m = pm.m;
    VectorField se = differentiate(curl(m, basis), Coord::t, basis);
    se += gradient(divergence(p, basis), basis);
    se -= differentiate(differentiate(p, Coord::t, basis), Coord::t, basis);

    VectorField sb = differentiate(curl(p, basis), Coord::t, basis);
    sb -= gradient(divergence(m, basis), basis);
    sb += laplacian(m, basis);
    return {std::move(se), std::move(sb)};
}

WaveSources wave_rhs(const FieldPair& fields, const PhysicalConstants& c, const LatticeBasis& basis) {
    return wave_rhs(polarization_magnetization(fields, c), basis);
}

WaveSources wave_rhs(const PumpConfiguration& pumps, const PhysicalConstants& c) {
    return wave_rhs(pumps.total, c, pumps.basis);
}

}  // namespace cavharm
