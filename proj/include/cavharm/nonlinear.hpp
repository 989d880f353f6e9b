// Euler-Heisenberg constitutive fields and the sources of the linearized
// signal wave equations.
#pragma once

#include "cavharm/cavity.hpp"
#include "cavharm/trigpoly.hpp"
#include "cavharm/vector_field.hpp"

namespace cavharm {

struct PhysicalConstants {
    double kappa = 1.0;
    double beta = 7.0 / 4.0;

    /// kappa = alpha^2 / (90 m_e^4) in MeV^-4.
    [[nodiscard]] static double physical_kappa();
    [[nodiscard]] static PhysicalConstants physical() { return {physical_kappa(), 7.0 / 4.0}; }

    /// Throws std::invalid_argument for negative or non-finite values.
    void validate() const;
};

struct FieldInvariants {
    TrigPoly f;  // F = -2(E.E - B.B)
    TrigPoly g;  // G = -4 E.B
};

[[nodiscard]] FieldInvariants invariants(const FieldPair& fields);

struct PolarizationMagnetization {
    VectorField p;  // 16k[(E^2-B^2)E + 2b(E.B)B]
    VectorField m;  // 16k[(E^2-B^2)B - 2b(E.B)E]
};

[[nodiscard]] PolarizationMagnetization polarization_magnetization(const FieldPair& fields,
                                                                   const PhysicalConstants& c);

struct WaveSources {
    VectorField e;  // d_t curl M + grad div P - d_t^2 P
    VectorField b;  // d_t curl P - grad div M + Laplacian M

    [[nodiscard]] bool empty() const { return e.empty() && b.empty(); }
};

[[nodiscard]] WaveSources wave_rhs(const PolarizationMagnetization& pm, const LatticeBasis& basis);
[[nodiscard]] WaveSources wave_rhs(const FieldPair& fields, const PhysicalConstants& c,
                                   const LatticeBasis& basis);

/// Sources for the summed field of all configured pumps.
[[nodiscard]] WaveSources wave_rhs(const PumpConfiguration& pumps, const PhysicalConstants& c);

}  // namespace cavharm
