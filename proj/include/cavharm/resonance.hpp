// Resonance classification of source terms, the triangle-inequality
// exclusion of the "plus" combined mode, and resonant-geometry search.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cavharm/cavity.hpp"
#include "cavharm/nonlinear.hpp"
#include "cavharm/trigpoly.hpp"

namespace cavharm {

enum class Verdict {
    Resonant,
    NonResonant,
    VanishingAmplitude,
    // Dispersion matches but the sin/cos pattern of some component does not
    // fit the wall boundary conditions of a cavity eigenmode.
    ParityMismatch,
};

[[nodiscard]] const char* to_string(Verdict v);

enum class FieldKind { E, B };

struct ComponentAmplitude {
    FieldKind field = FieldKind::E;
    int axis = 0;  // 0,1,2 = x,y,z
    HarmonicKey key;
    double amplitude = 0.0;
};

/// All source terms sharing one integer lattice point (time and space
/// coefficients), across the six field components.
struct SourceTermRecord {
    std::array<Coeff2, 4> lattice{};
    double omega = 0.0;
    std::array<double, 3> k{};
    std::array<int, 3> mode_indices{};
    std::vector<ComponentAmplitude> components;
    double amplitude = 0.0;            // Euclidean norm over nonvanishing components
    double dispersion_residual = 0.0;  // |w^2 - |k|^2| / w^2, infinite for w = 0
    Verdict verdict = Verdict::NonResonant;
    bool self_resonance = false;  // same frequency and mode indices as a pump

    [[nodiscard]] const Coeff2& time_key() const { return lattice[0]; }
    [[nodiscard]] std::array<Coeff2, 3> spatial_key() const { return {lattice[1], lattice[2], lattice[3]}; }
    [[nodiscard]] double k_norm() const;
};

struct ReportRow {
    std::array<Coeff2, 3> spatial{};
    std::array<int, 3> mode_indices{};
    std::vector<std::size_t> records;  // indices into ResonanceReport::records
};

struct VerdictCounts {
    std::size_t resonant = 0;
    std::size_t self_resonant = 0;
    std::size_t non_resonant = 0;
    std::size_t vanishing = 0;
    std::size_t parity_mismatch = 0;
};

struct ResonanceReport {
    CavityGeometry geometry;
    std::vector<ModeSpec> pumps;
    LatticeBasis basis;
    std::vector<SourceTermRecord> records;  // sorted: mode indices, then omega
    std::vector<ReportRow> rows;

    [[nodiscard]] VerdictCounts counts() const;
    [[nodiscard]] const SourceTermRecord* find(const std::array<Coeff2, 4>& lattice) const;
};

struct ClassifyOptions {
    double dispersion_tol = 1e-9;  // relative, on w^2 vs |k|^2
};

[[nodiscard]] ResonanceReport classify(const WaveSources& sources, const LatticeBasis& basis,
                                       const CavityGeometry& geometry, const ClassifyOptions& opts = {});

/// Classifies and attaches the pump list as report metadata.
[[nodiscard]] ResonanceReport classify(const WaveSources& sources, const PumpConfiguration& pumps,
                                       const ClassifyOptions& opts = {});

/// Convenience: configure pumps, expand sources, classify.
[[nodiscard]] ResonanceReport analyze(const CavityGeometry& g, std::span<const ModeSpec> pumps,
                                      const PhysicalConstants& c, const ClassifyOptions& opts = {});

// ---- labels ---------------------------------------------------------------

/// Symbol sets for printing lattice points the way resonance tables read:
/// 1D pumps use n, p and w_n, w_p; 3D pumps use (n, p, q) or (n1, p1, q1).
struct LabelStyle {
    bool one_d = false;
    bool two_pumps = false;

    static LabelStyle for_pumps(std::span<const ModeSpec> pumps);

    [[nodiscard]] std::string wavenumbers(const std::array<Coeff2, 3>& spatial) const;
    [[nodiscard]] std::string frequency(const Coeff2& time) const;
};

// ---- triangle inequality --------------------------------------------------

enum class PlusModeExclusion {
    StrictInequality,    // 2|k2| + |k1| > |2k2 + k1|: dispersion cannot match
    ParallelVanishing,   // equality, k1 || k2: excluded by the vanishing amplitude
};

struct TriangleRecord {
    double lhs = 0.0;  // 2|k2| + |k1| = 2 w2 + w1
    double rhs = 0.0;  // |2k2 + k1|
    bool strict = false;
    bool parallel = false;
    PlusModeExclusion exclusion = PlusModeExclusion::StrictInequality;
};

/// Throws std::invalid_argument for a zero wavevector.
[[nodiscard]] TriangleRecord triangle_exclusion(const std::array<double, 3>& k1,
                                                const std::array<double, 3>& k2);

// ---- geometry search ------------------------------------------------------

enum class ConstraintKind { LxEqualsLy, RatioXY };

/// One-parameter cavity family with Lz = 1 and r = Lz/Lx scanned:
/// (Lx, Ly, Lz) = (1/r, rho/r, 1), rho = 1 for LxEqualsLy.
struct GeometryConstraint {
    ConstraintKind kind = ConstraintKind::LxEqualsLy;
    double ratio_xy = 1.0;
    double scan_lo = 0.1;
    double scan_hi = 1.0;
    double tolerance = 1e-13;
    int subdivisions = 10000;

    void validate() const;
    [[nodiscard]] double rho() const { return kind == ConstraintKind::LxEqualsLy ? 1.0 : ratio_xy; }
    [[nodiscard]] CavityGeometry at(double r) const;
};

enum class CombinationSign { Plus, Minus };

struct GeometryRoot {
    double ratio = 0.0;  // r = Lz/Lx
    CavityGeometry geometry;
    double residual = 0.0;  // (2w1 +- w2 - w_sig) / w_sig at the root
};

/// Signal indices must be reachable per axis from the pump indices by one of
/// the cubic combinations; throws std::invalid_argument otherwise.
void check_signal_candidate(const ModeSpec& pump1, const ModeSpec& pump2,
                            const std::array<int, 3>& signal);

/// All roots of 2 w1(g) +- w2(g) = w_sig(g) over the constrained family.
/// Empty when there is none.
[[nodiscard]] std::vector<GeometryRoot> solve_geometry(const ModeSpec& pump1, const ModeSpec& pump2,
                                                       const std::array<int, 3>& signal,
                                                       CombinationSign sign,
                                                       const GeometryConstraint& constraint);

}  // namespace cavharm
