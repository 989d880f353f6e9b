// Rectangular cavity geometry, eigenfrequencies and pump-mode fields.
//
// 3D modes use the textbook perfect-conductor forms for a box
// [0,Lx]x[0,Ly]x[0,Lz] with kx = n*pi/Lx etc. and kc^2 = kx^2 + ky^2:
//
//   TM_npq:  Ex = -E0 kx kz/kc^2 cos(kx x) sin(ky y) sin(kz z)
//            Ey = -E0 ky kz/kc^2 sin(kx x) cos(ky y) sin(kz z)
//            Ez =  E0            sin(kx x) sin(ky y) cos(kz z)
//   TE_npq:  Ex =  E0 ky/kc      cos(kx x) sin(ky y) sin(kz z)
//            Ey = -E0 kx/kc      sin(kx x) cos(ky y) sin(kz z)
//            Ez =  0
//
// E carries sin(w t); B follows from curl E = -dB/dt and carries cos(w t).
// E0 is chosen so the largest electric component coefficient equals F0.
#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavharm/trigpoly.hpp"
#include "cavharm/vector_field.hpp"

namespace cavharm {

class InvalidMode : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CavityGeometry {
    double lx = 1.0;
    double ly = 1.0;
    double lz = 1.0;

    [[nodiscard]] std::array<double, 3> lengths() const { return {lx, ly, lz}; }
    /// Throws std::invalid_argument unless all lengths are positive and finite.
    void validate() const;
};

enum class ModeKind { OneD, TE, TM };

struct ModeSpec {
    ModeKind kind = ModeKind::TE;
    int n = 0;
    int p = 0;
    int q = 0;
    double amplitude = 1.0;  // F0
    double alpha = 0.0;      // polarization angle, OneD only

    [[nodiscard]] std::array<int, 3> indices() const { return {n, p, q}; }
    /// Throws InvalidMode for index patterns with no nonzero field.
    void validate() const;
    /// "TE011", "TM110", "1D:n=2,alpha=0.5" style label.
    [[nodiscard]] std::string label() const;

    static ModeSpec one_d(int n, double alpha = 0.0, double amplitude = 1.0);
    static ModeSpec te(int n, int p, int q, double amplitude = 1.0);
    static ModeSpec tm(int n, int p, int q, double amplitude = 1.0);
};

struct FieldPair {
    VectorField e;
    VectorField b;

    FieldPair& operator+=(const FieldPair& rhs) {
        e += rhs.e;
        b += rhs.b;
        return *this;
    }
};

/// pi * sqrt(n^2/Lx^2 + p^2/Ly^2 + q^2/Lz^2). Throws InvalidMode for (0,0,0).
[[nodiscard]] double eigenfrequency(const CavityGeometry& g, int n, int p, int q);

/// Wavevector (n pi/Lx, p pi/Ly, q pi/Lz).
[[nodiscard]] std::array<double, 3> wavevector(const CavityGeometry& g, int n, int p, int q);

/// Registers the mode's frequency and wavevector in `slot` (0 or 1) of the
/// basis. A OneD mode only has an x wavevector.
void register_mode(const CavityGeometry& g, const ModeSpec& m, int slot, LatticeBasis& basis);

/// Standing 1D mode: E = F0 (0, cos a, sin a) sin(k x) sin(w t),
/// B = F0 (0, -sin a, cos a) cos(k x) cos(w t), with w = k = n pi/Lx. The
/// slot must already be registered.
[[nodiscard]] FieldPair build_mode_1d(const CavityGeometry& g, const ModeSpec& m, int slot,
                                      const LatticeBasis& basis);

/// TE/TM mode, see the header comment. The slot must already be registered.
[[nodiscard]] FieldPair build_mode_3d(const CavityGeometry& g, const ModeSpec& m, int slot,
                                      const LatticeBasis& basis);

/// Dispatches on kind.
[[nodiscard]] FieldPair build_mode(const CavityGeometry& g, const ModeSpec& m, int slot,
                                   const LatticeBasis& basis);

/// One or two pumps placed in slots 1 and 2, with their summed fields.
struct PumpConfiguration {
    CavityGeometry geometry;
    std::vector<ModeSpec> pumps;
    LatticeBasis basis;
    std::vector<FieldPair> fields;  // per pump
    FieldPair total;
};

/// Throws InvalidMode for zero or more than two pumps, invalid modes, or
/// a mix of OneD and 3D pumps.
[[nodiscard]] PumpConfiguration configure_pumps(const CavityGeometry& g,
                                                std::span<const ModeSpec> pumps);

}  // namespace cavharm
