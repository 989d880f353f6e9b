// Vector-valued trig polynomials and the differential operators of the
// linearized wave equations.
#pragma once

#include <array>

#include "cavharm/trigpoly.hpp"

namespace cavharm {

struct VectorField {
    std::array<TrigPoly, 3> c{};

    [[nodiscard]] TrigPoly& operator[](int i) { return c[i]; }
    [[nodiscard]] const TrigPoly& operator[](int i) const { return c[i]; }

    [[nodiscard]] bool empty() const { return c[0].empty() && c[1].empty() && c[2].empty(); }
    [[nodiscard]] double max_abs() const;

    VectorField& operator+=(const VectorField& rhs);
    VectorField& operator-=(const VectorField& rhs);
    VectorField& operator*=(double s);

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(VectorField a, double s) { return a *= s; }
    friend VectorField operator*(double s, VectorField a) { return a *= s; }
    friend bool operator==(const VectorField&, const VectorField&) = default;
};

[[nodiscard]] TrigPoly dot(const VectorField& a, const VectorField& b);
[[nodiscard]] VectorField scale(const TrigPoly& s, const VectorField& v);

[[nodiscard]] VectorField differentiate(const VectorField& f, Coord coord, const LatticeBasis& basis);

[[nodiscard]] VectorField curl(const VectorField& f, const LatticeBasis& basis);
[[nodiscard]] TrigPoly divergence(const VectorField& f, const LatticeBasis& basis);
[[nodiscard]] VectorField gradient(const TrigPoly& phi, const LatticeBasis& basis);

/// Spatial Laplacian.
[[nodiscard]] TrigPoly laplacian(const TrigPoly& f, const LatticeBasis& basis);
[[nodiscard]] VectorField laplacian(const VectorField& f, const LatticeBasis& basis);

/// d'Alembertian, d_t^2 - Laplacian.
[[nodiscard]] TrigPoly dalembertian(const TrigPoly& f, const LatticeBasis& basis);
[[nodiscard]] VectorField dalembertian(const VectorField& f, const LatticeBasis& basis);

[[nodiscard]] std::array<double, 3> eval_at(const VectorField& f, const LatticeBasis& basis,
                                            const SpacetimePoint& p);

}  // namespace cavharm
