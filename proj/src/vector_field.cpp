#include "cavharm/vector_field.hpp"

#include <algorithm>

namespace cavharm {

double VectorField::max_abs() const {
    return std::max({c[0].max_abs(), c[1].max_abs(), c[2].max_abs()});
}

VectorField& VectorField::operator+=(const VectorField& rhs) {
    for (int i = 0; i < 3; ++i) c[i] += rhs.c[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& rhs) {
    for (int i = 0; i < 3; ++i) c[i] -= rhs.c[i];
    return *this;
}

VectorField& VectorField::operator*=(double s) {
    for (auto& p : c) p *= s;
    return *this;
}

TrigPoly dot(const VectorField& a, const VectorField& b) {
    TrigPoly out = multiply(a[0], b[0]);
    out += multiply(a[1], b[1]);
    out += multiply(a[2], b[2]);
    return out;
}

VectorField scale(const TrigPoly& s, const VectorField& v) {
    return {{multiply(s, v[0]), multiply(s, v[1]), multiply(s, v[2])}};
}

VectorField differentiate(const VectorField& f, Coord coord, const LatticeBasis& basis) {
    return {{differentiate(f[0], coord, basis), differentiate(f[1], coord, basis),
             differentiate(f[2], coord, basis)}};
}

VectorField curl(const VectorField& f, const LatticeBasis& b) {
    return {{differentiate(f[2], Coord::y, b) - differentiate(f[1], Coord::z, b),
             differentiate(f[0], Coord::z, b) - differentiate(f[2], Coord::x, b),
             differentiate(f[1], Coord::x, b) - differentiate(f[0], Coord::y, b)}};
}

TrigPoly divergence(const VectorField& f, const LatticeBasis& b) {
    TrigPoly out = differentiate(f[0], Coord::x, b);
    out += differentiate(f[1], Coord::y, b);
    out += differentiate(f[2], Coord::z, b);
    return out;
}

VectorField gradient(const TrigPoly& phi, const LatticeBasis& b) {
    return {{differentiate(phi, Coord::x, b), differentiate(phi, Coord::y, b),
             differentiate(phi, Coord::z, b)}};
}

TrigPoly laplacian(const TrigPoly& f, const LatticeBasis& b) {
    TrigPoly out;
    for (Coord c : kSpatialCoords) out += differentiate(differentiate(f, c, b), c, b);
    return out;
}

VectorField laplacian(const VectorField& f, const LatticeBasis& b) {
    return {{laplacian(f[0], b), laplacian(f[1], b), laplacian(f[2], b)}};
}

TrigPoly dalembertian(const TrigPoly& f, const LatticeBasis& b) {
    return differentiate(differentiate(f, Coord::t, b), Coord::t, b) - laplacian(f, b);
}

VectorField dalembertian(const VectorField& f, const LatticeBasis& b) {
    return {{dalembertian(f[0], b), dalembertian(f[1], b), dalembertian(f[2], b)}};
}

std::array<double, 3> eval_at(const VectorField& f, const LatticeBasis& basis,
                              const SpacetimePoint& p) {
    return {eval_at(f[0], basis, p), eval_at(f[1], basis, p), eval_at(f[2], basis, p)};
}

}  // namespace cavharm
