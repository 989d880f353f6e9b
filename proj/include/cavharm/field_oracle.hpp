// Direct pointwise evaluation of pump fields and their nonlinear sources,
// written from the closed-form mode functions with forward-mode second-order
// derivatives. Shares no code with the trig-polynomial pipeline and serves
// as its numeric cross-check.
#pragma once

#include <array>
#include <span>

#include "cavharm/cavity.hpp"
#include "cavharm/nonlinear.hpp"

namespace cavharm::oracle {

/// Value, gradient and Hessian in (t, x, y, z).
struct Jet {
    double v = 0.0;
    std::array<double, 4> g{};
    std::array<std::array<double, 4>, 4> h{};

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator*(const Jet& a, const Jet& b);
};

using Vec3 = std::array<double, 3>;
using JetVec = std::array<Jet, 3>;

struct Sample {
    Vec3 e{}, b{};
    double f = 0.0, g = 0.0;
    Vec3 p{}, m{};
    Vec3 se{}, sb{};
};

/// Fields of the given pumps summed, and everything derived from them, at
/// (t, x, y, z).
[[nodiscard]] Sample evaluate(const CavityGeometry& g, std::span<const ModeSpec> pumps,
                              const PhysicalConstants& c, const std::array<double, 4>& point);

}  // namespace cavharm::oracle
