// Random instances shared by the unit tests.
#pragma once

#include <cmath>
#include <random>

#include "cavharm/trigpoly.hpp"
#include "cavharm/vector_field.hpp"

namespace testsupport {

using namespace cavharm;

// Two pumps with random wavevectors, omega = |k|.
inline LatticeBasis random_basis(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> comp(0.3, 3.0);
    LatticeBasis b;
    for (int s = 0; s < 2; ++s) {
        double k2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            b.k[s][i] = comp(rng);
            k2 += b.k[s][i] * b.k[s][i];
        }
        b.omega[s] = std::sqrt(k2);
    }
    return b;
}

inline HarmonicKey random_key(std::mt19937_64& rng, int range = 2) {
    std::uniform_int_distribution<int> c(-range, range);
    HarmonicKey k;
    for (int i = 0; i < 4; ++i) {
        k.coeff[i] = {c(rng), c(rng)};
        k.parity[i] = (rng() & 1) ? Parity::Sin : Parity::Cos;
    }
    return k;
}

inline TrigPoly random_poly(std::mt19937_64& rng, int terms = 4) {
    std::uniform_real_distribution<double> amp(-2.0, 2.0);
    TrigPoly p;
    for (int i = 0; i < terms; ++i) p += TrigPoly::term(amp(rng), random_key(rng));
    return p;
}

inline VectorField random_field(std::mt19937_64& rng, int terms = 3) {
    VectorField v;
    for (int i = 0; i < 3; ++i) v[i] = random_poly(rng, terms);
    return v;
}

inline SpacetimePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return {u(rng), u(rng), u(rng), u(rng)};
}

// Sum of |A|: bounds |f| everywhere.
inline double l1(const TrigPoly& f) {
    double s = 0.0;
    for (const auto& [k, a] : f.terms()) s += std::abs(a);
    return s;
}

inline TrigPoly mono(double a, Coord c1, Coeff2 k1, Parity p1) {
    HarmonicKey k;
    k.of(c1) = k1;
    k.parity[static_cast<int>(c1)] = p1;
    return TrigPoly::term(a, k);
}

}  // namespace testsupport
