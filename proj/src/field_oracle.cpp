#include "cavharm/field_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cavharm::oracle {

Jet& Jet::operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < 4; ++i) {
        g[i] += o.g[i];
        for (int j = 0; j < 4; ++j) h[i][j] += o.h[i][j];
    }
    return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += (-1.0) * o; }

Jet& Jet::operator*=(double s) {
    v *= s;
    for (int i = 0; i < 4; ++i) {
        g[i] *= s;
        for (int j = 0; j < 4; ++j) h[i][j] *= s;
    }
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.v = a.v * b.v;
    for (int i = 0; i < 4; ++i) {
        r.g[i] = a.g[i] * b.v + a.v * b.g[i];
        for (int j = 0; j < 4; ++j) {
            r.h[i][j] = a.h[i][j] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[i][j];
        }
    }
    return r;
}

namespace {

constexpr double kPi = std::numbers::pi;

Jet sin_jet(int coord, double rate, double x) {
    Jet j;
    j.v = std::sin(rate * x);
    j.g[coord] = rate * std::cos(rate * x);
    j.h[coord][coord] = -rate * rate * j.v;
    return j;
}

Jet cos_jet(int coord, double rate, double x) {
    Jet j;
    j.v = std::cos(rate * x);
    j.g[coord] = -rate * std::sin(rate * x);
    j.h[coord][coord] = -rate * rate * j.v;
    return j;
}

Jet dot(const JetVec& a, const JetVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct PumpJets {
    JetVec e, b;
};

PumpJets one_d(const CavityGeometry& geo, const ModeSpec& m, const std::array<double, 4>& pt) {
    const double k = m.n * kPi / geo.lx;
    const Jet es = sin_jet(0, k, pt[0]) * sin_jet(1, k, pt[1]);
    const Jet bc = cos_jet(0, k, pt[0]) * cos_jet(1, k, pt[1]);
    const double ca = std::cos(m.alpha), sa = std::sin(m.alpha);
    PumpJets r;
    r.e[1] = m.amplitude * ca * es;
    r.e[2] = m.amplitude * sa * es;
    r.b[1] = -m.amplitude * sa * bc;
    r.b[2] = m.amplitude * ca * bc;
    return r;
}

PumpJets three_d(const CavityGeometry& geo, const ModeSpec& m, const std::array<double, 4>& pt) {
    const double kx = m.n * kPi / geo.lx, ky = m.p * kPi / geo.ly, kz = m.q * kPi / geo.lz;
    const double w = std::sqrt(kx * kx + ky * ky + kz * kz);
    const double kc2 = kx * kx + ky * ky;
    const double kc = std::sqrt(kc2);
    double ax, ay, az;
    if (m.kind == ModeKind::TM) {
        ax = -kx * kz / kc2;
        ay = -ky * kz / kc2;
        az = 1.0;
    } else {
        ax = ky / kc;
        ay = -kx / kc;
        az = 0.0;
    }
    const double e0 = m.amplitude / std::max({std::abs(ax), std::abs(ay), std::abs(az)});
    ax *= e0;
    ay *= e0;
    az *= e0;

    const Jet sx = sin_jet(1, kx, pt[1]), cx = cos_jet(1, kx, pt[1]);
    const Jet sy = sin_jet(2, ky, pt[2]), cy = cos_jet(2, ky, pt[2]);
    const Jet sz = sin_jet(3, kz, pt[3]), cz = cos_jet(3, kz, pt[3]);
    const Jet st = sin_jet(0, w, pt[0]);
    const Jet ct = cos_jet(0, w, pt[0]) * (1.0 / w);

    // E = sin(wt) e(r); B = cos(wt)/w curl e(r).
    PumpJets r;
    r.e[0] = ax * (st * cx * sy * sz);
    r.e[1] = ay * (st * sx * cy * sz);
    r.e[2] = az * (st * sx * sy * cz);
    r.b[0] = (az * ky - ay * kz) * (ct * sx * cy * cz);
    r.b[1] = (ax * kz - az * kx) * (ct * cx * sy * cz);
    r.b[2] = (ay * kx - ax * ky) * (ct * cx * cy * sz);
    return r;
}

}  // namespace

Sample evaluate(const CavityGeometry& geo, std::span<const ModeSpec> pumps, const PhysicalConstants& c,
                const std::array<double, 4>& point) {
    JetVec e{}, b{};
    for (const auto& m : pumps) {
        const PumpJets pj = m.kind == ModeKind::OneD ? one_d(geo, m, point) : three_d(geo, m, point);
        for (int i = 0; i < 3; ++i) {
            e[i] += pj.e[i];
            b[i] += pj.b[i];
        }
    }

    const Jet s = dot(e, e) - dot(b, b);
    const Jet eb = dot(e, b);
    JetVec p, mm;
    for (int i = 0; i < 3; ++i) {
        p[i] = 16.0 * c.kappa * (s * e[i] + 2.0 * c.beta * (eb * b[i]));
        mm[i] = 16.0 * c.kappa * (s * b[i] - 2.0 * c.beta * (eb * e[i]));
    }

    // Hessian index: 0 = t, 1..3 = x..z.
    auto curl_dt = [](const JetVec& v, int i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        return v[k].h[0][j + 1] - v[j].h[0][k + 1];
    };
    auto grad_div = [](const JetVec& v, int i) {
        double sum = 0.0;
        for (int j = 0; j < 3; ++j) sum += v[j].h[i + 1][j + 1];
        return sum;
    };
    auto lap = [](const Jet& j) { return j.h[1][1] + j.h[2][2] + j.h[3][3]; };

    Sample out;
    out.f = -2.0 * s.v;
    out.g = -4.0 * eb.v;
    for (int i = 0; i < 3; ++i) {
        out.e[i] = e[i].v;
        out.b[i] = b[i].v;
        out.p[i] = p[i].v;
        out.m[i] = mm[i].v;
        out.se[i] = curl_dt(mm, i) + grad_div(p, i) - p[i].h[0][0];
        out.sb[i] = curl_dt(p, i) - grad_div(mm, i) + lap(mm[i]);
    }
    return out;
}

}  // namespace cavharm::oracle
