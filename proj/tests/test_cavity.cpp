#include <cmath>
#include <numbers>
#include <random>

#include "cavharm/cavity.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cavharm;
using namespace testsupport;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<ModeSpec> sample_modes() {
    return {ModeSpec::one_d(1),       ModeSpec::one_d(3, 0.6, 1.4), ModeSpec::te(0, 1, 1), ModeSpec::te(1, 0, 1),
            ModeSpec::te(2, 1, 3, 0.7), ModeSpec::te(1, 1, 1),     ModeSpec::tm(1, 1, 0), ModeSpec::tm(1, 2, 1),
            ModeSpec::tm(3, 1, 2, 2.5)};
}

FieldPair single(const CavityGeometry& g, const ModeSpec& m, LatticeBasis& basis) {
    register_mode(g, m, 0, basis);
    return build_mode(g, m, 0, basis);
}

}  // namespace

TEST_SUITE("cavity") {

TEST_CASE("eigenfrequency examples") {
    const CavityGeometry cube{1, 1, 1};
    CHECK(eigenfrequency(cube, 1, 0, 0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(eigenfrequency(cube, 1, 1, 0) == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS((void)eigenfrequency(cube, 0, 0, 0), InvalidMode);

    const CavityGeometry res{1, 1, std::sqrt(std::sqrt(5.0) - 2.0)};
    const double lhs = 2.0 * eigenfrequency(res, 0, 1, 1) - eigenfrequency(res, 1, 1, 0);
    const double rhs = eigenfrequency(res, 1, 3, 0);
    CHECK(std::abs(lhs - rhs) / rhs <= 1e-12);
}

TEST_CASE("eigenfrequency is the norm of the registered wavevector") {
    const CavityGeometry g{0.8, 1.7, 2.3};
    for (const auto& m : sample_modes()) {
        if (m.kind == ModeKind::OneD) continue;
        LatticeBasis b;
        register_mode(g, m, 0, b);
        const auto& k = b.k[0];
        CHECK(b.omega[0] == doctest::Approx(std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2])).epsilon(1e-15));
        CHECK_NOTHROW(b.validate());
    }
}

TEST_CASE("1D pump reproduces the standing wave") {
    const CavityGeometry g{kPi, 10, 10};
    LatticeBasis b;
    const FieldPair f = single(g, ModeSpec::one_d(1), b);
    CHECK(b.omega[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f.e[0].empty());
    CHECK(f.e[2].empty());
    CHECK(f.b[0].empty());
    CHECK(f.b[1].empty());
    REQUIRE(f.e[1].size() == 1);
    REQUIRE(f.b[2].size() == 1);
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const SpacetimePoint p = random_point(rng);
        CHECK(eval_at(f.e[1], b, p) == doctest::Approx(std::sin(p.x) * std::sin(p.t)).epsilon(1e-14));
        CHECK(eval_at(f.b[2], b, p) == doctest::Approx(std::cos(p.x) * std::cos(p.t)).epsilon(1e-14));
    }
}

TEST_CASE("1D polarization rotation") {
    const CavityGeometry g{2.0, 1, 1};
    LatticeBasis b;
    const FieldPair rot = single(g, ModeSpec::one_d(2, kPi / 2), b);
    CHECK(rot.e[1].empty());
    CHECK(rot.b[2].empty());
    CHECK_FALSE(rot.e[2].empty());
    CHECK_FALSE(rot.b[1].empty());

    std::mt19937_64 rng(11);
    LatticeBasis b0;
    const FieldPair ref = single(g, ModeSpec::one_d(2, 0.0), b0);
    const TrigPoly e2_ref = dot(ref.e, ref.e), b2_ref = dot(ref.b, ref.b);
    for (double alpha : {0.3, 1.0, kPi / 2, 2.5, -1.2}) {
        LatticeBasis ba;
        const FieldPair f = single(g, ModeSpec::one_d(2, alpha), ba);
        const TrigPoly e2 = dot(f.e, f.e), b2 = dot(f.b, f.b);
        for (int i = 0; i < 100; ++i) {
            const SpacetimePoint p = random_point(rng);
            CHECK(std::abs(eval_at(e2, ba, p) - eval_at(e2_ref, b0, p)) <= 1e-12);
            CHECK(std::abs(eval_at(b2, ba, p) - eval_at(b2_ref, b0, p)) <= 1e-12);
        }
        CHECK(dot(f.e, f.b).empty());
    }
}

TEST_CASE("pump modes solve the source-free Maxwell equations") {
    const CavityGeometry g{0.9, 1.4, 0.6};
    for (const auto& m : sample_modes()) {
        CAPTURE(m.label());
        LatticeBasis b;
        const FieldPair f = single(g, m, b);
        CHECK_FALSE(f.e.empty());
        CHECK_FALSE(f.b.empty());
        CHECK(dalembertian(f.e, b).empty());
        CHECK(dalembertian(f.b, b).empty());
        CHECK(divergence(f.e, b).empty());
        CHECK(divergence(f.b, b).empty());
        CHECK((curl(f.e, b) + differentiate(f.b, Coord::t, b)).empty());
        CHECK((curl(f.b, b) - differentiate(f.e, Coord::t, b)).empty());
    }
}

TEST_CASE("tangential E and normal B vanish on the walls") {
    const CavityGeometry g{0.9, 1.4, 0.6};
    const auto len = g.lengths();
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& m : sample_modes()) {
        if (m.kind == ModeKind::OneD) continue;
        CAPTURE(m.label());
        LatticeBasis b;
        const FieldPair f = single(g, m, b);
        double worst = 0.0;
        for (int axis = 0; axis < 3; ++axis) {
            for (double wall : {0.0, len[axis]}) {
                for (int i = 0; i < 100; ++i) {
                    std::array<double, 3> r{u(rng) * len[0], u(rng) * len[1], u(rng) * len[2]};
                    r[axis] = wall;
                    const SpacetimePoint p{10.0 * u(rng), r[0], r[1], r[2]};
                    const auto e = eval_at(f.e, b, p);
                    const auto bb = eval_at(f.b, b, p);
                    for (int c = 0; c < 3; ++c) {
                        if (c != axis) worst = std::max(worst, std::abs(e[c]));
                    }
                    worst = std::max(worst, std::abs(bb[axis]));
                }
            }
        }
        CHECK(worst <= 1e-12 * std::max(1.0, m.amplitude) * b.omega[0]);
    }
}

TEST_CASE("TM110 in a cube of side pi") {
    const CavityGeometry g{kPi, kPi, kPi};
    LatticeBasis b;
    const FieldPair f = single(g, ModeSpec::tm(1, 1, 0), b);
    CHECK(f.e[0].empty());
    CHECK(f.e[1].empty());
    REQUIRE(f.e[2].size() == 1);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const SpacetimePoint p = random_point(rng);
        const double want = std::sin(p.x) * std::sin(p.y) * std::sin(std::sqrt(2.0) * p.t);
        CHECK(std::abs(eval_at(f.e[2], b, p) - want) <= 1e-12);
    }
}

TEST_CASE("pump amplitude F0") {
    const CavityGeometry g{0.9, 1.4, 0.6};
    for (const auto& m : sample_modes()) {
        LatticeBasis b;
        const FieldPair f = single(g, m, b);
        if (m.kind == ModeKind::OneD) {
            // F0 is the length of the rotated polarization vector
            CHECK(std::hypot(f.e[1].max_abs(), f.e[2].max_abs()) == doctest::Approx(m.amplitude).epsilon(1e-14));
        } else {
            CHECK(f.e.max_abs() == doctest::Approx(m.amplitude).epsilon(1e-14));
        }
    }
}

TEST_CASE("invalid modes are rejected") {
    CHECK_THROWS_AS(ModeSpec::te(0, 0, 1).validate(), InvalidMode);
    CHECK_THROWS_AS(ModeSpec::te(1, 1, 0).validate(), InvalidMode);
    CHECK_THROWS_AS(ModeSpec::tm(0, 1, 1).validate(), InvalidMode);
    CHECK_THROWS_AS(ModeSpec::one_d(0).validate(), InvalidMode);
    CHECK_THROWS_AS(ModeSpec::te(-1, 1, 1).validate(), InvalidMode);
    CHECK_NOTHROW(ModeSpec::tm(1, 1, 0).validate());
    CHECK_NOTHROW(ModeSpec::te(0, 1, 1).validate());

    const CavityGeometry g{1, 1, 1};
    const std::vector<ModeSpec> mixed{ModeSpec::one_d(1), ModeSpec::te(0, 1, 1)};
    CHECK_THROWS_AS((void)configure_pumps(g, mixed), InvalidMode);
    const std::vector<ModeSpec> three(3, ModeSpec::te(0, 1, 1));
    CHECK_THROWS_AS((void)configure_pumps(g, three), InvalidMode);
    CHECK_THROWS_AS((void)configure_pumps(g, std::vector<ModeSpec>{}), InvalidMode);
    CHECK_THROWS_AS(CavityGeometry({1, 0, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CavityGeometry({1, 1, -2}).validate(), std::invalid_argument);
}

TEST_CASE("two pumps occupy separate slots, even for the same mode") {
    const CavityGeometry g{1, 1.3, 0.7};
    const std::vector<ModeSpec> same{ModeSpec::tm(1, 2, 1), ModeSpec::tm(1, 2, 1)};
    const PumpConfiguration cfg = configure_pumps(g, same);
    CHECK(cfg.basis.omega[0] == cfg.basis.omega[1]);
    REQUIRE(cfg.fields.size() == 2);
    CHECK_FALSE(cfg.fields[0].e == cfg.fields[1].e);

    std::mt19937_64 rng(14);
    for (int i = 0; i < 20; ++i) {
        const SpacetimePoint p = random_point(rng);
        const auto total = eval_at(cfg.total.e, cfg.basis, p);
        const auto one = eval_at(cfg.fields[0].e, cfg.basis, p);
        for (int c = 0; c < 3; ++c) CHECK(std::abs(total[c] - 2.0 * one[c]) <= 1e-12);
    }
}

TEST_CASE("mode labels") {
    CHECK(ModeSpec::te(0, 1, 1).label() == "TE011");
    CHECK(ModeSpec::tm(1, 1, 0, 2.0).label() == "TM110:F0=2");
    CHECK(ModeSpec::te(12, 1, 1).label() == "TE:n=12,p=1,q=1");
    CHECK(ModeSpec::one_d(2, 0.5).label() == "1D:n=2,alpha=0.5");
    CHECK(ModeSpec::one_d(1).label() == "1D:n=1");
}

}
