#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"

using namespace cavharm;
using namespace testsupport;

namespace {

HarmonicKey tx_key(Coeff2 t, Parity pt, Coeff2 x = {0, 0}, Parity px = Parity::Cos) {
    HarmonicKey k;
    k.of(Coord::t) = t;
    k.parity[0] = pt;
    k.of(Coord::x) = x;
    k.parity[1] = px;
    return k;
}

// Independent long-double evaluation straight from the term list.
long double eval_long(const TrigPoly& f, const LatticeBasis& b, const std::array<long double, 4>& p) {
    long double sum = 0.0L;
    for (const auto& [key, amp] : f.terms()) {
        long double v = amp;
        for (Coord c : kAllCoords) {
            const Coeff2& cf = key.of(c);
            long double rate;
            if (c == Coord::t) {
                rate = cf[0] * static_cast<long double>(b.omega[0]) + cf[1] * static_cast<long double>(b.omega[1]);
            } else {
                const int axis = static_cast<int>(c) - 1;
                rate = cf[0] * static_cast<long double>(b.k[0][axis]) + cf[1] * static_cast<long double>(b.k[1][axis]);
            }
            const long double arg = rate * p[static_cast<int>(c)];
            v *= key.parity_of(c) == Parity::Sin ? std::sin(arg) : std::cos(arg);
        }
        sum += v;
    }
    return sum;
}

}  // namespace

TEST_SUITE("trigpoly") {

TEST_CASE("canonicalize absorbs the sign of the leading coefficient") {
    auto r = canonicalize(1.0, tx_key({-1, 0}, Parity::Sin, {1, 0}, Parity::Cos));
    REQUIRE(r);
    CHECK(r->amplitude == -1.0);
    CHECK(r->key == tx_key({1, 0}, Parity::Sin, {1, 0}, Parity::Cos));

    r = canonicalize(1.0, tx_key({-1, 0}, Parity::Cos, {1, 0}, Parity::Cos));
    REQUIRE(r);
    CHECK(r->amplitude == 1.0);
    CHECK(r->key == tx_key({1, 0}, Parity::Cos, {1, 0}, Parity::Cos));

    CHECK_FALSE(canonicalize(5.0, tx_key({0, 0}, Parity::Sin, {1, 0}, Parity::Cos)));
    CHECK_FALSE(canonicalize(0.0, tx_key({1, 0}, Parity::Cos)));
}

TEST_CASE("canonicalize uses the first nonzero slot") {
    auto r = canonicalize(2.0, tx_key({0, -3}, Parity::Sin));
    REQUIRE(r);
    CHECK(r->amplitude == -2.0);
    CHECK(r->key.of(Coord::t) == Coeff2{0, 3});

    r = canonicalize(2.0, tx_key({-1, 2}, Parity::Sin));
    REQUIRE(r);
    CHECK(r->amplitude == -2.0);
    CHECK(r->key.of(Coord::t) == Coeff2{1, -2});
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        const HarmonicKey k = random_key(rng);
        const auto once = canonicalize(1.5, k);
        if (!once) continue;
        CHECK(is_canonical(once->key));
        const auto twice = canonicalize(once->amplitude, once->key);
        REQUIRE(twice);
        CHECK(twice->amplitude == once->amplitude);
        CHECK(twice->key == once->key);
    }
}

TEST_CASE("product-to-sum identities") {
    const TrigPoly s1 = TrigPoly::term(1.0, tx_key({1, 0}, Parity::Sin));
    const TrigPoly sq = s1 * s1;
    CHECK(sq.size() == 2);
    CHECK(sq.coefficient(HarmonicKey::constant()) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sq.coefficient(tx_key({2, 0}, Parity::Cos)) == doctest::Approx(-0.5).epsilon(1e-15));

    const TrigPoly c1 = TrigPoly::term(1.0, tx_key({1, 0}, Parity::Cos));
    const TrigPoly c2 = TrigPoly::term(1.0, tx_key({0, 1}, Parity::Cos));
    const TrigPoly prod = c1 * c2;
    CHECK(prod.size() == 2);
    CHECK(prod.coefficient(tx_key({1, -1}, Parity::Cos)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(prod.coefficient(tx_key({1, 1}, Parity::Cos)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("exact cancellations leave an empty polynomial") {
    const TrigPoly third = TrigPoly::term(1.0 / 3.0, tx_key({1, 0}, Parity::Cos));
    const TrigPoly diff = 3.0 * third - TrigPoly::term(1.0, tx_key({1, 0}, Parity::Cos));
    CHECK(diff.empty());

    std::mt19937_64 rng(2);
    const TrigPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(((a + b) - b - a).empty());
    CHECK((a * b - b * a).empty());
}

TEST_CASE("prune is idempotent") {
    std::mt19937_64 rng(3);
    TrigPoly p = random_poly(rng, 6) * random_poly(rng, 6);
    p.prune();
    const TrigPoly once = p;
    p.prune();
    CHECK(p == once);
}

TEST_CASE("eval_at basics") {
    const LatticeBasis b{{1.0, 0.0}, {{{1.0, 0.0, 0.0}, {}}}};
    CHECK(eval_at(TrigPoly{}, b, {0.3, 0.1, 0.2, 0.7}) == 0.0);
    const TrigPoly half = TrigPoly::constant(0.5);
    CHECK(eval_at(half, b, {0.3, 0.1, 0.2, 0.7}) == 0.5);
    CHECK(eval_at(half, b, {-9.0, 4.0, 1.0, 2.0}) == 0.5);
}

TEST_CASE("derivative examples") {
    const LatticeBasis b{{2.0, 0.0}, {{{2.0, 0.0, 0.0}, {}}}};
    const TrigPoly f = TrigPoly::term(1.0, tx_key({1, 0}, Parity::Sin, {1, 0}, Parity::Sin));
    const TrigPoly dt = differentiate(f, Coord::t, b);
    CHECK(dt.size() == 1);
    CHECK(dt.coefficient(tx_key({1, 0}, Parity::Cos, {1, 0}, Parity::Sin)) == 2.0);

    const TrigPoly g = mono(1.0, Coord::x, {1, 0}, Parity::Cos);
    const TrigPoly dx = differentiate(g, Coord::x, b);
    CHECK(dx.coefficient(tx_key({0, 0}, Parity::Cos, {1, 0}, Parity::Sin)) == -2.0);

    CHECK(differentiate(TrigPoly::constant(3.0), Coord::t, b).empty());
}

TEST_CASE("second time derivative against finite differences") {
    std::mt19937_64 rng(4);
    const double h = 1e-5;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const LatticeBasis b = random_basis(rng);
        const TrigPoly f = random_poly(rng, 3);
        const TrigPoly d2 = differentiate(differentiate(f, Coord::t, b), Coord::t, b);
        const SpacetimePoint p = random_point(rng);
        const std::array<long double, 4> p0{p.t, p.x, p.y, p.z};
        auto at = [&](long double dt) { return eval_long(f, b, {p0[0] + dt, p0[1], p0[2], p0[3]}); };
        const long double hl = h;
        const double fd = static_cast<double>((at(hl) - 2.0L * at(0.0L) + at(-hl)) / (hl * hl));
        const double exact = eval_at(d2, b, p);
        const double ref = std::max(l1(d2), 1e-300);
        worst = std::max(worst, std::abs(fd - exact) / ref);
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("mixed partial derivatives commute") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const LatticeBasis b = random_basis(rng);
        const TrigPoly f = random_poly(rng, 5);
        const TrigPoly xt = differentiate(differentiate(f, Coord::t, b), Coord::x, b);
        const TrigPoly tx = differentiate(differentiate(f, Coord::x, b), Coord::t, b);
        REQUIRE(xt.size() == tx.size());
        for (const auto& [key, amp] : xt.terms()) CHECK(tx.coefficient(key) == doctest::Approx(amp).epsilon(1e-15));
    }
}

TEST_CASE("ring axioms hold pointwise") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        const LatticeBasis bs = random_basis(rng);
        const TrigPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
        const TrigPoly ab_c = (a * b) * c, a_bc = a * (b * c);
        const TrigPoly sum1 = (a + b) + c, sum2 = a + (b + c);
        const TrigPoly dist1 = a * (b + c), dist2 = a * b + a * c;
        const double scale = l1(a) * l1(b) * l1(c) + l1(a) * (l1(b) + l1(c));
        for (int j = 0; j < 10; ++j) {
            const SpacetimePoint p = random_point(rng);
            CHECK(std::abs(eval_at(a * b, bs, p) - eval_at(b * a, bs, p)) <= 1e-12 * scale);
            CHECK(std::abs(eval_at(a + b, bs, p) - eval_at(b + a, bs, p)) <= 1e-12 * scale);
            CHECK(std::abs(eval_at(ab_c, bs, p) - eval_at(a_bc, bs, p)) <= 1e-12 * scale);
            CHECK(std::abs(eval_at(sum1, bs, p) - eval_at(sum2, bs, p)) <= 1e-12 * scale);
            CHECK(std::abs(eval_at(dist1, bs, p) - eval_at(dist2, bs, p)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("symbolic product matches the pointwise product") {
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const LatticeBasis bs = random_basis(rng);
        const TrigPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
        const SpacetimePoint p = random_point(rng);
        const double num = eval_at(a, bs, p) * eval_at(b, bs, p);
        worst = std::max(worst, std::abs(eval_at(a * b, bs, p) - num) / (l1(a) * l1(b)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("vector identities") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const LatticeBasis b = random_basis(rng);
        CHECK(divergence(curl(random_field(rng), b), b).empty());
        CHECK(curl(gradient(random_poly(rng), b), b).empty());
    }
}

TEST_CASE("d'Alembertian of a single plane standing wave vanishes") {
    const LatticeBasis b{{5.0, 0.0}, {{{3.0, 4.0, 0.0}, {}}}};
    HarmonicKey k;
    k.of(Coord::t) = {1, 0};
    k.of(Coord::x) = {1, 0};
    k.of(Coord::y) = {1, 0};
    k.parity = {Parity::Sin, Parity::Cos, Parity::Sin, Parity::Cos};
    CHECK(dalembertian(TrigPoly::term(1.7, k), b).empty());
    CHECK_FALSE(laplacian(TrigPoly::term(1.7, k), b).empty());
}

TEST_CASE("time integration inverts differentiation") {
    std::mt19937_64 rng(9);
    const LatticeBasis b = random_basis(rng);
    TrigPoly f;
    f += TrigPoly::term(1.2, tx_key({1, 0}, Parity::Sin, {1, 1}, Parity::Cos));
    f += TrigPoly::term(-0.4, tx_key({2, -1}, Parity::Cos, {0, 1}, Parity::Sin));
    CHECK(differentiate(integrate_time(f, b), Coord::t, b).approx_equal(f, 1e-14));
    CHECK_THROWS_AS((void)integrate_time(TrigPoly::constant(1.0), b), std::domain_error);
}

TEST_CASE("keys referring to an unused pump slot are rejected") {
    const LatticeBasis single{{1.0, 0.0}, {{{1.0, 0.0, 0.0}, {}}}};
    CHECK_NOTHROW(check_keys_against(TrigPoly::term(1.0, tx_key({1, 0}, Parity::Cos)), single));
    CHECK_THROWS_AS(check_keys_against(TrigPoly::term(1.0, tx_key({1, 1}, Parity::Cos)), single),
                    std::invalid_argument);
}

TEST_CASE("rational snap") {
    CHECK(snap_rational(0.5) == Rational{1, 2});
    CHECK(snap_rational(-3.0) == Rational{-3, 1});
    CHECK(snap_rational(1.0 / 3.0 + 1e-12) == Rational{1, 3});
    CHECK(snap_rational(5.0 / 16.0) == Rational{5, 16});
    CHECK_FALSE(snap_rational(std::acos(-1.0)));
    CHECK_FALSE(snap_rational(1.0 / 17.0));
    CHECK(Rational{-3, 2}.str() == "-3/2");

    const TrigPoly f = TrigPoly::term(6.0, tx_key({1, 0}, Parity::Cos)) + TrigPoly::term(-2.0, tx_key({3, 0}, Parity::Cos));
    const auto s = snap_terms(f, 4.0);
    REQUIRE(s.size() == 2);
    CHECK(s[0].ratio == Rational{3, 2});
    CHECK(s[1].ratio == Rational{-1, 2});
    CHECK_THROWS_AS((void)snap_terms(f, std::sqrt(2.0)), std::domain_error);
    CHECK_THROWS_AS((void)snap_terms(f, 0.0), std::domain_error);
}

TEST_CASE("combination formatting") {
    const ComboSymbols w{{"w1", "w2"}};
    CHECK(format_combo({2, -1}, w) == "2w1-w2");
    CHECK(format_combo({-1, 2}, w) == "2w2-w1");
    CHECK(format_combo({1, -2}, w, true) == "2w2-w1");
    CHECK(format_combo({3, 0}, w) == "3w1");
    CHECK(format_combo({0, 0}, w) == "0");
    CHECK(format_key(tx_key({1, 0}, Parity::Sin, {3, 0}, Parity::Sin)) == "sin(w1 t) sin(3k1x x)");
    CHECK(format_key(HarmonicKey::constant()) == "1");
}

TEST_CASE("lattice basis validation") {
    LatticeBasis b{{5.0, 0.0}, {{{3.0, 4.0, 0.0}, {}}}};
    CHECK_NOTHROW(b.validate());
    CHECK(b.rate(Coord::t, {2, 0}) == 10.0);
    CHECK(b.rate(Coord::y, {-1, 0}) == -4.0);
    b.omega[0] = 5.001;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}

}
