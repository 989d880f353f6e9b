#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cavharm/acceptance.hpp"
#include "cavharm/report.hpp"
#include "cavharm/resonance.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cavharm;

namespace {

constexpr double kPi = std::numbers::pi;

ResonanceReport run(const CavityGeometry& g, std::vector<ModeSpec> pumps, PhysicalConstants c = {}) {
    return analyze(g, pumps, c);
}

std::array<Coeff2, 4> lattice(Coeff2 t, Coeff2 x, Coeff2 y = {0, 0}, Coeff2 z = {0, 0}) { return {t, x, y, z}; }

std::size_t non_self_resonant(const ResonanceReport& r) {
    std::size_t n = 0;
    for (const auto& rec : r.records) n += rec.verdict == Verdict::Resonant && !rec.self_resonance;
    return n;
}

// Closed-form resonant ratio r = Lz/Lx for TE011 + TM110 -> 130 with Lx = Ly:
// 2 sqrt(r^2 + 1) - sqrt(2) r = sqrt(10) r  =>  r^2 = sqrt(5) - 2.
const double kResonantRatio = std::sqrt(std::sqrt(5.0) - 2.0);

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("resonance") {

TEST_CASE("single 1D pump: only the pump itself resonates") {
    const auto r = run({kPi, 10, 10}, {ModeSpec::one_d(1)});
    REQUIRE(r.records.size() == 3);
    const auto* self = r.find(lattice({1, 0}, {1, 0}));
    REQUIRE(self != nullptr);
    CHECK(self->verdict == Verdict::Resonant);
    CHECK(self->self_resonance);
    CHECK(self->mode_indices == std::array<int, 3>{1, 0, 0});
    REQUIRE(r.find(lattice({3, 0}, {1, 0})) != nullptr);
    CHECK(r.find(lattice({3, 0}, {1, 0}))->verdict == Verdict::NonResonant);
    REQUIRE(r.find(lattice({1, 0}, {3, 0})) != nullptr);
    CHECK(r.find(lattice({1, 0}, {3, 0}))->verdict == Verdict::NonResonant);
    // 3w at 3k would satisfy dispersion, but no such term is generated
    CHECK(r.find(lattice({3, 0}, {3, 0})) == nullptr);

    const auto c = r.counts();
    CHECK(c.resonant == 1);
    CHECK(c.self_resonant == 1);
    CHECK(c.non_resonant == 2);
}

TEST_CASE("tables render as the stored golden files") {
    for (const auto& tc : acceptance::table_cases()) {
        CAPTURE(tc.file);
        const auto r = analyze(tc.g, tc.modes, PhysicalConstants{});
        CHECK(render_table(r) == slurp(std::string(CAVHARM_GOLDEN_DIR) + "/" + tc.file));
    }
}

TEST_CASE("third harmonic never resonates for a single pump") {
    std::mt19937_64 rng(30);
    std::uniform_real_distribution<double> len(0.3, 3.0);
    std::uniform_int_distribution<int> idx(0, 3);
    int done = 0;
    while (done < 40) {
        ModeSpec m = (rng() & 1) ? ModeSpec::te(idx(rng), idx(rng), idx(rng)) : ModeSpec::tm(idx(rng), idx(rng), idx(rng));
        if (done % 4 == 0) m = ModeSpec::one_d(1 + idx(rng), len(rng));
        try {
            m.validate();
        } catch (const InvalidMode&) {
            continue;
        }
        ++done;
        const auto r = run({len(rng), len(rng), len(rng)}, {m});
        bool self_found = false;
        for (const auto& rec : r.records) {
            if (rec.time_key() == Coeff2{3, 0}) CHECK(rec.verdict != Verdict::Resonant);
            if (rec.verdict == Verdict::Resonant) {
                CHECK(rec.self_resonance);
                self_found = true;
            }
        }
        CHECK(self_found);
    }
}

TEST_CASE("record frequencies and wavevectors follow from the lattice point") {
    const CavityGeometry g{0.9, 1.4, 0.6};
    const auto r = run(g, {ModeSpec::te(0, 1, 1), ModeSpec::tm(2, 1, 1)});
    for (const auto& rec : r.records) {
        const auto& t = rec.time_key();
        CHECK(rec.omega == doctest::Approx(std::abs(t[0] * r.basis.omega[0] + t[1] * r.basis.omega[1])).epsilon(1e-14));
        for (int i = 0; i < 3; ++i) {
            const auto& s = rec.lattice[i + 1];
            const double k = std::abs(s[0] * r.basis.k[0][i] + s[1] * r.basis.k[1][i]);
            CHECK(rec.k[i] == doctest::Approx(k).epsilon(1e-14));
            // integer mode index along each axis
            CHECK(rec.k[i] == doctest::Approx(rec.mode_indices[i] * kPi / g.lengths()[i]).epsilon(1e-12));
        }
        if (rec.verdict == Verdict::Resonant) {
            CHECK(rec.dispersion_residual <= 1e-9);
            CHECK(rec.omega == doctest::Approx(eigenfrequency(g, rec.mode_indices[0], rec.mode_indices[1],
                                                              rec.mode_indices[2]))
                                   .epsilon(1e-9));
        }
        if (rec.verdict == Verdict::VanishingAmplitude) CHECK(rec.amplitude == 0.0);
        if (rec.verdict != Verdict::VanishingAmplitude) CHECK(rec.amplitude > 0.0);
    }
}

TEST_CASE("records are sorted and grouped into rows") {
    const auto r = run({1, 1.3, 0.7}, {ModeSpec::tm(1, 2, 1), ModeSpec::tm(2, 1, 3)});
    for (std::size_t i = 1; i < r.records.size(); ++i) {
        CHECK(r.records[i - 1].mode_indices <= r.records[i].mode_indices);
    }
    std::size_t total = 0;
    for (const auto& row : r.rows) {
        for (auto idx : row.records) CHECK(r.records[idx].spatial_key() == row.spatial);
        total += row.records.size();
    }
    CHECK(total == r.records.size());
}

TEST_CASE("combined mode resonates at the tuned geometry only") {
    const std::vector<ModeSpec> pumps{ModeSpec::te(0, 1, 1), ModeSpec::tm(1, 1, 0)};
    const CavityGeometry tuned{1.0 / kResonantRatio, 1.0 / kResonantRatio, 1.0};
    const auto r = run(tuned, pumps);
    REQUIRE(non_self_resonant(r) == 1);
    for (const auto& rec : r.records) {
        if (rec.verdict != Verdict::Resonant || rec.self_resonance) continue;
        CHECK(rec.mode_indices == std::array<int, 3>{1, 3, 0});
        CHECK((rec.time_key() == Coeff2{2, -1}));
        CHECK(rec.omega == doctest::Approx(eigenfrequency(tuned, 1, 3, 0)).epsilon(1e-12));
    }
    // p1 = p2 here, so (0, 2p2-p1, q1) lands on the pump's own mode too:
    // several lattice points, but only the two pump modes
    std::set<std::array<int, 3>> self_modes;
    for (const auto& rec : r.records) {
        if (rec.self_resonance) self_modes.insert(rec.mode_indices);
    }
    CHECK(self_modes == std::set<std::array<int, 3>>{{0, 1, 1}, {1, 1, 0}});

    const CavityGeometry detuned{1.05 / kResonantRatio, 1.05 / kResonantRatio, 1.0};
    CHECK(non_self_resonant(run(detuned, pumps)) == 0);
}

TEST_CASE("parallel pumps: combined cells vanish") {
    const CavityGeometry g{1, 1.3, 0.7};
    const std::vector<std::pair<ModeSpec, ModeSpec>> pairs{
        {ModeSpec::tm(1, 1, 0), ModeSpec::tm(2, 2, 0)},
        {ModeSpec::te(1, 2, 1), ModeSpec::te(2, 4, 2)},
        {ModeSpec::tm(1, 2, 1), ModeSpec::tm(1, 2, 1, 0.5)},
    };
    for (const auto& [a, b] : pairs) {
        CAPTURE(a.label());
        const auto r = run(g, {a, b});
        for (const Coeff2 combo : {Coeff2{2, 1}, Coeff2{2, -1}, Coeff2{1, 2}, Coeff2{-1, 2}}) {
            std::array<Coeff2, 4> lat{combo, {0, 0}, {0, 0}, {0, 0}};
            for (int i = 0; i < 3; ++i) {
                if (a.indices()[i] != 0) lat[i + 1] = combo;
            }
            // lattice keys are stored with the first nonzero coefficient positive
            if (combo[0] < 0) {
                for (auto& c : lat) c = {-c[0], -c[1]};
            }
            const auto* rec = r.find(lat);
            if (rec != nullptr) CHECK(rec->verdict == Verdict::VanishingAmplitude);
        }
    }
}

TEST_CASE("non-parallel pumps: combined cells carry amplitude") {
    const auto r = run({1, 1.3, 0.7}, {ModeSpec::tm(1, 2, 1), ModeSpec::tm(2, 1, 3)});
    const auto* rec = r.find(lattice({2, 1}, {2, 1}, {2, 1}, {2, 1}));
    REQUIRE(rec != nullptr);
    CHECK(rec->verdict != Verdict::VanishingAmplitude);
    CHECK(rec->amplitude > 0.0);
}

TEST_CASE("triangle inequality for the plus combination") {
    // parallel, same direction: equality
    const auto par = triangle_exclusion({1, 0, 0}, {2, 0, 0});
    CHECK(par.parallel);
    CHECK_FALSE(par.strict);
    CHECK(par.exclusion == PlusModeExclusion::ParallelVanishing);
    CHECK(par.lhs == doctest::Approx(5.0));
    CHECK(par.rhs == doctest::Approx(5.0));

    const auto perp = triangle_exclusion({1, 0, 0}, {0, 1, 0});
    CHECK(perp.strict);
    CHECK(perp.exclusion == PlusModeExclusion::StrictInequality);
    CHECK(perp.lhs == doctest::Approx(3.0));
    CHECK(perp.rhs == doctest::Approx(std::sqrt(5.0)));

    CHECK(triangle_exclusion({1, 1, 0}, {-1, -1, 0}).strict);
    CHECK_THROWS_AS((void)triangle_exclusion({0, 0, 0}, {1, 0, 0}), std::invalid_argument);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const std::array<double, 3> k1{u(rng), u(rng), u(rng)}, k2{u(rng), u(rng), u(rng)};
        const auto t = triangle_exclusion(k1, k2);
        CHECK(t.lhs >= t.rhs);
        CHECK(t.strict);
    }
}

TEST_CASE("resonant geometry search") {
    GeometryConstraint lxly;
    const auto roots = solve_geometry(ModeSpec::te(0, 1, 1), ModeSpec::tm(1, 1, 0), {1, 3, 0},
                                      CombinationSign::Minus, lxly);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].ratio - kResonantRatio) <= 1e-10);
    CHECK(roots[0].geometry.lx == doctest::Approx(1.0 / kResonantRatio).epsilon(1e-10));
    CHECK(roots[0].geometry.lz == 1.0);
    CHECK(std::abs(roots[0].residual) <= 1e-10);

    CHECK(solve_geometry(ModeSpec::te(0, 1, 1), ModeSpec::tm(1, 1, 0), {1, 3, 2}, CombinationSign::Minus, lxly)
              .empty());
    CHECK(solve_geometry(ModeSpec::te(0, 1, 1), ModeSpec::tm(1, 1, 0), {1, 3, 0}, CombinationSign::Plus, lxly)
              .empty());
}

TEST_CASE("resonant geometry search with a fixed Ly/Lx") {
    GeometryConstraint c;
    c.kind = ConstraintKind::RatioXY;
    c.ratio_xy = 1.2;
    const ModeSpec p1 = ModeSpec::te(0, 1, 1), p2 = ModeSpec::tm(1, 1, 0);
    const auto roots = solve_geometry(p1, p2, {1, 3, 0}, CombinationSign::Minus, c);
    REQUIRE_FALSE(roots.empty());
    for (const auto& root : roots) {
        const auto& g = root.geometry;
        CHECK(g.ly / g.lx == doctest::Approx(1.2).epsilon(1e-14));
        const double lhs = 2.0 * eigenfrequency(g, 0, 1, 1) - eigenfrequency(g, 1, 1, 0);
        const double rhs = eigenfrequency(g, 1, 3, 0);
        CHECK(std::abs(lhs - rhs) / rhs <= 1e-10);
        const auto r = run(g, {p1, p2});
        CHECK(non_self_resonant(r) >= 1);
    }
}

TEST_CASE("geometry search input checks") {
    const ModeSpec p1 = ModeSpec::te(0, 1, 1), p2 = ModeSpec::tm(1, 1, 0);
    CHECK_NOTHROW(check_signal_candidate(p1, p2, {1, 3, 0}));
    CHECK_THROWS_AS(check_signal_candidate(p1, p2, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(check_signal_candidate(p1, p2, {-1, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(check_signal_candidate(p1, p2, {4, 3, 0}), std::invalid_argument);

    GeometryConstraint bad;
    bad.scan_lo = 1.0;
    bad.scan_hi = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    GeometryConstraint bad_ratio;
    bad_ratio.kind = ConstraintKind::RatioXY;
    bad_ratio.ratio_xy = -1.0;
    CHECK_THROWS_AS(bad_ratio.validate(), std::invalid_argument);
    GeometryConstraint bad_tol;
    bad_tol.tolerance = 0.0;
    CHECK_THROWS_AS(bad_tol.validate(), std::invalid_argument);
    CHECK_THROWS_AS((void)solve_geometry(p1, p2, {4, 3, 0}, CombinationSign::Minus, GeometryConstraint{}),
                    std::invalid_argument);
}

TEST_CASE("JSON report counts match the records") {
    const auto r = run({1, 1.3, 0.7}, {ModeSpec::tm(1, 2, 1), ModeSpec::tm(2, 1, 3)});
    const auto j = report_json(r);
    REQUIRE(j["records"].size() == r.records.size());
    std::map<std::string, std::size_t> seen;
    for (const auto& rec : j["records"]) seen[rec["verdict"].get<std::string>()]++;
    const auto c = r.counts();
    CHECK(j["verdict_counts"]["resonant"] == c.resonant);
    CHECK(j["verdict_counts"]["non_resonant"] == c.non_resonant);
    CHECK(seen[to_string(Verdict::Resonant)] == c.resonant);
    CHECK(seen[to_string(Verdict::NonResonant)] == c.non_resonant);
    CHECK(seen[to_string(Verdict::VanishingAmplitude)] == c.vanishing);
    CHECK(c.resonant + c.non_resonant + c.vanishing + c.parity_mismatch == r.records.size());
}

TEST_CASE("no coupling, empty spectrum") {
    const auto r = run({1, 1.3, 0.7}, {ModeSpec::tm(1, 2, 1)}, PhysicalConstants{0.0, 1.75});
    CHECK(r.records.empty());
    CHECK(r.rows.empty());
}

}
