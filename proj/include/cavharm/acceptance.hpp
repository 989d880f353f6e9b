// Acceptance suite: one pass/fail verdict per criterion, each with a pinned
// tolerance and runtime budget. Shared by the test binary and `selftest`.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cavharm/cavity.hpp"

namespace cavharm::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0 = no runtime limit
};

struct Options {
    std::string golden_dir;
    std::uint64_t seed = 20240611;
};

/// The four committed resonance tables.
struct TableCase {
    std::string file;  // name inside the golden directory
    std::string geometry;  // as accepted by --geometry
    std::vector<std::string> pumps;  // as accepted by --pump
    CavityGeometry g;
    std::vector<ModeSpec> modes;
};

[[nodiscard]] const std::vector<TableCase>& table_cases();

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
[[nodiscard]] std::string read_file(const std::string& path);

[[nodiscard]] CriterionResult source_coefficients();
[[nodiscard]] CriterionResult table_regressions(const std::string& golden_dir);
[[nodiscard]] CriterionResult third_harmonic_exclusion(std::uint64_t seed);
[[nodiscard]] CriterionResult plus_mode_exclusion(std::uint64_t seed);
[[nodiscard]] CriterionResult resonant_geometry();
[[nodiscard]] CriterionResult pointwise_sources(std::uint64_t seed);
[[nodiscard]] CriterionResult modal_dynamics();
[[nodiscard]] CriterionResult null_couplings();

/// Runs every criterion in order, calling `on_result` after each.
std::vector<CriterionResult> run_all(const Options& opts,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 third-harmonic exclusion  (0.41 s / 60 s)  detail"
[[nodiscard]] std::string format(const CriterionResult& r);

}  // namespace cavharm::acceptance
