// Text and JSON renderings of source expansions, resonance reports,
// geometry roots and modal spectra. All numbers carry 15 significant digits.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cavharm/resonance.hpp"
#include "cavharm/simulate.hpp"

namespace cavharm {

/// Rounds to 15 significant digits so JSON output stays at that precision.
[[nodiscard]] double round15(double v);
[[nodiscard]] std::string num15(double v);

[[nodiscard]] nlohmann::json to_json(const CavityGeometry& g);
[[nodiscard]] nlohmann::json to_json(const ModeSpec& m);
[[nodiscard]] nlohmann::json to_json(const PhysicalConstants& c);
[[nodiscard]] nlohmann::json to_json(const HarmonicKey& key);

/// Fixed-width table: one line per wavenumber group, frequencies marked
/// [R] resonant, [R self] pump self-resonance, [P] parity mismatch,
/// [0] vanishing amplitude.
[[nodiscard]] std::string render_table(const ResonanceReport& report);

[[nodiscard]] nlohmann::json report_json(const ResonanceReport& report);

[[nodiscard]] nlohmann::json roots_json(const std::vector<GeometryRoot>& roots);

[[nodiscard]] std::string render_spectrum(const ResonanceReport& report, const SpectrumSummary& s);
[[nodiscard]] nlohmann::json spectrum_json(const ResonanceReport& report, const SpectrumSummary& s);

}  // namespace cavharm
