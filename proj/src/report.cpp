#include "cavharm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cavharm {

namespace {

const char* axis_name(int a) { return a == 0 ? "x" : (a == 1 ? "y" : "z"); }

std::string marker(const SourceTermRecord& r) {
    switch (r.verdict) {
        case Verdict::Resonant: return r.self_resonance ? " [R self]" : " [R]";
        case Verdict::ParityMismatch: return " [P]";
        case Verdict::VanishingAmplitude: return " [0]";
        case Verdict::NonResonant: return "";
    }
    return "";
}

nlohmann::json coeff_json(const Coeff2& c) { return nlohmann::json::array({c[0], c[1]}); }

std::string pumps_line(const std::vector<ModeSpec>& pumps) {
    std::string s;
    for (const auto& m : pumps) {
        if (!s.empty()) s += " + ";
        s += m.label();
    }
    return s;
}

}  // namespace

double round15(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string num15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

nlohmann::json to_json(const CavityGeometry& g) {
    return {{"lx", round15(g.lx)}, {"ly", round15(g.ly)}, {"lz", round15(g.lz)}};
}

nlohmann::json to_json(const ModeSpec& m) {
    static const char* kinds[] = {"1D", "TE", "TM"};
    return {{"label", m.label()},
            {"kind", kinds[static_cast<int>(m.kind)]},
            {"indices", {m.n, m.p, m.q}},
            {"amplitude", round15(m.amplitude)},
            {"alpha", round15(m.alpha)}};
}

nlohmann::json to_json(const PhysicalConstants& c) {
    return {{"kappa", round15(c.kappa)}, {"beta", round15(c.beta)}};
}

nlohmann::json to_json(const HarmonicKey& key) {
    nlohmann::json coeff = nlohmann::json::array();
    nlohmann::json parity = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) {
        coeff.push_back(coeff_json(key.coeff[c]));
        parity.push_back(key.parity[c] == Parity::Sin ? "sin" : "cos");
    }
    return {{"coeff", coeff}, {"parity", parity}, {"text", format_key(key)}};
}

std::string render_table(const ResonanceReport& report) {
    const LabelStyle style = LabelStyle::for_pumps(report.pumps);
    std::vector<std::pair<std::string, std::string>> lines;
    std::size_t width = std::string("wavenumbers").size();
    for (const auto& row : report.rows) {
        std::string freqs;
        for (std::size_t idx : row.records) {
            const auto& r = report.records[idx];
            if (!freqs.empty()) freqs += ", ";
            freqs += style.frequency(r.time_key()) + marker(r);
        }
        std::string label = style.wavenumbers(row.spatial);
        width = std::max(width, label.size());
        lines.emplace_back(std::move(label), std::move(freqs));
    }

    std::ostringstream os;
    os << "pumps:    " << pumps_line(report.pumps) << "\n";
    os << "geometry: Lx=" << num15(report.geometry.lx) << " Ly=" << num15(report.geometry.ly)
       << " Lz=" << num15(report.geometry.lz) << "\n\n";
    auto pad = [width](const std::string& s) { return s + std::string(width - s.size(), ' '); };
    os << pad("wavenumbers") << " | eigenfrequencies\n";
    os << std::string(width, '-') << "-+-" << std::string(16, '-') << "\n";
    for (const auto& [label, freqs] : lines) os << pad(label) << " | " << freqs << "\n";
    const VerdictCounts c = report.counts();
    os << "\nresonant " << c.resonant << " (self " << c.self_resonant << "), non-resonant " << c.non_resonant
       << ", vanishing " << c.vanishing << ", parity-mismatch " << c.parity_mismatch << "\n";
    return os.str();
}

nlohmann::json report_json(const ResonanceReport& report) {
    const LabelStyle style = LabelStyle::for_pumps(report.pumps);
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : r.components) {
            comps.push_back({{"field", c.field == FieldKind::E ? "E" : "B"},
                             {"axis", axis_name(c.axis)},
                             {"key", format_key(c.key)},
                             {"amplitude", round15(c.amplitude)}});
        }
        nlohmann::json lattice = nlohmann::json::array();
        for (const auto& c : r.lattice) lattice.push_back(coeff_json(c));
        records.push_back({{"wavenumbers", style.wavenumbers(r.spatial_key())},
                           {"frequency", style.frequency(r.time_key())},
                           {"lattice", lattice},
                           {"omega", round15(r.omega)},
                           {"k", {round15(r.k[0]), round15(r.k[1]), round15(r.k[2])}},
                           {"mode_indices", r.mode_indices},
                           {"amplitude", round15(r.amplitude)},
                           {"dispersion_residual",
                            std::isfinite(r.dispersion_residual) ? nlohmann::json(round15(r.dispersion_residual))
                                                                 : nlohmann::json(nullptr)},
                           {"verdict", to_string(r.verdict)},
                           {"self_resonance", r.self_resonance},
                           {"components", comps}});
    }
    nlohmann::json pumps = nlohmann::json::array();
    for (const auto& m : report.pumps) pumps.push_back(to_json(m));
    const VerdictCounts c = report.counts();
    return {{"geometry", to_json(report.geometry)},
            {"pumps", pumps},
            {"records", records},
            {"verdict_counts",
             {{"resonant", c.resonant},
              {"self_resonant", c.self_resonant},
              {"non_resonant", c.non_resonant},
              {"vanishing", c.vanishing},
              {"parity_mismatch", c.parity_mismatch}}}};
}

nlohmann::json roots_json(const std::vector<GeometryRoot>& roots) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : roots) {
        out.push_back({{"ratio", round15(r.ratio)}, {"geometry", to_json(r.geometry)}, {"residual", round15(r.residual)}});
    }
    return out;
}

std::string render_spectrum(const ResonanceReport& report, const SpectrumSummary& s) {
    const LabelStyle style = LabelStyle::for_pumps(report.pumps);
    std::ostringstream os;
    os << "pumps:    " << pumps_line(report.pumps) << "\n";
    os << "geometry: Lx=" << num15(report.geometry.lx) << " Ly=" << num15(report.geometry.ly)
       << " Lz=" << num15(report.geometry.lz) << "\n\n";
    std::size_t shown = 0;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& e = s.entries[i];
        if (!e.accumulates()) continue;
        const auto& r = report.records[i];
        os << "accumulates: " << style.wavenumbers(r.spatial_key()) << " @ " << style.frequency(r.time_key())
           << "  omega=" << num15(e.omega_drive) << " regime=" << to_string(e.regime)
           << (e.self_resonance ? " (pump self-resonance)" : "") << "\n";
        ++shown;
    }
    if (shown == 0) os << "accumulates: none\n";
    os << "\nterms " << s.entries.size() << ", accumulating " << s.accumulating() << "\n";
    return os.str();
}

nlohmann::json spectrum_json(const ResonanceReport& report, const SpectrumSummary& s) {
    const LabelStyle style = LabelStyle::for_pumps(report.pumps);
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& e = s.entries[i];
        const auto& r = report.records[i];
        entries.push_back({{"wavenumbers", style.wavenumbers(r.spatial_key())},
                           {"frequency", style.frequency(r.time_key())},
                           {"omega_drive", round15(e.omega_drive)},
                           {"omega_r", round15(e.omega_r)},
                           {"drive_amplitude", round15(e.drive_amplitude)},
                           {"verdict", to_string(e.verdict)},
                           {"self_resonance", e.self_resonance},
                           {"regime", to_string(e.regime)},
                           {"slope", round15(e.slope)},
                           {"r2", round15(e.r2)},
                           {"envelope_max", round15(e.envelope_max)},
                           {"steady_amplitude", round15(e.steady)},
                           {"oracle", std::isfinite(e.oracle) ? nlohmann::json(round15(e.oracle)) : nlohmann::json(nullptr)},
                           {"oracle_deviation", std::isfinite(e.oracle_deviation)
                                                    ? nlohmann::json(round15(e.oracle_deviation))
                                                    : nlohmann::json(nullptr)}});
    }
    return {{"entries", entries}, {"accumulating", s.accumulating()}};
}

}  // namespace cavharm
