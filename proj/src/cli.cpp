#include "cavharm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cavharm/acceptance.hpp"
#include "cavharm/report.hpp"

#ifndef CAVHARM_GOLDEN_DIR
#define CAVHARM_GOLDEN_DIR "tests/golden"
#endif

namespace cavharm::cli {

namespace {

using nlohmann::json;

// ---- expressions -------------------------------------------------------------

class ExprParser {
public:
    ExprParser(std::string_view text, const std::map<std::string, double>& vars) : s_(text), vars_(vars) {}

    double parse() {
        const double v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail();
        return v;
    }

private:
    [[noreturn]] void fail() const {
        std::string tok = pos_ < s_.size() ? std::string(1, s_[pos_]) : std::string("end of input");
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            std::size_t e = pos_;
            while (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_' || s_[e] == '.')) ++e;
            tok = std::string(s_.substr(pos_, e - pos_));
        }
        throw UsageError("unexpected '" + tok + "' in expression '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    double term() {
        double v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }

    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    double power() {
        const double base = primary();
        if (eat('^')) return std::pow(base, unary());
        return base;
    }

    double primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail();
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) fail();
            return v;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
            if (ec != std::errc()) fail();
            pos_ = static_cast<std::size_t>(end - s_.data());
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt") {
                if (!eat('(')) fail();
                const double v = expr();
                if (!eat(')')) fail();
                return std::sqrt(v);
            }
            if (name == "pi") return std::numbers::pi;
            const auto it = vars_.find(name);
            if (it == vars_.end()) {
                pos_ = start;
                fail();
            }
            return it->second;
        }
        fail();
    }

    std::string_view s_;
    const std::map<std::string, double>& vars_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) return out;
        start = p + 1;
    }
}

int parse_index(std::string_view v, std::string_view token) {
    int out = -1;
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size() || out < 0) {
        throw UsageError("bad mode index '" + std::string(v) + "' in '" + std::string(token) + "'");
    }
    return out;
}

// ---- manifest and output -------------------------------------------------------

struct Common {
    std::string geometry = "1,1,1";
    std::vector<std::string> pumps;
    double kappa = 1.0;
    double beta = 7.0 / 4.0;
    std::string json_path;
    std::string timestamp;
};

json timestamp_json(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env && *env) return std::string(env);
    return nullptr;
}

json manifest(const std::string& command, const std::vector<std::string>& args, const Common& c,
              const std::optional<CavityGeometry>& g, const std::vector<ModeSpec>& pumps,
              std::optional<std::uint64_t> seed) {
    json pj = json::array();
    for (const auto& m : pumps) pj.push_back(to_json(m));
    json argv = json::array();
    for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i]);
    return {{"tool", "cavharm"},
            {"version", kVersion},
            {"command", command},
            {"argv", argv},
            {"constants", to_json(PhysicalConstants{c.kappa, c.beta})},
            {"geometry", g ? to_json(*g) : json(nullptr)},
            {"pumps", pj},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"timestamp", timestamp_json(c.timestamp)}};
}

// Writes the sidecar document; "-" sends it to `out` in place of the text.
void emit(const Common& c, const std::string& text, const json& doc, std::ostream& out) {
    if (c.json_path == "-") {
        out << doc.dump(2) << "\n";
        return;
    }
    out << text;
    if (!c.json_path.empty()) {
        std::ofstream f(c.json_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + c.json_path);
        f << doc.dump(2) << "\n";
    }
}

std::string header(const CavityGeometry& g, const std::vector<ModeSpec>& pumps) {
    std::string s = "pumps:    ";
    for (std::size_t i = 0; i < pumps.size(); ++i) s += (i ? " + " : "") + pumps[i].label();
    s += "\ngeometry: Lx=" + num15(g.lx) + " Ly=" + num15(g.ly) + " Lz=" + num15(g.lz) + "\n";
    return s;
}

std::vector<ModeSpec> parse_pumps(const std::vector<std::string>& texts) {
    if (texts.empty()) throw UsageError("at least one --pump is required");
    std::vector<ModeSpec> out;
    for (const auto& t : texts) out.push_back(parse_mode(t));
    return out;
}

void add_common(CLI::App* app, Common& c, bool with_geometry) {
    if (with_geometry) {
        app->add_option("--geometry", c.geometry, "Cavity lengths Lx,Ly,Lz (expressions)")->capture_default_str();
    }
    app->add_option("--pump", c.pumps, "Pump mode, repeatable: TE011, TM110, 1D:n=2,alpha=0.5");
    app->add_option("--kappa", c.kappa, "Nonlinearity coefficient")->capture_default_str();
    app->add_option("--beta", c.beta, "Second Euler-Heisenberg constant")->capture_default_str();
    app->add_option("--json", c.json_path, "Write the machine-readable document here ('-' for stdout)");
    app->add_option("--timestamp", c.timestamp, "Timestamp recorded in the manifest");
}

// ---- subcommands ----------------------------------------------------------------

const char* axis_label(int a) { return a == 0 ? "x" : (a == 1 ? "y" : "z"); }

int cmd_expand(const std::vector<std::string>& args, const Common& c, const std::string& snap, std::ostream& out) {
    const CavityGeometry g = parse_geometry(c.geometry);
    const std::vector<ModeSpec> pumps = parse_pumps(c.pumps);
    const PhysicalConstants consts{c.kappa, c.beta};
    consts.validate();
    const PumpConfiguration cfg = configure_pumps(g, pumps);
    const WaveSources s = wave_rhs(cfg, consts);

    std::optional<double> scale;
    if (!snap.empty()) {
        const std::map<std::string, double> vars{{"k", c.kappa},
                                                 {"b", c.beta},
                                                 {"F0", pumps[0].amplitude},
                                                 {"w", cfg.basis.omega[0]},
                                                 {"w1", cfg.basis.omega[0]},
                                                 {"w2", cfg.basis.omega[1]}};
        scale = evaluate(snap, vars);
        if (!(*scale != 0.0) || !std::isfinite(*scale)) throw UsageError("--snap scale evaluates to zero: '" + snap + "'");
    }

    std::ostringstream text;
    text << header(g, pumps);
    text << "constants: kappa=" << num15(c.kappa) << " beta=" << num15(c.beta) << "\n";
    if (scale) text << "scale:    " << snap << " = " << num15(*scale) << "\n";
    text << "\n";

    json terms = json::array();
    std::size_t count = 0;
    for (int field = 0; field < 2; ++field) {
        const VectorField& v = field == 0 ? s.e : s.b;
        for (int axis = 0; axis < 3; ++axis) {
            std::vector<SnappedTerm> snapped;
            if (scale) snapped = snap_terms(v[axis], *scale);
            std::size_t i = 0;
            for (const auto& [key, amp] : v[axis].terms()) {
                const std::string comp = std::string(field == 0 ? "S_E." : "S_B.") + axis_label(axis);
                const std::string coef = scale ? snapped[i].ratio.str() : num15(amp);
                text << comp << "  " << coef << "  " << format_key(key) << "\n";
                terms.push_back({{"field", field == 0 ? "E" : "B"},
                                 {"axis", axis_label(axis)},
                                 {"key", to_json(key)},
                                 {"amplitude", round15(amp)},
                                 {"ratio", scale ? json(snapped[i].ratio.str()) : json(nullptr)}});
                ++i;
                ++count;
            }
        }
    }
    text << "\nterms " << count << "\n";

    json doc{{"manifest", manifest("expand", args, c, g, pumps, std::nullopt)},
             {"reference_scale", scale ? json{{"expression", snap}, {"value", round15(*scale)}} : json(nullptr)},
             {"terms", terms}};
    emit(c, text.str(), doc, out);
    return 0;
}

int cmd_table(const std::vector<std::string>& args, const Common& c, std::ostream& out) {
    const CavityGeometry g = parse_geometry(c.geometry);
    const std::vector<ModeSpec> pumps = parse_pumps(c.pumps);
    const ResonanceReport rep = analyze(g, pumps, PhysicalConstants{c.kappa, c.beta});
    json doc = report_json(rep);
    doc["manifest"] = manifest("table", args, c, g, pumps, std::nullopt);
    emit(c, render_table(rep), doc, out);
    return 0;
}

struct GeometryArgs {
    std::string signal;
    std::string sign = "-";
    std::string constraint = "lx=ly";
    std::string scan = "0.1,1";
    double tol = 1e-13;
};

int cmd_geometry(const std::vector<std::string>& args, const Common& c, const GeometryArgs& ga, std::ostream& out) {
    const std::vector<ModeSpec> pumps = parse_pumps(c.pumps);
    if (pumps.size() != 2) throw UsageError("geometry needs exactly two --pump modes");
    const std::array<int, 3> signal = parse_indices(ga.signal);
    if (ga.sign != "-" && ga.sign != "+") throw UsageError("--sign must be '-' or '+', got '" + ga.sign + "'");
    const CombinationSign sign = ga.sign == "+" ? CombinationSign::Plus : CombinationSign::Minus;

    GeometryConstraint gc;
    if (ga.constraint == "lx=ly") {
        gc.kind = ConstraintKind::LxEqualsLy;
    } else if (ga.constraint.rfind("ratio-xy=", 0) == 0) {
        gc.kind = ConstraintKind::RatioXY;
        gc.ratio_xy = evaluate(std::string_view(ga.constraint).substr(9));
    } else {
        throw UsageError("unknown --constraint '" + ga.constraint + "' (lx=ly or ratio-xy=RHO)");
    }
    const auto scan = split(ga.scan, ',');
    if (scan.size() != 2) throw UsageError("--scan needs lo,hi, got '" + ga.scan + "'");
    gc.scan_lo = evaluate(scan[0]);
    gc.scan_hi = evaluate(scan[1]);
    gc.tolerance = ga.tol;
    gc.validate();

    const auto roots = solve_geometry(pumps[0], pumps[1], signal, sign, gc);

    std::ostringstream text;
    text << "pumps:      " << pumps[0].label() << " + " << pumps[1].label() << "\n";
    text << "signal:     (" << signal[0] << ", " << signal[1] << ", " << signal[2] << ") at 2w1 " << ga.sign
         << " w2\n";
    text << "constraint: Lz=1, Lx=1/r, Ly=" << (gc.kind == ConstraintKind::LxEqualsLy ? "Lx" : num15(gc.rho()) + "/r")
         << ", r in [" << num15(gc.scan_lo) << ", " << num15(gc.scan_hi) << "]\n";
    text << "roots:      " << roots.size() << "\n";
    for (const auto& r : roots) {
        text << "r=" << num15(r.ratio) << "  Lx=" << num15(r.geometry.lx) << " Ly=" << num15(r.geometry.ly)
             << " Lz=" << num15(r.geometry.lz) << "  residual=" << num15(r.residual) << "\n";
    }

    json doc{{"manifest", manifest("geometry", args, c, std::nullopt, pumps, std::nullopt)},
             {"signal", signal},
             {"sign", ga.sign},
             {"constraint",
              {{"kind", ga.constraint},
               {"ratio_xy", round15(gc.rho())},
               {"scan", {round15(gc.scan_lo), round15(gc.scan_hi)}},
               {"tolerance", gc.tolerance}}},
             {"roots", roots_json(roots)}};
    emit(c, text.str(), doc, out);
    return 0;
}

struct SimulateArgs {
    double gamma = 0.0;
    double periods = 400.0;
    int steps_per_period = 64;
    std::string series;
    int term = -1;
};

int cmd_simulate(const std::vector<std::string>& args, const Common& c, const SimulateArgs& sa, std::ostream& out) {
    const CavityGeometry g = parse_geometry(c.geometry);
    const std::vector<ModeSpec> pumps = parse_pumps(c.pumps);
    if (!(sa.gamma >= 0.0)) throw UsageError("--gamma must be >= 0");
    if (!(sa.periods > 0.0)) throw UsageError("--periods must be positive");
    if (sa.steps_per_period < 40) throw UsageError("--steps-per-period must be at least 40");
    const ModalRunConfig run{sa.gamma, sa.periods, sa.steps_per_period};
    const ResonanceReport rep = analyze(g, pumps, PhysicalConstants{c.kappa, c.beta});

    if (!sa.series.empty()) {
        if (sa.term < 0 || static_cast<std::size_t>(sa.term) >= rep.records.size()) {
            throw UsageError("--term " + std::to_string(sa.term) + " out of range (0.." +
                             std::to_string(rep.records.size()) + ")");
        }
        std::ofstream f(sa.series, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + sa.series);
        evolve_mode(modal_config(rep.records[static_cast<std::size_t>(sa.term)], run)).write_columns(f);
    }

    const SpectrumSummary s = end_to_end(rep, run);
    json doc = spectrum_json(rep, s);
    doc["manifest"] = manifest("simulate", args, c, g, pumps, std::nullopt);
    doc["run"] = {{"gamma", round15(sa.gamma)}, {"periods", round15(sa.periods)}, {"steps_per_period", sa.steps_per_period}};
    emit(c, render_spectrum(rep, s), doc, out);
    return 0;
}

int cmd_selftest(const std::vector<std::string>& args, const Common& c, std::uint64_t seed,
                 const std::string& golden_dir, std::ostream& out) {
    acceptance::Options opts;
    opts.golden_dir = golden_dir;
    opts.seed = seed;
    json criteria = json::array();
    std::ostringstream text;
    const bool to_stdout = c.json_path == "-";
    const auto results = acceptance::run_all(opts, [&](const acceptance::CriterionResult& r) {
        if (!to_stdout) out << acceptance::format(r) << "\n" << std::flush;
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    });
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    text << "acceptance: " << passed << "/" << results.size() << " passed\n";
    json doc{{"manifest", manifest("selftest", args, c, std::nullopt, {}, seed)}, {"criteria", criteria}};
    emit(c, text.str(), doc, out);
    return passed == static_cast<long>(results.size()) ? 0 : 2;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

double evaluate(std::string_view expr, const std::map<std::string, double>& vars) {
    return ExprParser(expr, vars).parse();
}

CavityGeometry parse_geometry(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw UsageError("--geometry needs Lx,Ly,Lz, got '" + std::string(text) + "'");
    CavityGeometry g{evaluate(parts[0]), evaluate(parts[1]), evaluate(parts[2])};
    for (double l : g.lengths()) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw UsageError("cavity lengths must be positive, got '" + std::string(text) + "'");
        }
    }
    return g;
}

ModeSpec parse_mode(std::string_view text) {
    const std::string token(text);
    auto bad = [&](const std::string& why) { return UsageError("malformed pump '" + token + "': " + why); };
    if (text.size() < 2) throw bad("expected TE, TM or 1D");
    std::string kind(text.substr(0, 2));
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char ch) { return std::toupper(ch); });
    ModeSpec m;
    if (kind == "TE") m.kind = ModeKind::TE;
    else if (kind == "TM") m.kind = ModeKind::TM;
    else if (kind == "1D") m.kind = ModeKind::OneD;
    else throw bad("expected TE, TM or 1D");

    std::string_view rest = text.substr(2);
    const std::size_t colon = rest.find(':');
    const std::string_view digits = rest.substr(0, colon);
    std::string_view params = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    if (colon != std::string_view::npos && params.empty()) throw bad("empty parameter list");

    bool have_n = false, have_p = false, have_q = false;
    if (!digits.empty()) {
        if (m.kind == ModeKind::OneD || digits.size() != 3 ||
            !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw bad("expected three index digits as in TE011");
        }
        m.n = digits[0] - '0';
        m.p = digits[1] - '0';
        m.q = digits[2] - '0';
        have_n = have_p = have_q = true;
    }
    if (!params.empty()) {
        for (std::string_view kv : split(params, ',')) {
            const std::size_t eq = kv.find('=');
            if (eq == std::string_view::npos) throw bad("expected key=value, got '" + std::string(kv) + "'");
            const std::string key(kv.substr(0, eq));
            const std::string_view val = kv.substr(eq + 1);
            if (key == "n" && !have_n) {
                m.n = parse_index(val, text);
                have_n = true;
            } else if (key == "p" && !have_p && m.kind != ModeKind::OneD) {
                m.p = parse_index(val, text);
                have_p = true;
            } else if (key == "q" && !have_q && m.kind != ModeKind::OneD) {
                m.q = parse_index(val, text);
                have_q = true;
            } else if (key == "F0") {
                m.amplitude = evaluate(val);
            } else if (key == "alpha" && m.kind == ModeKind::OneD) {
                m.alpha = evaluate(val);
            } else {
                throw bad("unexpected key '" + key + "'");
            }
        }
    }
    if (m.kind == ModeKind::OneD ? !have_n : !(have_n && have_p && have_q)) throw bad("missing mode indices");
    try {
        m.validate();
    } catch (const InvalidMode& e) {
        throw bad(e.what());
    }
    return m;
}

std::array<int, 3> parse_indices(std::string_view text) {
    const std::string token(text);
    std::array<int, 3> out{};
    if (text.find(',') != std::string_view::npos) {
        const auto parts = split(text, ',');
        if (parts.size() != 3) throw UsageError("bad signal indices '" + token + "'");
        for (int i = 0; i < 3; ++i) out[i] = parse_index(parts[i], text);
        return out;
    }
    if (text.size() != 3 || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw UsageError("bad signal indices '" + token + "'");
    }
    for (int i = 0; i < 3; ++i) out[i] = text[i] - '0';
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonlinear vacuum harmonics in rectangular cavities", "cavharm"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common common;
    std::string snap;
    GeometryArgs ga;
    SimulateArgs sa;
    std::uint64_t seed = acceptance::Options{}.seed;
    std::string golden_dir = CAVHARM_GOLDEN_DIR;

    auto* expand = app.add_subcommand("expand", "List the source terms of the signal wave equations");
    add_common(expand, common, true);
    expand->add_option("--snap", snap, "Reference scale expression (k, b, F0, w, w1, w2, pi) for rational coefficients");

    auto* table = app.add_subcommand("table", "Resonance classification table");
    add_common(table, common, true);

    auto* geometry = app.add_subcommand("geometry", "Cavity ratios where 2w1 +- w2 hits a signal mode");
    add_common(geometry, common, false);
    geometry->add_option("--signal", ga.signal, "Signal mode indices, e.g. 130 or 1,3,0")->required();
    geometry->add_option("--sign", ga.sign, "Combination sign: - or +")->capture_default_str();
    geometry->add_option("--constraint", ga.constraint, "lx=ly or ratio-xy=RHO")->capture_default_str();
    geometry->add_option("--scan", ga.scan, "Scan interval lo,hi for r = Lz/Lx")->capture_default_str();
    geometry->add_option("--tol", ga.tol, "Root tolerance")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Drive every source term's modal oscillator");
    add_common(simulate, common, true);
    simulate->add_option("--gamma", sa.gamma, "Damping coefficient")->capture_default_str();
    simulate->add_option("--periods", sa.periods, "Run length in periods")->capture_default_str();
    simulate->add_option("--steps-per-period", sa.steps_per_period, "RK4 steps per shortest period")->capture_default_str();
    simulate->add_option("--series", sa.series, "Write the (t, q) series of one term to this file");
    simulate->add_option("--term", sa.term, "Record index for --series");

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--seed", seed, "Seed for the randomized checks")->capture_default_str();
    selftest->add_option("--golden-dir", golden_dir, "Directory with the golden tables")->capture_default_str();
    selftest->add_option("--json", common.json_path, "Write the machine-readable document here ('-' for stdout)");
    selftest->add_option("--timestamp", common.timestamp, "Timestamp recorded in the manifest");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        if (args.size() > 1 && !args[1].empty() && args[1][0] != '-' && !app.got_subcommand(args[1])) {
            err << "cavharm: error: unknown subcommand '" << args[1] << "'\n";
            return 1;
        }
        err << "cavharm: error: " << one_line(e.what()) << "\n";
        return 1;
    }

    try {
        if (expand->parsed()) return cmd_expand(args, common, snap, out);
        if (table->parsed()) return cmd_table(args, common, out);
        if (geometry->parsed()) return cmd_geometry(args, common, ga, out);
        if (simulate->parsed()) return cmd_simulate(args, common, sa, out);
        if (selftest->parsed()) return cmd_selftest(args, common, seed, golden_dir, out);
    } catch (const std::invalid_argument& e) {
        err << "cavharm: error: " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "cavharm: error: " << one_line(e.what()) << "\n";
        return 2;
    }
    return 1;
}

}  // namespace cavharm::cli
