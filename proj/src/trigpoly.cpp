#include "cavharm/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cavharm {

namespace {

int idx(Coord c) { return static_cast<int>(c); }

bool all_zero(const Coeff2& c) { return c[0] == 0 && c[1] == 0; }

// First nonzero coefficient negative -> argument must be negated.
bool needs_flip(const Coeff2& c) {
    for (int v : c) {
        if (v != 0) return v < 0;
    }
    return false;
}

Coeff2 add(const Coeff2& a, const Coeff2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Coeff2 sub(const Coeff2& a, const Coeff2& b) { return {a[0] - b[0], a[1] - b[1]}; }

double h(Parity p, double arg) { return p == Parity::Sin ? std::sin(arg) : std::cos(arg); }

// One of the two product-to-sum outputs of h_a(u) * h_b(v).
struct Branch {
    Coeff2 coeff;
    Parity parity;
    double sign;
};

std::array<Branch, 2> product_to_sum(Parity pa, const Coeff2& a, Parity pb, const Coeff2& b) {
    const Coeff2 diff = sub(a, b);
    const Coeff2 sum = add(a, b);
    if (pa == Parity::Cos && pb == Parity::Cos) {
        return {{{diff, Parity::Cos, 1.0}, {sum, Parity::Cos, 1.0}}};
    }
    if (pa == Parity::Sin && pb == Parity::Sin) {
        return {{{diff, Parity::Cos, 1.0}, {sum, Parity::Cos, -1.0}}};
    }
    if (pa == Parity::Sin) {  // sin a cos b
        return {{{sum, Parity::Sin, 1.0}, {diff, Parity::Sin, 1.0}}};
    }
    // cos a sin b
    return {{{sum, Parity::Sin, 1.0}, {diff, Parity::Sin, -1.0}}};
}

}  // namespace

// ---- LatticeBasis -------------------------------------------------------

double LatticeBasis::base_rate(Coord coord, int slot) const {
    if (coord == Coord::t) return omega[slot];
    return k[slot][idx(coord) - 1];
}

double LatticeBasis::rate(Coord coord, const Coeff2& c) const {
    return c[0] * base_rate(coord, 0) + c[1] * base_rate(coord, 1);
}

bool LatticeBasis::slot_used(int slot) const {
    return omega[slot] != 0.0 || k[slot][0] != 0.0 || k[slot][1] != 0.0 || k[slot][2] != 0.0;
}

void LatticeBasis::validate() const {
    for (int s = 0; s < 2; ++s) {
        if (!slot_used(s)) continue;
        const double w2 = omega[s] * omega[s];
        const double k2 = k[s][0] * k[s][0] + k[s][1] * k[s][1] + k[s][2] * k[s][2];
        if (!(w2 > 0.0) || std::abs(w2 - k2) > 1e-12 * w2) {
            throw std::invalid_argument("lattice basis slot " + std::to_string(s + 1) +
                                        " violates the dispersion relation");
        }
    }
}

// ---- canonical form -----------------------------------------------------

std::optional<TrigTerm> canonicalize(double amplitude, HarmonicKey key) {
    if (amplitude == 0.0) return std::nullopt;
    for (int c = 0; c < 4; ++c) {
        if (needs_flip(key.coeff[c])) {
            key.coeff[c] = {-key.coeff[c][0], -key.coeff[c][1]};
            if (key.parity[c] == Parity::Sin) amplitude = -amplitude;
        }
        if (key.parity[c] == Parity::Sin && all_zero(key.coeff[c])) return std::nullopt;
    }
    return TrigTerm{amplitude, key};
}

bool is_canonical(const HarmonicKey& key) {
    for (int c = 0; c < 4; ++c) {
        if (needs_flip(key.coeff[c])) return false;
        if (key.parity[c] == Parity::Sin && all_zero(key.coeff[c])) return false;
    }
    return true;
}

// ---- TrigPoly -----------------------------------------------------------

TrigPoly TrigPoly::constant(double c) { return term(c, HarmonicKey::constant()); }

TrigPoly TrigPoly::term(double amplitude, const HarmonicKey& key) {
    TrigPoly p;
    if (auto t = canonicalize(amplitude, key)) {
        p.terms_.emplace(t->key, t->amplitude);
        p.scale_ = std::abs(t->amplitude);
    }
    return p;
}

TrigPoly TrigPoly::from_terms(const std::vector<TrigTerm>& terms) {
    TrigPoly p;
    for (const auto& t : terms) {
        p.scale_ = std::max(p.scale_, std::abs(t.amplitude));
        p.accumulate(t.amplitude, t.key);
    }
    p.prune();
    return p;
}

double TrigPoly::max_abs() const {
    double m = 0.0;
    for (const auto& [k, a] : terms_) m = std::max(m, std::abs(a));
    return m;
}

double TrigPoly::coefficient(const HarmonicKey& key) const {
    auto t = canonicalize(1.0, key);
    if (!t) return 0.0;
    auto it = terms_.find(t->key);
    return it == terms_.end() ? 0.0 : it->second * t->amplitude;
}

std::vector<TrigTerm> TrigPoly::to_terms() const {
    std::vector<TrigTerm> out;
    out.reserve(terms_.size());
    for (const auto& [k, a] : terms_) out.push_back({a, k});
    return out;
}

void TrigPoly::accumulate(double amplitude, const HarmonicKey& key) {
    auto t = canonicalize(amplitude, key);
    if (!t) return;
    terms_[t->key] += t->amplitude;
}

void TrigPoly::prune() {
    const double floor = kDropThreshold * (scale_ > 0.0 ? scale_ : 1.0);
    std::erase_if(terms_, [floor](const auto& kv) { return std::abs(kv.second) <= floor; });
    if (terms_.empty()) scale_ = 0.0;
}

TrigPoly TrigPoly::rescaled(double bound) const {
    TrigPoly p = *this;
    p.scale_ = std::max(bound, p.max_abs());
    p.prune();
    return p;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
    scale_ = std::max(scale_, rhs.scale_);
    for (const auto& [k, a] : rhs.terms_) terms_[k] += a;
    prune();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& rhs) {
    scale_ = std::max(scale_, rhs.scale_);
    for (const auto& [k, a] : rhs.terms_) terms_[k] -= a;
    prune();
    return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        scale_ = 0.0;
        return *this;
    }
    for (auto& [k, a] : terms_) a *= s;
    scale_ *= std::abs(s);
    return *this;
}

bool TrigPoly::approx_equal(const TrigPoly& other, double rel_tol) const {
    const double ref = std::max({max_abs(), other.max_abs(), 1e-300});
    const double tol = rel_tol * ref;
    auto check = [tol](const TermMap& a, const TermMap& b) {
        for (const auto& [k, v] : a) {
            auto it = b.find(k);
            const double w = it == b.end() ? 0.0 : it->second;
            if (std::abs(v - w) > tol) return false;
        }
        return true;
    };
    return check(terms_, other.terms_) && check(other.terms_, terms_);
}

TrigPoly multiply(const TrigPoly& a, const TrigPoly& b) {
    if (a.empty() || b.empty()) return {};
    std::map<HarmonicKey, double> acc;
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            std::array<std::array<Branch, 2>, 4> branches;
            for (int c = 0; c < 4; ++c) {
                branches[c] = product_to_sum(ka.parity[c], ka.coeff[c], kb.parity[c], kb.coeff[c]);
            }
            const double base = va * vb / 16.0;
            for (int mask = 0; mask < 16; ++mask) {
                HarmonicKey key;
                double amp = base;
                for (int c = 0; c < 4; ++c) {
                    const Branch& br = branches[c][(mask >> c) & 1];
                    key.coeff[c] = br.coeff;
                    key.parity[c] = br.parity;
                    amp *= br.sign;
                }
                if (auto t = canonicalize(amp, key)) acc[t->key] += t->amplitude;
            }
        }
    }
    std::vector<TrigTerm> terms;
    terms.reserve(acc.size());
    for (const auto& [k, v] : acc) terms.push_back({v, k});
    return TrigPoly::from_terms(terms).rescaled(a.scale() * b.scale());
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return multiply(a, b); }

TrigPoly differentiate(const TrigPoly& f, Coord coord, const LatticeBasis& basis) {
    std::vector<TrigTerm> terms;
    double max_rate = 0.0;
    for (const auto& [key, amp] : f.terms()) {
        const double r = basis.rate(coord, key.of(coord));
        max_rate = std::max(max_rate, std::abs(r));
        if (r == 0.0) continue;
        HarmonicKey k = key;
        auto& p = k.parity[static_cast<int>(coord)];
        double a = amp * r;
        if (p == Parity::Sin) {
            p = Parity::Cos;
        } else {
            p = Parity::Sin;
            a = -a;
        }
        terms.push_back({a, k});
    }
    return TrigPoly::from_terms(terms).rescaled(f.scale() * max_rate);
}


TrigPoly integrate_time(const TrigPoly& f, const LatticeBasis& basis) {
    std::vector<TrigTerm> terms;
    double min_rate = 0.0;
    for (const auto& [key, amp] : f.terms()) {
        const double r = basis.rate(Coord::t, key.of(Coord::t));
        if (r == 0.0) throw std::domain_error("integrate_time: term with zero time rate");
        min_rate = min_rate == 0.0 ? std::abs(r) : std::min(min_rate, std::abs(r));
        HarmonicKey k = key;
        auto& p = k.parity[0];
        double a = amp / r;
        if (p == Parity::Sin) {
            p = Parity::Cos;
            a = -a;
        } else {
            p = Parity::Sin;
        }
        terms.push_back({a, k});
    }
    if (terms.empty()) return {};
    return TrigPoly::from_terms(terms).rescaled(f.scale() / min_rate);
}

double eval_term(const TrigTerm& term, const LatticeBasis& basis, const SpacetimePoint& p) {
    double v = term.amplitude;
    for (Coord c : kAllCoords) {
        v *= h(term.key.parity_of(c), basis.rate(c, term.key.of(c)) * p[c]);
    }
    return v;
}

double eval_at(const TrigPoly& f, const LatticeBasis& basis, const SpacetimePoint& p) {
    double sum = 0.0;
    for (const auto& [key, amp] : f.terms()) sum += eval_term({amp, key}, basis, p);
    return sum;
}

void check_keys_against(const TrigPoly& f, const LatticeBasis& basis) {
    for (const auto& [key, amp] : f.terms()) {
        for (Coord c : kAllCoords) {
            for (int s = 0; s < 2; ++s) {
                if (key.of(c)[s] != 0 && basis.base_rate(c, s) == 0.0) {
                    throw std::invalid_argument("term " + format_key(key) +
                                                " uses a lattice direction with zero rate");
                }
            }
        }
    }
}

// ---- rational snap ------------------------------------------------------

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> snap_rational(double x, int max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    for (int d = 1; d <= max_den; ++d) {
        const double n = std::round(x * d);
        if (std::abs(n / d - x) <= tol) {
            return Rational{static_cast<long>(n), static_cast<long>(d)};
        }
    }
    return std::nullopt;
}

std::vector<SnappedTerm> snap_terms(const TrigPoly& f, double reference_scale, int max_den,
                                    double tol) {
    if (!(reference_scale != 0.0) || !std::isfinite(reference_scale)) {
        throw std::domain_error("snap reference scale must be finite and nonzero");
    }
    std::vector<SnappedTerm> out;
    for (const auto& [key, amp] : f.terms()) {
        const double ratio = amp / reference_scale;
        auto r = snap_rational(ratio, max_den, tol);
        if (!r) {
            std::ostringstream os;
            os.precision(15);
            os << "coefficient " << ratio << " of " << format_key(key)
               << " is not a rational with denominator <= " << max_den;
            throw std::domain_error(os.str());
        }
        out.push_back({key, *r});
    }
    return out;
}

// ---- formatting ---------------------------------------------------------

std::string format_combo(const Coeff2& c, const ComboSymbols& symbols, bool as_magnitude) {
    Coeff2 v = c;
    if (as_magnitude) {
        const int net = v[0] + v[1];
        if (net < 0 || (net == 0 && needs_flip(v))) v = {-v[0], -v[1]};
    }
    if (all_zero(v)) return "0";
    std::string out;
    auto piece = [&](int coef, const std::string& sym, bool first) {
        std::string s;
        if (coef < 0) {
            s += "-";
        } else if (!first) {
            s += "+";
        }
        if (std::abs(coef) != 1) s += std::to_string(std::abs(coef));
        s += sym;
        return s;
    };
    bool first = true;
    for (int pass = 0; pass < 2; ++pass) {
        for (int s = 0; s < 2; ++s) {
            if (v[s] == 0 || (pass == 0) != (v[s] > 0)) continue;
            out += piece(v[s], symbols.slot[s], first);
            first = false;
        }
    }
    return out;
}

std::string format_key(const HarmonicKey& key) {
    static const std::array<ComboSymbols, 4> symbols{{
        {{"w1", "w2"}},
        {{"k1x", "k2x"}},
        {{"k1y", "k2y"}},
        {{"k1z", "k2z"}},
    }};
    static const std::array<const char*, 4> var{"t", "x", "y", "z"};
    std::string out;
    for (int c = 0; c < 4; ++c) {
        if (all_zero(key.coeff[c])) continue;
        const auto& cf = key.coeff[c];
        const bool single = cf[0] == 0 || cf[1] == 0;
        std::string arg = format_combo(cf, symbols[c]);
        if (!single) arg = "(" + arg + ")";
        if (!out.empty()) out += " ";
        out += key.parity[c] == Parity::Sin ? "sin(" : "cos(";
        out += arg + " " + var[c] + ")";
    }
    return out.empty() ? "1" : out;
}

}  // namespace cavharm
