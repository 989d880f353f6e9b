// Exact trigonometric polynomials over an integer lattice of pump
// frequencies and wavevector components.
//
// A term is A * h(c.w t) * h(a_x.k_x x) * h(a_y.k_y y) * h(a_z.k_z z) where
// h is sin or cos and every argument is an integer combination of at most two
// pump rates. Keys hold only the integers; the numeric rates live in a
// LatticeBasis, so merging terms never compares floating-point values.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cavharm {

/// Spacetime coordinate index. Order matches HarmonicKey storage.
enum class Coord : std::uint8_t { t = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<Coord, 4> kAllCoords{Coord::t, Coord::x, Coord::y, Coord::z};
inline constexpr std::array<Coord, 3> kSpatialCoords{Coord::x, Coord::y, Coord::z};

enum class Parity : std::uint8_t { Cos = 0, Sin = 1 };

/// Integer coefficients (c1, c2) of one argument: c1*r1 + c2*r2.
using Coeff2 = std::array<int, 2>;

/// Numeric pump data: angular frequency and wavevector per slot.
/// A single-pump problem leaves slot 2 zeroed.
struct LatticeBasis {
    std::array<double, 2> omega{};
    std::array<std::array<double, 3>, 2> k{};

    /// Rate multiplying `coord` for the given integer combination.
    [[nodiscard]] double rate(Coord coord, const Coeff2& c) const;

    /// Base rate of slot `slot` (0 or 1) along `coord`.
    [[nodiscard]] double base_rate(Coord coord, int slot) const;

    [[nodiscard]] bool slot_used(int slot) const;

    /// Throws std::invalid_argument unless each used slot satisfies
    /// omega^2 = |k|^2 to relative 1e-12.
    void validate() const;
};

struct HarmonicKey {
    std::array<Coeff2, 4> coeff{};
    std::array<Parity, 4> parity{Parity::Cos, Parity::Cos, Parity::Cos, Parity::Cos};

    [[nodiscard]] const Coeff2& of(Coord c) const { return coeff[static_cast<int>(c)]; }
    [[nodiscard]] Coeff2& of(Coord c) { return coeff[static_cast<int>(c)]; }
    [[nodiscard]] Parity parity_of(Coord c) const { return parity[static_cast<int>(c)]; }

    /// Key with all coefficients zero and all parities cos: the constant 1.
    [[nodiscard]] static HarmonicKey constant() { return {}; }

    /// The same integer lattice point, ignoring parities.
    [[nodiscard]] bool same_lattice_point(const HarmonicKey& other) const {
        return coeff == other.coeff;
    }

    auto operator<=>(const HarmonicKey&) const = default;
    bool operator==(const HarmonicKey&) const = default;
};

struct TrigTerm {
    double amplitude = 0.0;
    HarmonicKey key;
};

/// Sign-normalizes a raw term: in each coordinate the first nonzero
/// coefficient becomes non-negative (sin absorbs the sign into the
/// amplitude, cos is even). Returns nothing for identically zero terms:
/// zero amplitude, or sin of an all-zero argument.
[[nodiscard]] std::optional<TrigTerm> canonicalize(double amplitude, HarmonicKey key);

[[nodiscard]] bool is_canonical(const HarmonicKey& key);

/// Relative floor for deleting cancelled amplitudes.
inline constexpr double kDropThreshold = 1e-12;

/// A sum of canonical terms, unique by key.
///
/// Besides its terms a polynomial tracks `scale`, an upper bound on the
/// magnitude of the contributions that produced it. Terms with
/// |A| <= kDropThreshold * scale are roundoff from exact cancellations and
/// are deleted. For a freshly built polynomial the scale is max |A|.
class TrigPoly {
public:
    using TermMap = std::map<HarmonicKey, double>;

    TrigPoly() = default;

    /// Constant polynomial c * cos(0).
    static TrigPoly constant(double c);

    /// Single term, canonicalized (possibly empty).
    static TrigPoly term(double amplitude, const HarmonicKey& key);

    static TrigPoly from_terms(const std::vector<TrigTerm>& terms);

    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] double scale() const { return scale_; }
    [[nodiscard]] double max_abs() const;

    /// Amplitude stored under `key` after canonicalizing it; 0 if absent.
    [[nodiscard]] double coefficient(const HarmonicKey& key) const;

    [[nodiscard]] std::vector<TrigTerm> to_terms() const;

    TrigPoly& operator+=(const TrigPoly& rhs);
    TrigPoly& operator-=(const TrigPoly& rhs);
    TrigPoly& operator*=(double s);

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, double s) { return a *= s; }
    friend TrigPoly operator*(double s, TrigPoly a) { return a *= s; }
    friend TrigPoly operator-(TrigPoly a) { return a *= -1.0; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

    /// Term-set equality (scale is bookkeeping and ignored).
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

    /// Equality up to a relative amplitude tolerance.
    [[nodiscard]] bool approx_equal(const TrigPoly& other, double rel_tol) const;

    /// Re-applies the drop threshold. Idempotent.
    void prune();

    /// Copy whose magnitude bound is raised to `bound` (never below max |A|),
    /// then pruned. Used by operations that know the size of the
    /// contributions that cancelled.
    [[nodiscard]] TrigPoly rescaled(double bound) const;

private:
    void accumulate(double amplitude, const HarmonicKey& key);

    TermMap terms_;
    double scale_ = 0.0;
};

/// Product-to-sum multiplication of two canonical polynomials.
[[nodiscard]] TrigPoly multiply(const TrigPoly& a, const TrigPoly& b);

/// d/d(coord). Each term picks up its numeric argument rate; sin->cos,
/// cos->-sin.
[[nodiscard]] TrigPoly differentiate(const TrigPoly& f, Coord coord, const LatticeBasis& basis);

/// Time antiderivative with zero mean. Throws std::domain_error if a term
/// has zero time rate (it is not oscillatory).
[[nodiscard]] TrigPoly integrate_time(const TrigPoly& f, const LatticeBasis& basis);

struct SpacetimePoint {
    double t = 0, x = 0, y = 0, z = 0;
    [[nodiscard]] double operator[](Coord c) const {
        switch (c) {
            case Coord::t: return t;
            case Coord::x: return x;
            case Coord::y: return y;
            case Coord::z: return z;
        }
        return 0.0;
    }
};

[[nodiscard]] double eval_at(const TrigPoly& f, const LatticeBasis& basis, const SpacetimePoint& p);
[[nodiscard]] double eval_term(const TrigTerm& term, const LatticeBasis& basis, const SpacetimePoint& p);

/// Throws std::invalid_argument if any key uses a lattice direction whose
/// numeric base rate is exactly zero (e.g. a second pump in a single-pump
/// basis). Such keys would alias the constant and break merging.
void check_keys_against(const TrigPoly& f, const LatticeBasis& basis);

// ---- rational snap -------------------------------------------------------

struct Rational {
    long num = 0;
    long den = 1;
    bool operator==(const Rational&) const = default;
    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string str() const;
};

/// Nearest rational with denominator <= max_den, if within `tol` of x.
[[nodiscard]] std::optional<Rational> snap_rational(double x, int max_den = 16, double tol = 1e-9);

struct SnappedTerm {
    HarmonicKey key;
    Rational ratio;
};

/// Divides every amplitude by `reference_scale` and snaps it. Throws
/// std::domain_error naming the first term that does not snap.
[[nodiscard]] std::vector<SnappedTerm> snap_terms(const TrigPoly& f, double reference_scale,
                                                  int max_den = 16, double tol = 1e-9);

// ---- formatting ----------------------------------------------------------

/// Symbols used when printing integer combinations, e.g. {"w1","w2"}.
struct ComboSymbols {
    std::array<std::string, 2> slot;
};

/// "2w1-w2", "3w1", "0". Positive parts are printed first. With
/// `as_magnitude` the overall sign is flipped when that gives a positive net
/// coefficient, which is how table labels read (parity-free magnitudes).
[[nodiscard]] std::string format_combo(const Coeff2& c, const ComboSymbols& symbols,
                                       bool as_magnitude = false);

/// Human-readable factor list, e.g. "sin((2w1-w2)t) cos(k1x x)".
[[nodiscard]] std::string format_key(const HarmonicKey& key);

}  // namespace cavharm
