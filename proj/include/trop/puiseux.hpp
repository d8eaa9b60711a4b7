#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trop/laurent.hpp"
#include "trop/rational.hpp"
#include "trop/trop_poly.hpp"

namespace trop {

// Thrown when an answer would depend on coefficients beyond a series'
// truncation horizon.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Truncated Puiseux series sum c_k t^(k/ram). Exponent keys are stored over a
// common ramification index; everything at or past `trunc` (same units) is
// unknown. A default-constructed series is the exact zero.
class PuiseuxSeries {
public:
    static constexpr long long kExact = std::numeric_limits<long long>::max();
    static constexpr long long kDefaultOrder = 24;  // t-order horizon for new series

    PuiseuxSeries() : ram_(1), trunc_(kExact) {}

    static PuiseuxSeries constant(const Rational& c);
    static PuiseuxSeries monomial(const Rational& coeff, const Rational& exponent);

    long long ram() const { return ram_; }
    bool known_zero() const { return terms_.empty() && trunc_ == kExact; }
    bool no_visible_terms() const { return terms_.empty(); }

    // Truncation order in t units; empty when the series is exact.
    std::optional<Rational> truncation_order() const {
        if (trunc_ == kExact) return std::nullopt;
        return Rational(trunc_, ram_);
    }

    // (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<Rational, Rational>> term_list() const;

    Rational coeff_at(const Rational& exponent) const;

    void add_term(const Rational& exponent, const Rational& coeff);
    void set_truncation(const Rational& order);

    friend PuiseuxSeries ps_add(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries ps_neg(PuiseuxSeries a);
    friend PuiseuxSeries ps_mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries ps_inv(const PuiseuxSeries& a);

    // Lowest exponent over ram; nullopt encodes +infinity (exact zero).
    // Throws PrecisionError when all visible terms were truncated away.
    friend std::optional<Rational> val(const PuiseuxSeries& a);

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

private:
    PuiseuxSeries lifted(long long to_ram) const;
    void normalize_default_trunc();

    long long ram_;
    std::map<long long, Rational> terms_;
    long long trunc_;
};

// Parses literals like "t^3 - 2*t^(1/2) + 1" or "t^-1 + 1/2".
PuiseuxSeries parse_puiseux(const std::string& text);

// Polynomial in one variable over the Puiseux field, or several variables for
// tropicalization. Terms with known-zero series are not stored.
struct ValuedPoly {
    int nvars = 1;
    std::map<ExpVec, PuiseuxSeries> terms;

    explicit ValuedPoly(int n = 1) : nvars(n) { check_nvars(n); }
    void add_term(const ExpVec& e, PuiseuxSeries s);
};

// Tropicalization over the valued field: coefficient -val(a_w) on the support.
TropPoly tropicalize_valued(const ValuedPoly& f);

struct NewtonRoots {
    std::vector<Rational> finite;  // root valuations, sorted, repeated by multiplicity
    int infinite_count = 0;        // roots of valuation +infinity (t | the polynomial)
};

// Root valuations of sum coeffs[i] * Y^i from the lower convex hull of
// (i, val(coeffs[i])): valuations are the negated edge slopes, multiplicity
// the edge width. Exact.
NewtonRoots newton_polygon_roots(const std::vector<PuiseuxSeries>& coeffs);

// Coordinatewise -valuation, the non-archimedean amoeba image of a point
// with nonzero Puiseux coordinates.
VecQ nonarch_amoeba_point(const std::vector<PuiseuxSeries>& x);

// Finite tie locus of a univariate tropical polynomial with the envelope
// slope jump as multiplicity, computed from pairwise ties and exact
// membership (no hull involved). Sorted, repeated by multiplicity.
std::vector<Rational> univariate_trop_roots(const TropPoly& P);

}  // namespace trop
