#pragma once

#include <vector>

#include "trop/laurent.hpp"
#include "trop/rational.hpp"

namespace trop {

// Element of Z^r with the lexicographic order, most significant coordinate
// first. The convex subgroups are exactly the trailing-coordinate subgroups
// Lambda_j = {first r-j coordinates zero}.
struct LexGroupElement {
    std::vector<long long> coords;

    size_t rank() const { return coords.size(); }
    bool is_zero() const;
    int sign() const;  // -1, 0, +1 by the leading nonzero coordinate

    friend LexGroupElement operator+(const LexGroupElement& a, const LexGroupElement& b);
    friend LexGroupElement operator-(const LexGroupElement& a, const LexGroupElement& b);
    friend LexGroupElement operator*(long long k, const LexGroupElement& a);
    friend bool operator==(const LexGroupElement& a, const LexGroupElement& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const LexGroupElement& a, const LexGroupElement& b);
};

// A rational together with the two infinities, the codomain of group division.
struct ExtendedRational {
    enum class Kind { finite, plus_inf, minus_inf };
    Kind kind = Kind::finite;
    Rational value;

    static ExtendedRational finite(Rational v) { return {Kind::finite, std::move(v)}; }
    static ExtendedRational pos_inf() { return {Kind::plus_inf, Rational(0)}; }
    static ExtendedRational neg_inf() { return {Kind::minus_inf, Rational(0)}; }

    bool is_finite() const { return kind == Kind::finite; }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
    }
};

// Number of significant coordinates: r minus the count of leading zeros.
// The zero element has height 0.
int height(const LexGroupElement& x);

// lambda / mu through the quotient embeddings: the ratio of leading
// significant coordinates when heights agree, 0 when lambda sits strictly
// deeper, and a signed infinity when lambda dominates. mu must be nonzero.
ExtendedRational group_divide(const LexGroupElement& lambda, const LexGroupElement& mu);

// Divides every generator value by a fixed positive reference element of
// height s, collapsing heights below s to 0. Errors out when no value
// reaches height s (the reduction would be degenerate) or a value exceeds it.
std::vector<ExtendedRational> rank_reduce(const std::vector<LexGroupElement>& values, int s,
                                          const LexGroupElement& lambda_ref);
// Same with the canonical reference: the unit vector of height s.
std::vector<ExtendedRational> rank_reduce(const std::vector<LexGroupElement>& values, int s,
                                          size_t rank);

// Monomial (weight) valuation on Laurent polynomials: v(f) is the min of
// -<xi, w> over the support. Exact rational weights.
struct MonomialValuation {
    VecQ xi;

    static MonomialValuation from_doubles(const std::vector<double>& w);
};

ExtendedRational monval_apply(const MonomialValuation& v, const LaurentPoly& f);

// Exponents attaining the minimum of -<xi, w>; empty for the zero polynomial.
std::vector<ExpVec> monval_argmin(const MonomialValuation& v, const LaurentPoly& f);

// The point of the tropical side this valuation sits over: xi itself.
VecQ z_map(const MonomialValuation& v);

// Necessary condition for v to descend to the quotient by the ideal: on every
// generator the minimum must be attained at least twice. Vacuously true for
// an empty list.
bool descend_valuation(const MonomialValuation& v, const std::vector<LaurentPoly>& gens);

}  // namespace trop
