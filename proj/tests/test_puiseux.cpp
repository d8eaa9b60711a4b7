#include <algorithm>
#include <random>

#include "doctest.h"
#include "trop/puiseux.hpp"

using namespace trop;

namespace {

// coefficient vector of prod_i (Y - t^{v_i}); the k-th coefficient is a signed
// sum of monomials of one sign, so no cancellation can occur.
std::vector<PuiseuxSeries> poly_from_root_valuations(const std::vector<Rational>& vs) {
    std::vector<PuiseuxSeries> coeffs{PuiseuxSeries::constant(Rational(1))};
    for (const Rational& v : vs) {
        std::vector<PuiseuxSeries> next(coeffs.size() + 1);
        const PuiseuxSeries root = PuiseuxSeries::monomial(Rational(-1), v);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = ps_add(next[k + 1], coeffs[k]);          // Y * coeffs[k] Y^k
            next[k] = ps_add(next[k], ps_mul(root, coeffs[k]));    // -t^v * coeffs[k]
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace

TEST_CASE("parser round trip and valuation") {
    const PuiseuxSeries s = parse_puiseux("t^3 - 2*t^(1/2) + 1");
    CHECK(s.coeff_at(Rational(3)) == Rational(1));
    CHECK(s.coeff_at(Rational(1, 2)) == Rational(-2));
    CHECK(s.coeff_at(Rational(0)) == Rational(1));
    CHECK(val(s) == Rational(0));

    const PuiseuxSeries u = parse_puiseux("t^-1 + 1/2");
    CHECK(val(u) == Rational(-1));
    CHECK(u.coeff_at(Rational(0)) == Rational(1, 2));

    CHECK_THROWS_AS(parse_puiseux("t^^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_puiseux(""), std::invalid_argument);
}

TEST_CASE("series arithmetic is exact where visible") {
    const PuiseuxSeries one = PuiseuxSeries::constant(Rational(1));
    const PuiseuxSeries t = PuiseuxSeries::monomial(Rational(1), Rational(1));
    const PuiseuxSeries a = ps_add(one, t);                 // 1 + t
    const PuiseuxSeries b = ps_add(one, ps_neg(t));         // 1 - t
    const PuiseuxSeries prod = ps_mul(a, b);                // 1 - t^2
    CHECK(prod.coeff_at(Rational(0)) == Rational(1));
    CHECK(prod.coeff_at(Rational(1)) == Rational(0));
    CHECK(prod.coeff_at(Rational(2)) == Rational(-1));

    // geometric series: 1 / (1 - t) has every visible coefficient 1
    const PuiseuxSeries inv = ps_inv(b);
    for (int k = 0; k < 20; ++k) CHECK(inv.coeff_at(Rational(k)) == Rational(1));

    // a * a^{-1} = 1 up to the horizon
    const PuiseuxSeries unit = ps_mul(a, ps_inv(a));
    CHECK(unit.coeff_at(Rational(0)) == Rational(1));
    for (int k = 1; k < 20; ++k) CHECK(unit.coeff_at(Rational(k)) == Rational(0));

    // exact monomials invert exactly
    const PuiseuxSeries m = PuiseuxSeries::monomial(Rational(3), Rational(-2));
    const PuiseuxSeries mi = ps_inv(m);
    CHECK(val(mi) == Rational(2));
    CHECK(mi.coeff_at(Rational(2)) == Rational(1, 3));

    CHECK_THROWS_AS(ps_inv(PuiseuxSeries()), std::domain_error);
}

TEST_CASE("valuation distinguishes exact zero from truncated-to-nothing") {
    CHECK(!val(PuiseuxSeries()).has_value());  // exact zero: +infinity
    const PuiseuxSeries t = parse_puiseux("t");
    const PuiseuxSeries cancel = ps_add(t, ps_neg(t));
    CHECK(cancel.no_visible_terms());
    CHECK(!cancel.known_zero());
    CHECK_THROWS_AS(val(cancel), PrecisionError);
    CHECK_THROWS_AS(ps_inv(cancel), PrecisionError);
}

TEST_CASE("ramification is handled through the common index") {
    const PuiseuxSeries a = parse_puiseux("t^(1/2)");
    const PuiseuxSeries b = parse_puiseux("t^(1/3)");
    const PuiseuxSeries s = ps_add(a, b);
    CHECK(val(s) == Rational(1, 3));
    const PuiseuxSeries p = ps_mul(a, b);
    CHECK(val(p) == Rational(5, 6));
}

TEST_CASE("lower hull of the worked example gives valuations 1 and 2") {
    // t^3 + t*Y + Y^2
    std::vector<PuiseuxSeries> coeffs{parse_puiseux("t^3"), parse_puiseux("t"),
                                      parse_puiseux("1")};
    const NewtonRoots nr = newton_polygon_roots(coeffs);
    REQUIRE(nr.finite.size() == 2);
    CHECK(nr.finite[0] == Rational(1));
    CHECK(nr.finite[1] == Rational(2));
    CHECK(nr.infinite_count == 0);

    // dropping the constant term sends one root to valuation +infinity
    std::vector<PuiseuxSeries> shifted{PuiseuxSeries(), parse_puiseux("t"), parse_puiseux("1")};
    const NewtonRoots nr2 = newton_polygon_roots(shifted);
    CHECK(nr2.infinite_count == 1);
    REQUIRE(nr2.finite.size() == 1);
    CHECK(nr2.finite[0] == Rational(1));

    CHECK_THROWS_AS(newton_polygon_roots({PuiseuxSeries()}), std::domain_error);
}

TEST_CASE("tropical roots of the example polynomial") {
    ValuedPoly f(1);
    f.add_term({0}, parse_puiseux("t^3"));
    f.add_term({1}, parse_puiseux("t"));
    f.add_term({2}, parse_puiseux("1"));
    const TropPoly P = tropicalize_valued(f);
    // coefficients are -3, -1, 0 by degree
    CHECK(P.terms().at(ExpVec{0}) == Rational(-3));
    CHECK(P.terms().at(ExpVec{1}) == Rational(-1));
    CHECK(P.terms().at(ExpVec{2}) == Rational(0));
    const auto roots = univariate_trop_roots(P);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-2));
    CHECK(roots[1] == Rational(-1));
}

TEST_CASE("double roots carry multiplicity two") {
    TropPoly P(1);
    P.set_term({0}, Rational(0));
    P.set_term({2}, Rational(0));  // max(0, 2X): slope jumps by 2 at X = 0
    const auto roots = univariate_trop_roots(P);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(0));
    CHECK(roots[1] == Rational(0));
}

TEST_CASE("root valuations match tropical roots on random split polynomials") {
    std::mt19937_64 rng(307);
    std::uniform_int_distribution<long long> num(-8, 8);
    std::uniform_int_distribution<long long> den(1, 4);
    std::uniform_int_distribution<int> degd(1, 6);
    for (int rep = 0; rep < 200; ++rep) {
        const int deg = degd(rng);
        std::vector<Rational> vs;
        for (int i = 0; i < deg; ++i) vs.push_back(Rational(num(rng), den(rng)));
        const auto coeffs = poly_from_root_valuations(vs);

        const NewtonRoots nr = newton_polygon_roots(coeffs);
        std::vector<Rational> want = vs;
        std::sort(want.begin(), want.end());
        REQUIRE(nr.finite.size() == want.size());
        CHECK(nr.finite == want);
        CHECK(nr.infinite_count == 0);

        // tropical side: the negated valuations, with multiplicity
        ValuedPoly f(1);
        for (size_t k = 0; k < coeffs.size(); ++k)
            f.add_term({static_cast<int>(k)}, coeffs[k]);
        std::vector<Rational> troots = univariate_trop_roots(tropicalize_valued(f));
        std::vector<Rational> negv;
        for (const auto& v : want) negv.push_back(-v);
        std::sort(negv.begin(), negv.end());
        std::sort(troots.begin(), troots.end());
        CHECK(troots == negv);
    }
}

TEST_CASE("coordinatewise negated valuation of a series point") {
    std::vector<PuiseuxSeries> x{parse_puiseux("t^2"), parse_puiseux("t^-1 + 1")};
    const VecQ u = nonarch_amoeba_point(x);
    REQUIRE(u.size() == 2);
    CHECK(u[0] == Rational(-2));
    CHECK(u[1] == Rational(1));
    CHECK_THROWS_AS(nonarch_amoeba_point({PuiseuxSeries()}), std::domain_error);
}

TEST_CASE("tropicalization drops exact zeros and rejects the zero polynomial") {
    ValuedPoly f(1);
    f.add_term({0}, PuiseuxSeries());
    f.add_term({1}, parse_puiseux("t"));
    const TropPoly P = tropicalize_valued(f);
    CHECK(P.support_size() == 1);
    ValuedPoly z(1);
    CHECK_THROWS_AS(tropicalize_valued(z), std::domain_error);
}
