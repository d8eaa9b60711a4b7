#include <cmath>
#include <random>

#include "doctest.h"
#include "trop/semifield.hpp"

using namespace trop;

TEST_CASE("minus infinity is the additive identity and multiplicative absorber") {
    const TropValue a(3.5);
    CHECK(trop_add(TropValue::ninf(), a) == a);
    CHECK(trop_add(a, TropValue::ninf()) == a);
    CHECK(trop_mul(TropValue::ninf(), a).is_ninf());
    CHECK(trop_mul(a, TropValue::ninf()).is_ninf());
    CHECK(trop_mul(TropValue::one(), a) == a);
    CHECK_THROWS_AS(TropValue::ninf().value(), std::domain_error);
}

TEST_CASE("semiring laws hold exactly on doubles") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = d(rng), b = d(rng), c = d(rng);
        CHECK(trop_add(a, b) == trop_add(b, a));
        CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
        CHECK(trop_add(a, a) == a);  // idempotent
        CHECK(trop_mul(a, b) == trop_mul(b, a));
        // max distributes over +: a + max(b,c) = max(a+b, a+c)
        CHECK(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
    }
}

TEST_CASE("scale map turns products into sums") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(0.01, 100.0);
    std::uniform_real_distribution<double> hs(1e-3, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const DequantParam p{hs(rng)};
        const double x = d(rng), y = d(rng);
        const double lhs = deq_value(p, x * y);
        const double rhs = deq_value(p, x) + deq_value(p, y);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
    CHECK_THROWS_AS(deq_value(DequantParam{1.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(deq_value(DequantParam{1.0}, -2.0), std::domain_error);
    CHECK_THROWS_AS(deq_value(DequantParam{0.0}, 1.0), std::domain_error);
}

TEST_CASE("smoothed sum at a pinned point") {
    // Independent high-precision evaluation of
    // 3.05 + 0.1*log(1 + exp((3 - 3.05)/0.1)).
    const double want = 3.0974076984180106681;
    const double got = deq_add(DequantParam{0.1}, 3.0, 3.05);
    CHECK(std::abs(got - want) <= 1e-14 * std::abs(want));
}

TEST_CASE("smoothed sum is sandwiched between max and max + h log 2") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    std::uniform_real_distribution<double> hs(1e-6, 10.0);
    const double ln2 = std::log(2.0);
    for (int i = 0; i < 20000; ++i) {
        const double a = d(rng), b = d(rng), h = hs(rng);
        const double s = deq_add(DequantParam{h}, a, b);
        const double m = std::max(a, b);
        const double scale = 1.0 + std::abs(m);
        CHECK(s >= m - 1e-12 * scale);
        CHECK(s <= m + h * ln2 + 1e-12 * scale);
    }
}

TEST_CASE("h = 0 is the tropical operation itself, not a division by zero") {
    const DequantParam p{0.0};
    CHECK(p.tropical());
    CHECK(deq_add(p, TropValue(2.0), TropValue(5.0)) == TropValue(5.0));
    CHECK(deq_add(p, TropValue::ninf(), TropValue(5.0)) == TropValue(5.0));
    CHECK(deq_mul(p, TropValue(2.0), TropValue(5.0)) == TropValue(7.0));
}

TEST_CASE("smoothed sum passes minus infinity through untouched") {
    const DequantParam p{0.5};
    CHECK(deq_add(p, TropValue::ninf(), TropValue(1.0)) == TropValue(1.0));
    CHECK(deq_add(p, TropValue::ninf(), TropValue::ninf()).is_ninf());
}

TEST_CASE("huge magnitudes do not overflow the smoothed sum") {
    const double s = deq_add(DequantParam{1e-6}, 1e300, -1e300);
    CHECK(std::isfinite(s));
    CHECK(s == 1e300);
    const double t = deq_add(DequantParam{10.0}, 1e308, 1e308);
    CHECK(std::isfinite(t));
}

TEST_CASE("bad scales are rejected") {
    CHECK_THROWS_AS(DequantParam{-1.0}.validate(), std::domain_error);
    CHECK_THROWS_AS(deq_add(DequantParam{-0.5}, 1.0, 2.0), std::domain_error);
}
