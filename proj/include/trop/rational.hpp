#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using VecQ = std::vector<Rational>;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    // the two-argument constructor rejects negative denominators
    BigInt n(num), d(den);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

// Exact conversion; every finite double is a rational with a power-of-two
// denominator.
inline Rational rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite double has no rational value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p", "-p" or "p/q"; whitespace is not consumed.
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline std::string rat_str(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace trop
