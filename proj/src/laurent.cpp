#include "trop/laurent.hpp"

#include <cmath>

namespace trop {

namespace {

Rational rat_pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("zero coordinate raised to a negative exponent");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    int k = e > 0 ? e : -e;
    Rational out(1);
    while (k > 0) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

}  // namespace

Rational eval_laurent(const LaurentPoly& f, const VecQ& x) {
    if (static_cast<int>(x.size()) != f.nvars())
        throw std::invalid_argument("point dimension does not match nvars");
    Rational acc(0);
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (int j = 0; j < f.nvars(); ++j) term *= rat_pow(x[j], e[j]);
        acc += term;
    }
    return acc;
}

double eval_laurent(const LaurentPoly& f, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != f.nvars())
        throw std::invalid_argument("point dimension does not match nvars");
    double acc = 0.0;
    for (const auto& [e, c] : f.terms()) {
        double term = rat_to_double(c);
        for (int j = 0; j < f.nvars(); ++j) {
            if (x[j] == 0.0 && e[j] < 0)
                throw std::domain_error("zero coordinate raised to a negative exponent");
            term *= std::pow(x[j], e[j]);
        }
        acc += term;
    }
    return acc;
}

int monomial_sign(const Rational& coeff, const ExpVec& e, const OrthantSign& s) {
    int sign = coeff > 0 ? 1 : -1;
    for (size_t j = 0; j < s.size(); ++j)
        if (s[j] < 0 && (e[j] % 2 != 0)) sign = -sign;
    return sign;
}

std::pair<LaurentPoly, LaurentPoly> sign_split(const LaurentPoly& f, const OrthantSign& s) {
    check_orthant(s, f.nvars());
    LaurentPoly plus(f.nvars());
    LaurentPoly minus(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (monomial_sign(c, e, s) > 0)
            plus.add_term(e, c);
        else
            minus.add_term(e, -c);
    }
    return {plus, minus};
}

}  // namespace trop
