#include "trop/trop_poly.hpp"

#include <cmath>

namespace trop {

namespace {

void check_eval(const TropPoly& P, size_t point_dim) {
    if (P.empty()) throw std::domain_error("tropical polynomial with empty support");
    if (static_cast<int>(point_dim) != P.nvars())
        throw std::invalid_argument("point dimension does not match nvars");
}

}  // namespace

TropEval eval_trop(const TropPoly& P, const std::vector<double>& x) {
    check_eval(P, x.size());
    TropEval out;
    bool first = true;
    for (const auto& [e, c] : P.terms()) {
        double t = rat_to_double(c);
        for (int j = 0; j < P.nvars(); ++j) t += x[j] * e[j];
        if (first || t > out.value) {
            out.value = t;
            out.argmax.clear();
            out.argmax.push_back(e);
            first = false;
        } else if (t == out.value) {
            out.argmax.push_back(e);
        }
    }
    return out;
}

TropEvalExact eval_trop(const TropPoly& P, const VecQ& x) {
    check_eval(P, x.size());
    TropEvalExact out;
    bool first = true;
    for (const auto& [e, c] : P.terms()) {
        Rational t = c;
        for (int j = 0; j < P.nvars(); ++j) t += x[j] * e[j];
        if (first || t > out.value) {
            out.value = t;
            out.argmax.clear();
            out.argmax.push_back(e);
            first = false;
        } else if (t == out.value) {
            out.argmax.push_back(e);
        }
    }
    return out;
}

double eval_deq(const TropPoly& P, DequantParam p, const std::vector<double>& x) {
    check_eval(P, x.size());
    p.validate();
    if (p.tropical()) return eval_trop(P, x).value;
    double m = 0.0;
    bool first = true;
    std::vector<double> vals;
    vals.reserve(P.terms().size());
    for (const auto& [e, c] : P.terms()) {
        double t = rat_to_double(c);
        for (int j = 0; j < P.nvars(); ++j) t += x[j] * e[j];
        vals.push_back(t);
        if (first || t > m) m = t, first = false;
    }
    double acc = 0.0;
    for (double t : vals) acc += std::exp((t - m) / p.h);
    return m + p.h * std::log(acc);
}

TropPoly tropicalize_trivial(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("zero polynomial has no support");
    TropPoly P(f.nvars());
    for (const auto& [e, c] : f.terms()) P.set_term(e, Rational(0));
    return P;
}

}  // namespace trop
