#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "trop/laurent.hpp"
#include "trop/rational.hpp"
#include "trop/semifield.hpp"

namespace trop {

// Tropical (max-plus) polynomial P(x) = max_w (c_w + <x, w>). Coefficients
// are kept as exact rationals so that membership questions at rational points
// stay decidable; doubles convert in without loss.
class TropPoly {
public:
    explicit TropPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

    int nvars() const { return nvars_; }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    void set_term(const ExpVec& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("exponent vector length does not match nvars");
        terms_[e] = c;
    }
    void set_term(const ExpVec& e, double c) { set_term(e, rat_from_double(c)); }

    friend bool operator==(const TropPoly& a, const TropPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    int nvars_;
    std::map<ExpVec, Rational> terms_;
};

struct TropEval {
    double value = 0.0;
    std::vector<ExpVec> argmax;  // every exponent attaining the max
};

struct TropEvalExact {
    Rational value;
    std::vector<ExpVec> argmax;
};

// Max over the support, with the full argmax set. Float ties are exact
// double comparisons; callers wanting a tolerance use member_T.
TropEval eval_trop(const TropPoly& P, const std::vector<double>& x);
TropEvalExact eval_trop(const TropPoly& P, const VecQ& x);

// P_h(x) = h * log sum_w exp((c_w + <x,w>)/h), the image of P under the
// h-semifield sum, computed with the max factored out so it never overflows.
// Satisfies P(x) <= P_h(x) <= P(x) + h*log(support size).
double eval_deq(const TropPoly& P, DequantParam p, const std::vector<double>& x);

// Support of f with all tropical coefficients 0 (the f_0 of the deformation).
TropPoly tropicalize_trivial(const LaurentPoly& f);

}  // namespace trop
