#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trop {

// Element of the max-plus semifield: a double or the additive identity -inf.
// The identity is a dedicated flag, never a large negative sentinel.
class TropValue {
public:
    constexpr TropValue() : finite_(false), v_(0.0) {}
    constexpr TropValue(double v) : finite_(true), v_(v) {}

    static constexpr TropValue ninf() { return TropValue(); }
    static constexpr TropValue one() { return TropValue(0.0); }

    constexpr bool is_ninf() const { return !finite_; }

    double value() const {
        if (!finite_) throw std::domain_error("tropical -inf has no finite value");
        return v_;
    }

    friend constexpr bool operator==(const TropValue& a, const TropValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }

private:
    bool finite_;
    double v_;
};

inline TropValue trop_add(TropValue a, TropValue b) {
    if (a.is_ninf()) return b;
    if (b.is_ninf()) return a;
    return TropValue(std::max(a.value(), b.value()));
}

inline TropValue trop_mul(TropValue a, TropValue b) {
    if (a.is_ninf() || b.is_ninf()) return TropValue::ninf();
    return TropValue(a.value() + b.value());
}

inline double trop_add(double a, double b) { return std::max(a, b); }
inline double trop_mul(double a, double b) { return a + b; }

// Dequantization scale. h > 0 selects the semifield S_h carried over from
// (R^{>0}, +, *) by x -> h*log(x); h == 0 is a distinguished tag meaning the
// tropical limit itself (use trop_add / trop_mul, never divide by h).
struct DequantParam {
    double h = 1.0;

    bool tropical() const { return h == 0.0; }

    void validate() const {
        if (!(h >= 0.0) || !std::isfinite(h))
            throw std::domain_error("dequantization scale must be finite and >= 0");
    }
};

// D_h(x) = h * log(x), the base-exp(1/h) logarithm.
inline double deq_value(DequantParam p, double x) {
    p.validate();
    if (p.tropical()) throw std::domain_error("deq_value needs h > 0");
    if (!(x > 0.0)) throw std::domain_error("deq_value needs a positive argument");
    return p.h * std::log(x);
}

// a (+)_h b = h * log(exp(a/h) + exp(b/h)), evaluated in the stable form
// max(a,b) + h * log1p(exp(-|a-b|/h)) so large magnitudes never overflow.
inline TropValue deq_add(DequantParam p, TropValue a, TropValue b) {
    p.validate();
    if (a.is_ninf()) return b;
    if (b.is_ninf()) return a;
    if (p.tropical()) return trop_add(a, b);
    const double hi = std::max(a.value(), b.value());
    const double lo = std::min(a.value(), b.value());
    return TropValue(hi + p.h * std::log1p(std::exp((lo - hi) / p.h)));
}

inline double deq_add(DequantParam p, double a, double b) {
    return deq_add(p, TropValue(a), TropValue(b)).value();
}

// (x)_h multiplication is exactly ordinary addition for every h, so the
// tropical product needs no separate dequantized form.
inline TropValue deq_mul(DequantParam, TropValue a, TropValue b) { return trop_mul(a, b); }
inline double deq_mul(DequantParam, double a, double b) { return a + b; }

}  // namespace trop
