#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// Dense exponent vector of a Laurent monomial; entries may be negative.
using ExpVec = std::vector<int>;

// Orthant of (R*)^n, one sign (+1 or -1) per coordinate.
using OrthantSign = std::vector<int>;

inline constexpr int kMaxVars = 16;

inline void check_nvars(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("number of variables must be in [1, 16]");
}

// Laurent polynomial over exact rationals, terms keyed by exponent vector.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

    int nvars() const { return nvars_; }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Rational& coeff(const ExpVec& e) const {
        static const Rational zero(0);
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("exponent vector length does not match nvars");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.require_same(b);
        LaurentPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e = ea;
                for (int j = 0; j < a.nvars_; ++j) e[j] += eb[j];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void require_same(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("polynomials live in different variable counts");
    }

    int nvars_;
    std::map<ExpVec, Rational> terms_;
};

// Exact evaluation. Coordinates may be zero only where no negative exponent
// touches them (0^k = 0 for k > 0, 0^0 = 1).
Rational eval_laurent(const LaurentPoly& f, const VecQ& x);
double eval_laurent(const LaurentPoly& f, const std::vector<double>& x);

inline void check_orthant(const OrthantSign& s, int nvars) {
    if (static_cast<int>(s.size()) != nvars)
        throw std::invalid_argument("orthant sign length does not match nvars");
    for (int v : s)
        if (v != 1 && v != -1) throw std::invalid_argument("orthant signs must be +1 or -1");
}

// Sign of the term a_w * X^w anywhere on the open orthant s: sign(a_w) times
// the parity of the negative coordinates raised to their exponents.
int monomial_sign(const Rational& coeff, const ExpVec& e, const OrthantSign& s);

// Splits f = fplus - fminus by term sign on the orthant: fplus keeps the
// positive-sign terms with coefficient a_w, fminus the negative-sign ones with
// -a_w. Both take strictly positive values at every point of the orthant.
std::pair<LaurentPoly, LaurentPoly> sign_split(const LaurentPoly& f, const OrthantSign& s);

}  // namespace trop
