#include "trop/valuations.hpp"

#include <stdexcept>

namespace trop {

bool LexGroupElement::is_zero() const {
    for (long long c : coords)
        if (c != 0) return false;
    return true;
}

int LexGroupElement::sign() const {
    for (long long c : coords) {
        if (c > 0) return 1;
        if (c < 0) return -1;
    }
    return 0;
}

namespace {

void check_same_rank(const LexGroupElement& a, const LexGroupElement& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("group elements live in different ranks");
}

}  // namespace

LexGroupElement operator+(const LexGroupElement& a, const LexGroupElement& b) {
    check_same_rank(a, b);
    LexGroupElement out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

LexGroupElement operator-(const LexGroupElement& a, const LexGroupElement& b) {
    check_same_rank(a, b);
    LexGroupElement out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

LexGroupElement operator*(long long k, const LexGroupElement& a) {
    LexGroupElement out = a;
    for (auto& c : out.coords) c *= k;
    return out;
}

bool operator<(const LexGroupElement& a, const LexGroupElement& b) {
    check_same_rank(a, b);
    return a.coords < b.coords;
}

int height(const LexGroupElement& x) {
    size_t lead = 0;
    while (lead < x.coords.size() && x.coords[lead] == 0) ++lead;
    return static_cast<int>(x.coords.size() - lead);
}

ExtendedRational group_divide(const LexGroupElement& lambda, const LexGroupElement& mu) {
    check_same_rank(lambda, mu);
    if (mu.is_zero()) throw std::domain_error("division by the zero group element");
    const int hl = height(lambda), hm = height(mu);
    if (hl < hm) return ExtendedRational::finite(Rational(0));
    if (hl > hm)
        return lambda.sign() * mu.sign() > 0 ? ExtendedRational::pos_inf()
                                             : ExtendedRational::neg_inf();
    const size_t lead = lambda.rank() - static_cast<size_t>(hl);
    BigInt n(lambda.coords[lead]), d(mu.coords[lead]);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return ExtendedRational::finite(Rational(n, d));
}

std::vector<ExtendedRational> rank_reduce(const std::vector<LexGroupElement>& values, int s,
                                          const LexGroupElement& lambda_ref) {
    if (values.empty()) throw std::invalid_argument("no generator values to reduce");
    if (height(lambda_ref) != s || lambda_ref.sign() <= 0)
        throw std::domain_error("reference element must be positive of height s");
    bool reaches = false;
    for (const auto& v : values) {
        const int h = height(v);
        if (h > s) throw std::domain_error("generator value exceeds the reference height");
        if (h == s) reaches = true;
    }
    if (!reaches) throw std::domain_error("degenerate reduction: no value of height s");
    std::vector<ExtendedRational> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(group_divide(v, lambda_ref));
    return out;
}

std::vector<ExtendedRational> rank_reduce(const std::vector<LexGroupElement>& values, int s,
                                          size_t rank) {
    LexGroupElement ref;
    ref.coords.assign(rank, 0);
    if (s < 1 || static_cast<size_t>(s) > rank)
        throw std::invalid_argument("reference height out of range");
    ref.coords[rank - static_cast<size_t>(s)] = 1;
    return rank_reduce(values, s, ref);
}

MonomialValuation MonomialValuation::from_doubles(const std::vector<double>& w) {
    MonomialValuation v;
    v.xi.reserve(w.size());
    for (double x : w) v.xi.push_back(rat_from_double(x));
    return v;
}

ExtendedRational monval_apply(const MonomialValuation& v, const LaurentPoly& f) {
    if (f.is_zero()) return ExtendedRational::pos_inf();
    if (static_cast<int>(v.xi.size()) != f.nvars())
        throw std::invalid_argument("weight dimension does not match nvars");
    bool first = true;
    Rational best;
    for (const auto& [e, c] : f.terms()) {
        Rational t(0);
        for (int j = 0; j < f.nvars(); ++j) t -= v.xi[j] * e[j];
        if (first || t < best) {
            best = t;
            first = false;
        }
    }
    return ExtendedRational::finite(best);
}

std::vector<ExpVec> monval_argmin(const MonomialValuation& v, const LaurentPoly& f) {
    std::vector<ExpVec> out;
    if (f.is_zero()) return out;
    if (static_cast<int>(v.xi.size()) != f.nvars())
        throw std::invalid_argument("weight dimension does not match nvars");
    bool first = true;
    Rational best;
    for (const auto& [e, c] : f.terms()) {
        Rational t(0);
        for (int j = 0; j < f.nvars(); ++j) t -= v.xi[j] * e[j];
        if (first || t < best) {
            best = t;
            out.clear();
            out.push_back(e);
            first = false;
        } else if (t == best) {
            out.push_back(e);
        }
    }
    return out;
}

VecQ z_map(const MonomialValuation& v) { return v.xi; }

bool descend_valuation(const MonomialValuation& v, const std::vector<LaurentPoly>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::domain_error("ideal generators must be nonzero");
        if (monval_argmin(v, g).size() < 2) return false;
    }
    return true;
}

}  // namespace trop
