#include "trop/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace trop {

namespace {

long long sat_add(long long a, long long b) {
    if (a == PuiseuxSeries::kExact || b == PuiseuxSeries::kExact) return PuiseuxSeries::kExact;
    return a + b;
}

long long sat_scale(long long a, long long k) {
    if (a == PuiseuxSeries::kExact) return PuiseuxSeries::kExact;
    return a * k;
}

}  // namespace

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) {
    PuiseuxSeries s;
    if (c == 0) return s;
    s.trunc_ = kDefaultOrder;
    s.terms_[0] = c;
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coeff, const Rational& exponent) {
    PuiseuxSeries s;
    if (coeff == 0) return s;
    s.ram_ = denominator(exponent).convert_to<long long>();
    s.trunc_ = kDefaultOrder * s.ram_;
    s.add_term(exponent, coeff);
    return s;
}

std::vector<std::pair<Rational, Rational>> PuiseuxSeries::term_list() const {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(Rational(k, ram_), c);
    return out;
}

Rational PuiseuxSeries::coeff_at(const Rational& exponent) const {
    const Rational scaled = exponent * ram_;
    if (denominator(scaled) != 1) return Rational(0);
    auto it = terms_.find(numerator(scaled).convert_to<long long>());
    return it == terms_.end() ? Rational(0) : it->second;
}

void PuiseuxSeries::add_term(const Rational& exponent, const Rational& coeff) {
    if (coeff == 0) return;
    const long long den = denominator(exponent).convert_to<long long>();
    const long long l = std::lcm(ram_, den);
    if (l != ram_) *this = lifted(l);
    if (trunc_ == kExact) trunc_ = kDefaultOrder * ram_;
    const long long key = (numerator(exponent) * (ram_ / den)).convert_to<long long>();
    if (key >= trunc_) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void PuiseuxSeries::set_truncation(const Rational& order) {
    const long long den = denominator(order).convert_to<long long>();
    const long long l = std::lcm(ram_, den);
    if (l != ram_) *this = lifted(l);
    trunc_ = (numerator(order) * (ram_ / den)).convert_to<long long>();
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first >= trunc_ ? terms_.erase(it) : std::next(it);
}

PuiseuxSeries PuiseuxSeries::lifted(long long to_ram) const {
    if (to_ram == ram_) return *this;
    if (to_ram % ram_ != 0) throw std::logic_error("lift target must be a multiple of ram");
    const long long k = to_ram / ram_;
    PuiseuxSeries out;
    out.ram_ = to_ram;
    out.trunc_ = sat_scale(trunc_, k);
    for (const auto& [e, c] : terms_) out.terms_[e * k] = c;
    return out;
}

PuiseuxSeries ps_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const long long l = std::lcm(a.ram_, b.ram_);
    PuiseuxSeries x = a.lifted(l), y = b.lifted(l);
    PuiseuxSeries out;
    out.ram_ = l;
    out.trunc_ = std::min(x.trunc_, y.trunc_);
    for (const auto& [e, c] : x.terms_) {
        if (e >= out.trunc_) continue;
        out.terms_[e] = c;
    }
    for (const auto& [e, c] : y.terms_) {
        if (e >= out.trunc_) continue;
        auto [it, inserted] = out.terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

PuiseuxSeries ps_neg(PuiseuxSeries a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

PuiseuxSeries ps_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.known_zero() || b.known_zero()) return PuiseuxSeries();
    const long long l = std::lcm(a.ram_, b.ram_);
    PuiseuxSeries x = a.lifted(l), y = b.lifted(l);
    const long long fx = x.terms_.empty() ? x.trunc_ : x.terms_.begin()->first;
    const long long fy = y.terms_.empty() ? y.trunc_ : y.terms_.begin()->first;
    PuiseuxSeries out;
    out.ram_ = l;
    out.trunc_ = std::min(sat_add(x.trunc_, fy), sat_add(y.trunc_, fx));
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            const long long e = ex + ey;
            if (out.trunc_ != PuiseuxSeries::kExact && e >= out.trunc_) continue;
            auto [it, inserted] = out.terms_.emplace(e, cx * cy);
            if (!inserted) {
                it->second += cx * cy;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

PuiseuxSeries ps_inv(const PuiseuxSeries& a) {
    if (a.known_zero()) throw std::domain_error("cannot invert the zero series");
    if (a.terms_.empty()) throw PrecisionError("inverting a series truncated to nothing");
    const long long v = a.terms_.begin()->first;
    const Rational lead = a.terms_.begin()->second;

    // Relative horizon: how many 1/ram orders above the valuation are known.
    const long long rel = a.trunc_ == PuiseuxSeries::kExact
                              ? PuiseuxSeries::kDefaultOrder * a.ram_
                              : a.trunc_ - v;

    // g = a / (lead t^v) - 1 has strictly positive order.
    PuiseuxSeries g;
    g.ram_ = a.ram_;
    g.trunc_ = rel;
    for (auto it = std::next(a.terms_.begin()); it != a.terms_.end(); ++it) {
        const long long e = it->first - v;
        if (e >= rel) continue;
        g.terms_[e] = it->second / lead;
    }

    PuiseuxSeries acc;  // sum of (-g)^k
    acc.ram_ = a.ram_;
    acc.trunc_ = rel;
    acc.terms_[0] = 1;
    if (!g.terms_.empty()) {
        PuiseuxSeries power = ps_neg(g);
        power.trunc_ = rel;
        const long long gval = g.terms_.begin()->first;
        for (long long order = gval; order < rel; order += gval) {
            acc = ps_add(acc, power);
            acc.trunc_ = rel;
            power = ps_mul(power, ps_neg(g));
            power.trunc_ = rel;
            if (power.terms_.empty()) break;
        }
    }

    PuiseuxSeries out;
    out.ram_ = a.ram_;
    out.trunc_ = sat_add(rel, -v);  // relative horizon anchored at order -v
    for (const auto& [e, c] : acc.terms_) out.terms_[e - v] = c / lead;
    // Exact monomial stays exact.
    if (a.terms_.size() == 1 && a.trunc_ == PuiseuxSeries::kExact)
        out.trunc_ = PuiseuxSeries::kExact;
    return out;
}

std::optional<Rational> val(const PuiseuxSeries& a) {
    if (a.terms_.empty()) {
        if (a.trunc_ == PuiseuxSeries::kExact) return std::nullopt;
        throw PrecisionError("valuation of a series truncated to nothing");
    }
    return Rational(a.terms_.begin()->first, a.ram_);
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const long long l = std::lcm(a.ram_, b.ram_);
    PuiseuxSeries x = a.lifted(l), y = b.lifted(l);
    return x.terms_ == y.terms_ && x.trunc_ == y.trunc_;
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("series literal: " + what + " at position " +
                                    std::to_string(pos));
    }

    BigInt integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return BigInt(s.substr(start, pos - start));
    }

    Rational rational() {
        BigInt num = integer();
        if (accept('/')) {
            BigInt den = integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Rational exponent() {
        if (accept('(')) {
            Rational r = rational();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        return Rational(integer());
    }
};

}  // namespace

PuiseuxSeries parse_puiseux(const std::string& text) {
    Scanner sc{text};
    PuiseuxSeries out;
    bool any = false;
    while (!sc.eof()) {
        int sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+')) {
            if (!any) sc.fail("leading '+'");
        } else if (any) {
            sc.fail("expected '+' or '-' between terms");
        }
        Rational coeff(1);
        bool saw_coeff = false;
        const char c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = sc.rational();
            saw_coeff = true;
        }
        Rational exp(0);
        sc.accept('*');
        if (sc.accept('t')) {
            exp = sc.accept('^') ? sc.exponent() : Rational(1);
        } else if (!saw_coeff) {
            sc.fail("expected a coefficient or 't'");
        }
        out.add_term(exp, coeff * sign);
        any = true;
    }
    if (!any) throw std::invalid_argument("series literal: empty input");
    return out;
}

void ValuedPoly::add_term(const ExpVec& e, PuiseuxSeries s) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length does not match nvars");
    if (s.known_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end())
        terms.emplace(e, std::move(s));
    else
        it->second = ps_add(it->second, s);
}

TropPoly tropicalize_valued(const ValuedPoly& f) {
    if (f.terms.empty()) throw std::domain_error("zero polynomial has no support");
    TropPoly P(f.nvars);
    for (const auto& [e, s] : f.terms) {
        auto v = val(s);
        if (!v) continue;  // exact zero coefficient carries no term
        P.set_term(e, -*v);
    }
    if (P.empty()) throw std::domain_error("zero polynomial has no support");
    return P;
}

NewtonRoots newton_polygon_roots(const std::vector<PuiseuxSeries>& coeffs) {
    if (coeffs.empty()) throw std::domain_error("empty coefficient list");
    if (coeffs.back().known_zero()) throw std::domain_error("leading coefficient is zero");

    std::vector<std::pair<long long, Rational>> pts;  // (degree, valuation)
    for (size_t i = 0; i < coeffs.size(); ++i) {
        auto v = val(coeffs[i]);  // PrecisionError propagates
        if (!v) continue;
        pts.emplace_back(static_cast<long long>(i), *v);
    }
    NewtonRoots out;
    out.infinite_count = static_cast<int>(pts.front().first);
    if (pts.size() < 2) return out;

    // Lower convex hull, left to right; slopes strictly increase.
    std::vector<std::pair<long long, Rational>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // slope(a,b) >= slope(b,p) means b is not a lower-hull vertex
            if ((b.second - a.second) * (p.first - b.first) >=
                (p.second - b.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    for (size_t k = 1; k < hull.size(); ++k) {
        const Rational slope =
            (hull[k].second - hull[k - 1].second) / Rational(hull[k].first - hull[k - 1].first);
        const long long width = hull[k].first - hull[k - 1].first;
        for (long long m = 0; m < width; ++m) out.finite.push_back(-slope);
    }
    std::sort(out.finite.begin(), out.finite.end());
    return out;
}

VecQ nonarch_amoeba_point(const std::vector<PuiseuxSeries>& x) {
    VecQ out;
    out.reserve(x.size());
    for (const auto& s : x) {
        auto v = val(s);
        if (!v) throw std::domain_error("amoeba point needs nonzero coordinates");
        out.push_back(-*v);
    }
    return out;
}

std::vector<Rational> univariate_trop_roots(const TropPoly& P) {
    if (P.nvars() != 1) throw std::invalid_argument("univariate roots need one variable");
    if (P.empty()) throw std::domain_error("tropical polynomial with empty support");
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& [e, c] : P.terms()) terms.emplace_back(e[0], c);

    std::vector<Rational> roots;
    std::vector<Rational> seen;
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j) {
            const Rational y =
                (terms[i].second - terms[j].second) / Rational(terms[j].first - terms[i].first);
            if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
            seen.push_back(y);
            auto ev = eval_trop(P, VecQ{y});
            if (ev.argmax.size() < 2) continue;
            int lo = ev.argmax.front()[0], hi = lo;
            for (const auto& e : ev.argmax) {
                lo = std::min(lo, e[0]);
                hi = std::max(hi, e[0]);
            }
            for (int m = 0; m < hi - lo; ++m) roots.push_back(y);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace trop
