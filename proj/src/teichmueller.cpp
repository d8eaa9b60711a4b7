#include "trop/teichmueller.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace trop {

namespace {

constexpr size_t kMaxWordLen = 64;

// Cancel adjacent inverse pairs, then cancel inverse pairs across the ends
// (the trace only sees the cyclic word).
Word reduce_word(Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        Word out;
        out.reserve(w.size());
        for (signed char g : w) {
            if (!out.empty() && out.back() == -g) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(g);
            }
        }
        while (out.size() >= 2 && out.front() == -out.back()) {
            out.erase(out.begin());
            out.pop_back();
            changed = true;
        }
        w = std::move(out);
    }
    return w;
}

double letter_trace(const Character& chi, signed char g) {
    return std::abs(g) == 1 ? chi.x : chi.y;
}

bool is_alternating(const Word& w) {
    if (w.size() % 2 != 0) return false;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) return false;
        if (w[i] == w[(i + 1) % w.size()]) return false;
    }
    return true;
}

double trace_reduced(const Character& chi, const Word& w, std::map<Word, double>& memo);

double trace_word_rec(const Character& chi, Word w, std::map<Word, double>& memo) {
    return trace_reduced(chi, reduce_word(std::move(w)), memo);
}

double trace_reduced(const Character& chi, const Word& w, std::map<Word, double>& memo) {
    if (w.empty()) return 2.0;
    if (w.size() == 1) return letter_trace(chi, w[0]);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;

    double val = 0.0;
    // Clear an inverse letter: with W ~ SPg^-1 cyclically,
    // tr W = tr(SP) tr g - tr(SPg).
    size_t inv_at = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) {
            inv_at = i;
            break;
        }
    }
    if (inv_at < w.size()) {
        Word sp;
        sp.reserve(w.size() - 1);
        for (size_t i = inv_at + 1; i < w.size(); ++i) sp.push_back(w[i]);
        for (size_t i = 0; i < inv_at; ++i) sp.push_back(w[i]);
        Word spg = sp;
        spg.push_back(static_cast<signed char>(-w[inv_at]));
        val = trace_word_rec(chi, sp, memo) * letter_trace(chi, w[inv_at]) -
              trace_word_rec(chi, spg, memo);
        memo.emplace(w, val);
        return val;
    }

    // Positive word. Alternating even words are Chebyshev-like in z.
    if (is_alternating(w)) {
        const size_t k = w.size() / 2;
        double pm1 = 2.0, p = chi.z;
        for (size_t i = 1; i < k; ++i) {
            const double next = chi.z * p - pm1;
            pm1 = p;
            p = next;
        }
        memo.emplace(w, p);
        return p;
    }

    // Otherwise some letter repeats cyclically: rotate the repeat to the
    // front and use tr(g^2 S) = tr g tr(gS) - tr S.
    size_t rep = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == w[(i + 1) % w.size()]) {
            rep = i;
            break;
        }
    }
    Word rot;
    rot.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) rot.push_back(w[(rep + i) % w.size()]);
    Word gs(rot.begin() + 1, rot.end());
    Word s(rot.begin() + 2, rot.end());
    val = letter_trace(chi, rot[0]) * trace_word_rec(chi, gs, memo) - trace_word_rec(chi, s, memo);
    memo.emplace(w, val);
    return val;
}

}  // namespace

Sl2 sl2_mul(const Sl2& u, const Sl2& v) {
    return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d, u.c * v.a + u.d * v.c,
            u.c * v.b + u.d * v.d};
}

Sl2 sl2_inv(const Sl2& u) { return {u.d, -u.b, -u.c, u.a}; }

double sl2_trace(const Sl2& u) { return u.a + u.d; }

double sl2_det(const Sl2& u) { return u.a * u.d - u.b * u.c; }

void validate_sl2_pair(const Sl2Pair& p) {
    if (std::abs(sl2_det(p.A) - 1.0) > 1e-10 || std::abs(sl2_det(p.B) - 1.0) > 1e-10)
        throw std::invalid_argument("matrix pair must have unit determinants");
}

Character char_of_pair(const Sl2Pair& p) {
    validate_sl2_pair(p);
    return {sl2_trace(p.A), sl2_trace(p.B), sl2_trace(sl2_mul(p.A, p.B))};
}

Sl2 word_matrix(const Sl2Pair& p, const Word& w) {
    if (w.size() > kMaxWordLen) throw std::invalid_argument("word longer than 64 letters");
    validate_sl2_pair(p);
    Sl2 m;
    for (signed char g : w) {
        switch (g) {
            case 1: m = sl2_mul(m, p.A); break;
            case -1: m = sl2_mul(m, sl2_inv(p.A)); break;
            case 2: m = sl2_mul(m, p.B); break;
            case -2: m = sl2_mul(m, sl2_inv(p.B)); break;
            default: throw std::invalid_argument("word letters must be +-1 or +-2");
        }
    }
    return m;
}

double trace_of_word(const Character& chi, const Word& w) {
    if (w.size() > kMaxWordLen) throw std::invalid_argument("word longer than 64 letters");
    for (signed char g : w) {
        if (g != 1 && g != -1 && g != 2 && g != -2)
            throw std::invalid_argument("word letters must be +-1 or +-2");
    }
    std::map<Word, double> memo;
    return trace_word_rec(chi, w, memo);
}

double markov_residual(const Character& chi) {
    return chi.x * chi.x + chi.y * chi.y + chi.z * chi.z - chi.x * chi.y * chi.z;
}

double teich_solve_z(double x, double y) {
    const double disc = x * x * y * y - 4.0 * x * x - 4.0 * y * y;
    if (disc < 0.0) throw std::domain_error("no real solution for z at this (x, y)");
    return 0.5 * (x * y + std::sqrt(disc));
}

double length_of_trace(double t) {
    const double a = std::abs(t);
    if (a < 2.0) throw std::domain_error("trace is not hyperbolic");
    return 2.0 * std::acosh(a / 2.0);
}

std::pair<TropPoly, TropPoly> markov_trop_pair() {
    TropPoly plus(3), minus(3);
    plus.set_term({2, 0, 0}, Rational(0));
    plus.set_term({0, 2, 0}, Rational(0));
    plus.set_term({0, 0, 2}, Rational(0));
    minus.set_term({1, 1, 1}, Rational(0));
    return {plus, minus};
}

BoundaryRayResult boundary_ray_limit(const RaySpec& ray, double w0, double ratio, int npoints,
                                     const IdealPointOptions& opt) {
    if (!(w0 > 0.0)) throw std::invalid_argument("ray start must be positive");
    if (!(ratio > 1.0)) throw std::invalid_argument("ray ratio must exceed 1");
    if (npoints < 8) throw std::invalid_argument("need at least 8 points along the ray");

    BoundaryRayResult out;
    std::vector<std::vector<double>> seq;
    seq.reserve(npoints);
    double w = w0;
    for (int k = 0; k < npoints; ++k) {
        const double x = ray.x_is_w ? w : ray.x_const;
        const double y = ray.y_is_w ? w : ray.y_const;
        const double z = teich_solve_z(x, y);
        out.chars.push_back({x, y, z});
        seq.push_back({std::abs(x), std::abs(y), std::abs(z)});
        w *= ratio;
    }
    out.ideal = ideal_point_limit(seq, opt);
    return out;
}

ProjectionCheck projection_compatibility_check(const SpherePoint& big_limit,
                                               const std::vector<size_t>& idx,
                                               const SpherePoint& small_limit, double tol) {
    if (idx.empty() || idx.size() != small_limit.size())
        throw std::invalid_argument("index list must match the smaller limit");
    for (size_t i : idx) {
        if (i >= big_limit.size()) throw std::invalid_argument("index out of range");
    }
    ProjectionCheck out;
    std::vector<double> proj(idx.size());
    double n2 = 0.0;
    for (size_t k = 0; k < idx.size(); ++k) {
        proj[k] = big_limit[idx[k]];
        n2 += proj[k] * proj[k];
    }
    const double n = std::sqrt(n2);
    if (!(n > 1e-9)) {
        out.degenerate_projection = true;
        return out;
    }
    for (size_t k = 0; k < idx.size(); ++k) {
        out.max_dev = std::max(out.max_dev, std::abs(proj[k] / n - small_limit[k]));
    }
    out.compatible = out.max_dev <= tol;
    return out;
}

}  // namespace trop
