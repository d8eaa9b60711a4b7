#include "trop/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trop {

Rational eval_form(const AffineForm& f, const VecQ& x) {
    Rational acc = f.constant;
    for (size_t j = 0; j < f.coeffs.size(); ++j)
        if (f.coeffs[j] != 0) acc += f.coeffs[j] * x[j];
    return acc;
}

bool satisfies(const LinearSystem& sys, const VecQ& x) {
    for (const auto& c : sys.cons) {
        Rational v = eval_form(c.form, x);
        switch (c.rel) {
            case Rel::eq:
                if (v != 0) return false;
                break;
            case Rel::ge:
                if (v < 0) return false;
                break;
            case Rel::gt:
                if (v <= 0) return false;
                break;
        }
    }
    return true;
}

namespace {

constexpr size_t kBlowupCap = 200000;

struct Bound {
    AffineForm expr;  // x_v >= expr (lower) or x_v <= expr (upper)
    bool strict;
};

struct FmStage {
    int var;
    std::vector<Bound> lowers, uppers;
};

struct Substitution {
    int var;
    AffineForm expr;  // x_var = expr over the other variables
};

// Scales the constraint by a positive rational so coefficients and constant
// become coprime integers; canonical for deduplication.
void normalize(Constraint& c) {
    BigInt l = 1;
    for (const auto& q : c.form.coeffs) l = lcm(l, denominator(q));
    l = lcm(l, denominator(c.form.constant));
    BigInt g = 0;
    auto scaled = [&](const Rational& q) { return numerator(q) * (l / denominator(q)); };
    for (const auto& q : c.form.coeffs) g = gcd(g, scaled(q));
    g = gcd(g, scaled(c.form.constant));
    if (g == 0) return;
    Rational s(l, g);
    for (auto& q : c.form.coeffs) q *= s;
    c.form.constant *= s;
    if (c.rel == Rel::eq) {
        // Direction-free: make the first nonzero entry positive.
        for (const auto& q : c.form.coeffs) {
            if (q == 0) continue;
            if (q < 0) {
                for (auto& p : c.form.coeffs) p = -p;
                c.form.constant = -c.form.constant;
            }
            break;
        }
    }
}

bool all_zero(const VecQ& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

// Constant-only constraint: true if satisfiable, false otherwise.
bool constant_ok(const Constraint& c) {
    switch (c.rel) {
        case Rel::eq:
            return c.form.constant == 0;
        case Rel::ge:
            return c.form.constant >= 0;
        case Rel::gt:
            return c.form.constant > 0;
    }
    return false;
}

// Keeps, per coefficient vector, only the strongest inequality.
void dedupe(std::vector<Constraint>& cons) {
    std::map<VecQ, size_t> best;
    std::vector<Constraint> out;
    out.reserve(cons.size());
    for (auto& c : cons) {
        normalize(c);
        auto [it, inserted] = best.emplace(c.form.coeffs, out.size());
        if (inserted) {
            out.push_back(std::move(c));
            continue;
        }
        Constraint& held = out[it->second];
        const bool stronger = c.form.constant < held.form.constant ||
                              (c.form.constant == held.form.constant && c.rel == Rel::gt);
        if (stronger) held = std::move(c);
    }
    cons = std::move(out);
}

struct Eliminator {
    int nvars;
    std::vector<Constraint> cons;
    std::vector<Substitution> subs;
    std::vector<FmStage> stages;
    bool infeasible = false;

    explicit Eliminator(const LinearSystem& sys) : nvars(sys.nvars), cons(sys.cons) {
        for (const auto& c : cons)
            if (static_cast<int>(c.form.coeffs.size()) != nvars)
                throw std::invalid_argument("constraint width does not match nvars");
    }

    void run() {
        if (!drop_constants()) return;
        while (substitute_one_equality())
            if (!drop_constants()) return;
        while (true) {
            int v = pick_var();
            if (v < 0) break;
            eliminate(v);
            if (!drop_constants()) return;
            if (cons.size() > kBlowupCap)
                throw std::runtime_error("fourier-motzkin constraint blow-up");
        }
    }

    // Removes constant-only constraints; false when one is violated.
    bool drop_constants() {
        std::vector<Constraint> kept;
        kept.reserve(cons.size());
        for (auto& c : cons) {
            if (all_zero(c.form.coeffs)) {
                if (!constant_ok(c)) {
                    infeasible = true;
                    return false;
                }
            } else {
                kept.push_back(std::move(c));
            }
        }
        cons = std::move(kept);
        return true;
    }

    bool substitute_one_equality() {
        for (size_t i = 0; i < cons.size(); ++i) {
            if (cons[i].rel != Rel::eq) continue;
            int v = -1;
            for (int j = 0; j < nvars; ++j)
                if (cons[i].form.coeffs[j] != 0) {
                    v = j;
                    break;
                }
            if (v < 0) continue;  // constant equality, handled elsewhere
            const Rational a = cons[i].form.coeffs[v];
            AffineForm expr;
            expr.coeffs.assign(nvars, Rational(0));
            for (int j = 0; j < nvars; ++j)
                if (j != v) expr.coeffs[j] = -cons[i].form.coeffs[j] / a;
            expr.constant = -cons[i].form.constant / a;
            cons.erase(cons.begin() + i);
            for (auto& c : cons) apply_substitution(c, v, expr);
            subs.push_back({v, std::move(expr)});
            return true;
        }
        return false;
    }

    static void apply_substitution(Constraint& c, int v, const AffineForm& expr) {
        const Rational a = c.form.coeffs[v];
        if (a == 0) return;
        c.form.coeffs[v] = 0;
        for (size_t j = 0; j < c.form.coeffs.size(); ++j) c.form.coeffs[j] += a * expr.coeffs[j];
        c.form.constant += a * expr.constant;
    }

    // Greedy: the variable whose elimination produces the fewest products.
    int pick_var() {
        int best = -1;
        size_t best_cost = 0;
        for (int v = 0; v < nvars; ++v) {
            size_t lo = 0, hi = 0, present = 0;
            for (const auto& c : cons) {
                if (c.form.coeffs[v] == 0) continue;
                ++present;
                (c.form.coeffs[v] > 0 ? lo : hi)++;
            }
            if (present == 0) continue;
            const size_t cost = lo * hi;
            if (best < 0 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        return best;
    }

    void eliminate(int v) {
        FmStage stage;
        stage.var = v;
        std::vector<Constraint> rest;
        for (auto& c : cons) {
            const Rational a = c.form.coeffs[v];
            if (a == 0) {
                rest.push_back(std::move(c));
                continue;
            }
            AffineForm expr;  // x_v (>= or <=) -(rest of form)/a
            expr.coeffs.assign(nvars, Rational(0));
            for (int j = 0; j < nvars; ++j)
                if (j != v) expr.coeffs[j] = -c.form.coeffs[j] / a;
            expr.constant = -c.form.constant / a;
            Bound b{std::move(expr), c.rel == Rel::gt};
            (a > 0 ? stage.lowers : stage.uppers).push_back(std::move(b));
        }
        for (const auto& lo : stage.lowers)
            for (const auto& hi : stage.uppers) {
                Constraint c;
                c.form.coeffs.resize(nvars);
                for (int j = 0; j < nvars; ++j)
                    c.form.coeffs[j] = hi.expr.coeffs[j] - lo.expr.coeffs[j];
                c.form.constant = hi.expr.constant - lo.expr.constant;
                c.rel = (lo.strict || hi.strict) ? Rel::gt : Rel::ge;
                rest.push_back(std::move(c));
            }
        dedupe(rest);
        cons = std::move(rest);
        stages.push_back(std::move(stage));
    }

    VecQ witness() const {
        VecQ x(nvars, Rational(0));
        for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
            bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
            Rational lo, hi;
            for (const auto& b : it->lowers) {
                Rational v = eval_form(b.expr, x);
                if (!has_lo || v > lo || (v == lo && b.strict)) {
                    lo = v;
                    lo_strict = b.strict;
                }
                has_lo = true;
            }
            for (const auto& b : it->uppers) {
                Rational v = eval_form(b.expr, x);
                if (!has_hi || v < hi || (v == hi && b.strict)) {
                    hi = v;
                    hi_strict = b.strict;
                }
                has_hi = true;
            }
            Rational& out = x[it->var];
            if (has_lo && has_hi)
                out = (lo == hi) ? lo : (lo + hi) / 2;
            else if (has_lo)
                out = lo_strict ? lo + 1 : lo;
            else if (has_hi)
                out = hi_strict ? hi - 1 : hi;
        }
        for (auto it = subs.rbegin(); it != subs.rend(); ++it) x[it->var] = eval_form(it->expr, x);
        return x;
    }
};

}  // namespace

std::optional<VecQ> feasible_point(const LinearSystem& sys) {
    Eliminator e(sys);
    e.run();
    if (e.infeasible) return std::nullopt;
    return e.witness();
}

bool is_feasible(const LinearSystem& sys) { return feasible_point(sys).has_value(); }

std::vector<size_t> forced_equalities(const LinearSystem& sys) {
    std::vector<size_t> out;
    for (size_t i = 0; i < sys.cons.size(); ++i) {
        if (sys.cons[i].rel != Rel::ge) continue;
        LinearSystem probe = sys;
        probe.cons[i].rel = Rel::gt;
        if (!is_feasible(probe)) out.push_back(i);
    }
    return out;
}

bool implies(const LinearSystem& sys, const Constraint& c) {
    auto negated = [&](Rel strictness) {
        LinearSystem probe = sys;
        Constraint n = c;
        for (auto& q : n.form.coeffs) q = -q;
        n.form.constant = -n.form.constant;
        n.rel = strictness;
        probe.cons.push_back(std::move(n));
        return !is_feasible(probe);
    };
    switch (c.rel) {
        case Rel::ge:
            return negated(Rel::gt);  // not(f >= 0) is -f > 0
        case Rel::gt:
            return negated(Rel::ge);  // not(f > 0) is -f >= 0
        case Rel::eq: {
            LinearSystem above = sys;
            Constraint up = c;
            up.rel = Rel::gt;
            above.cons.push_back(up);
            if (is_feasible(above)) return false;
            return negated(Rel::gt);
        }
    }
    return false;
}

int rank_of_forms(int nvars, const std::vector<AffineForm>& forms) {
    std::vector<VecQ> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) rows.push_back(f.coeffs);
    int rank = 0;
    for (int col = 0; col < nvars && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational m = rows[r][col] / rows[rank][col];
            for (int j = col; j < nvars; ++j) rows[r][j] -= m * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace trop
