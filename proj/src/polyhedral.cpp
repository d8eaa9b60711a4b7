#include "trop/polyhedral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trop {

namespace {

constexpr int kMaxCellVars = 4;
constexpr size_t kMaxCellSupport = 32;

double auto_eps(double scale) { return 1e-9 * (1.0 + std::fabs(scale)); }

// The affine function x -> c_w + <x, w> of one tropical term.
AffineForm term_form(int nvars, const ExpVec& e, const Rational& c) {
    AffineForm f;
    f.coeffs.reserve(nvars);
    for (int j = 0; j < nvars; ++j) f.coeffs.emplace_back(e[j]);
    f.constant = c;
    return f;
}

AffineForm form_diff(const AffineForm& a, const AffineForm& b) {
    AffineForm f;
    f.coeffs.resize(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) f.coeffs[j] = a.coeffs[j] - b.coeffs[j];
    f.constant = a.constant - b.constant;
    return f;
}

bool zero_form(const AffineForm& f) {
    for (const auto& q : f.coeffs)
        if (q != 0) return false;
    return f.constant == 0;
}

void check_tr_inputs(const TropPoly& Pplus, const TropPoly& Pminus) {
    if (Pplus.empty() || Pminus.empty())
        throw std::domain_error("real tropical pair needs two nonempty supports");
    if (Pplus.nvars() != Pminus.nvars())
        throw std::invalid_argument("pair lives in different variable counts");
    for (const auto& [e, c] : Pplus.terms())
        if (Pminus.terms().count(e))
            throw std::invalid_argument("real tropical pair must have disjoint supports");
}

// Builds the canonical cell for the given tie data, or nothing if empty.
// Forced inequalities migrate into the equality list, then a relative
// interior witness is certified by making the rest strict.
std::optional<PolyCell> build_cell(int nvars, std::vector<AffineForm> eqs,
                                   std::vector<AffineForm> ineqs, std::vector<ExpVec> label) {
    LinearSystem sys(nvars);
    for (const auto& f : eqs) sys.cons.push_back({f, Rel::eq});
    for (const auto& f : ineqs) sys.cons.push_back({f, Rel::ge});
    if (!is_feasible(sys)) return std::nullopt;

    auto forced = forced_equalities(sys);
    std::set<size_t> forced_set(forced.begin(), forced.end());
    PolyCell cell;
    cell.nvars = nvars;
    cell.label = std::move(label);
    for (const auto& f : eqs)
        if (!zero_form(f)) cell.equalities.push_back(f);
    for (size_t i = 0; i < ineqs.size(); ++i) {
        const size_t idx = eqs.size() + i;
        if (forced_set.count(idx)) {
            if (!zero_form(ineqs[i])) cell.equalities.push_back(ineqs[i]);
        } else if (!zero_form(ineqs[i])) {
            cell.inequalities.push_back(ineqs[i]);
        }
    }

    LinearSystem interior(nvars);
    for (const auto& f : cell.equalities) interior.cons.push_back({f, Rel::eq});
    for (const auto& f : cell.inequalities) interior.cons.push_back({f, Rel::gt});
    auto w = feasible_point(interior);
    if (!w) return std::nullopt;  // cannot happen for a feasible canonical cell
    cell.witness = *w;
    return cell;
}

// Canonical printable key of the constraint set, for deduplication.
std::string cell_key(const PolyCell& cell) {
    auto normalized = [&](const AffineForm& f, Rel r) {
        Constraint c{f, r};
        BigInt l = 1;
        for (const auto& q : c.form.coeffs) l = lcm(l, denominator(q));
        l = lcm(l, denominator(c.form.constant));
        BigInt g = 0;
        auto scaled = [&](const Rational& q) { return numerator(q) * (l / denominator(q)); };
        for (const auto& q : c.form.coeffs) g = gcd(g, scaled(q));
        g = gcd(g, scaled(c.form.constant));
        std::vector<BigInt> row;
        bool flip = false;
        if (r == Rel::eq) {
            for (const auto& q : c.form.coeffs) {
                BigInt v = scaled(q);
                if (v != 0) {
                    flip = v < 0;
                    break;
                }
            }
        }
        for (const auto& q : c.form.coeffs) row.push_back(scaled(q));
        row.push_back(scaled(c.form.constant));
        std::ostringstream os;
        for (auto& v : row) {
            if (g != 0) v /= g;
            if (flip) v = -v;
            os << v.str() << ",";
        }
        return os.str();
    };
    std::vector<std::string> eq_keys, ge_keys;
    for (const auto& f : cell.equalities) eq_keys.push_back(normalized(f, Rel::eq));
    for (const auto& f : cell.inequalities) ge_keys.push_back(normalized(f, Rel::ge));
    std::sort(eq_keys.begin(), eq_keys.end());
    std::sort(ge_keys.begin(), ge_keys.end());
    std::ostringstream os;
    os << "E:";
    for (const auto& k : eq_keys) os << k << ";";
    os << "|I:";
    for (const auto& k : ge_keys) os << k << ";";
    return os.str();
}

int rank_of_cell_equalities(const PolyCell& cell) {
    return rank_of_forms(cell.nvars, cell.equalities);
}

std::vector<std::vector<double>> forms_to_rows(const std::vector<AffineForm>& forms, int nvars,
                                               std::vector<double>* rhs) {
    std::vector<std::vector<double>> rows;
    for (const auto& f : forms) {
        std::vector<double> row(nvars);
        for (int j = 0; j < nvars; ++j) row[j] = rat_to_double(f.coeffs[j]);
        rows.push_back(std::move(row));
        if (rhs) rhs->push_back(-rat_to_double(f.constant));
    }
    return rows;
}

// Row-reduces (rows | rhs) in place; returns false when inconsistent.
// Dependent rows are dropped.
bool independent_rows(std::vector<std::vector<double>>& rows, std::vector<double>& rhs) {
    const double tol = 1e-11;
    size_t rank = 0;
    const size_t n = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t pivot = rank;
        for (size_t r = rank; r < rows.size(); ++r)
            if (std::fabs(rows[r][col]) > std::fabs(rows[pivot][col])) pivot = r;
        if (std::fabs(rows[pivot][col]) < tol) continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const double m = rows[r][col] / rows[rank][col];
            if (m == 0.0) continue;
            for (size_t j = 0; j < n; ++j) rows[r][j] -= m * rows[rank][j];
            rhs[r] -= m * rhs[rank];
        }
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r) {
        double mag = 0.0;
        for (double v : rows[r]) mag = std::max(mag, std::fabs(v));
        if (std::fabs(rhs[r]) > 1e-7 * (1.0 + mag) && mag < tol) return false;
    }
    rows.resize(rank);
    rhs.resize(rank);
    return true;
}

// Projection of p onto {x : R x = s} via x = p + R^T lambda.
std::optional<std::vector<double>> project_affine(const std::vector<std::vector<double>>& R,
                                                  const std::vector<double>& s,
                                                  const std::vector<double>& p) {
    auto rows = R;
    auto rhs = s;
    if (!independent_rows(rows, rhs)) return std::nullopt;
    const size_t m = rows.size(), n = p.size();
    if (m == 0) return p;
    // Gram matrix G = R R^T, target t = s - R p.
    std::vector<std::vector<double>> G(m, std::vector<double>(m + 1, 0.0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < n; ++k) G[i][j] += rows[i][k] * rows[j][k];
        double rp = 0.0;
        for (size_t k = 0; k < n; ++k) rp += rows[i][k] * p[k];
        G[i][m] = rhs[i] - rp;
    }
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        for (size_t r = col; r < m; ++r)
            if (std::fabs(G[r][col]) > std::fabs(G[pivot][col])) pivot = r;
        if (std::fabs(G[pivot][col]) < 1e-12) return std::nullopt;
        std::swap(G[col], G[pivot]);
        for (size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const double f = G[r][col] / G[col][col];
            for (size_t j = col; j <= m; ++j) G[r][j] -= f * G[col][j];
        }
    }
    std::vector<double> x = p;
    for (size_t i = 0; i < m; ++i) {
        const double lambda = G[i][m] / G[i][i];
        for (size_t k = 0; k < n; ++k) x[k] += lambda * rows[i][k];
    }
    return x;
}

}  // namespace

LinearSystem PolyCell::system() const {
    LinearSystem sys(nvars);
    for (const auto& f : equalities) sys.cons.push_back({f, Rel::eq});
    for (const auto& f : inequalities) sys.cons.push_back({f, Rel::ge});
    return sys;
}

bool PolyCell::contains(const VecQ& x) const { return satisfies(system(), x); }

bool PolyCell::contains(const std::vector<double>& x, double eps) const {
    auto value = [&](const AffineForm& f) {
        double v = rat_to_double(f.constant);
        for (int j = 0; j < nvars; ++j) v += rat_to_double(f.coeffs[j]) * x[j];
        return v;
    };
    for (const auto& f : equalities)
        if (std::fabs(value(f)) > eps) return false;
    for (const auto& f : inequalities)
        if (value(f) < -eps) return false;
    return true;
}

int PolyCell::dim() const { return nvars - rank_of_cell_equalities(*this); }

bool member_T(const TropPoly& P, const VecQ& x) {
    return eval_trop(P, x).argmax.size() >= 2;
}

bool member_T(const TropPoly& P, const std::vector<double>& x, double eps) {
    if (P.empty()) throw std::domain_error("tropical polynomial with empty support");
    if (P.support_size() < 2) return false;
    std::vector<double> vals;
    vals.reserve(P.support_size());
    for (const auto& [e, c] : P.terms()) {
        double t = rat_to_double(c);
        for (int j = 0; j < P.nvars(); ++j) t += x[j] * e[j];
        vals.push_back(t);
    }
    std::sort(vals.begin(), vals.end());
    const double top = vals.back(), second = vals[vals.size() - 2];
    if (eps < 0) eps = auto_eps(top);
    return top - second <= eps;
}

bool member_TR(const TropPoly& Pplus, const TropPoly& Pminus, const VecQ& x) {
    check_tr_inputs(Pplus, Pminus);
    return eval_trop(Pplus, x).value == eval_trop(Pminus, x).value;
}

bool member_TR(const TropPoly& Pplus, const TropPoly& Pminus, const std::vector<double>& x,
               double eps) {
    check_tr_inputs(Pplus, Pminus);
    const double p = eval_trop(Pplus, x).value;
    const double q = eval_trop(Pminus, x).value;
    if (eps < 0) eps = auto_eps(std::max(std::fabs(p), std::fabs(q)));
    return std::fabs(p - q) <= eps;
}

PolyComplex cells_T(const TropPoly& P) {
    if (P.empty()) throw std::domain_error("tropical polynomial with empty support");
    if (P.nvars() > kMaxCellVars)
        throw std::invalid_argument("cell enumeration supports at most 4 variables");
    if (P.support_size() > kMaxCellSupport)
        throw std::invalid_argument("cell enumeration supports at most 32 terms");

    const int n = P.nvars();
    std::vector<std::pair<ExpVec, AffineForm>> forms;
    for (const auto& [e, c] : P.terms()) forms.emplace_back(e, term_form(n, e, c));

    PolyComplex out;
    out.nvars = n;
    std::map<std::string, size_t> seen;
    for (size_t i = 0; i < forms.size(); ++i) {
        for (size_t j = i + 1; j < forms.size(); ++j) {
            std::vector<AffineForm> eqs{form_diff(forms[i].second, forms[j].second)};
            std::vector<AffineForm> ineqs;
            for (size_t k = 0; k < forms.size(); ++k)
                if (k != i && k != j) ineqs.push_back(form_diff(forms[i].second, forms[k].second));
            auto cell = build_cell(n, std::move(eqs), std::move(ineqs), {});
            if (!cell) continue;
            if (rank_of_cell_equalities(*cell) != 1) continue;  // not full-dim in T(P)
            const std::string key = cell_key(*cell);
            if (seen.count(key)) continue;
            // Label: every exponent whose term is identically maximal here.
            LinearSystem sys = cell->system();
            for (const auto& [e, f] : forms)
                if (implies(sys, {form_diff(f, forms[i].second), Rel::eq}))
                    cell->label.push_back(e);
            seen.emplace(key, out.cells.size());
            out.cells.push_back(std::move(*cell));
        }
    }
    return out;
}

PolyComplex cells_TR(const TropPoly& Pplus, const TropPoly& Pminus) {
    check_tr_inputs(Pplus, Pminus);
    if (Pplus.nvars() > kMaxCellVars)
        throw std::invalid_argument("cell enumeration supports at most 4 variables");
    if (Pplus.support_size() + Pminus.support_size() > kMaxCellSupport)
        throw std::invalid_argument("cell enumeration supports at most 32 terms");

    const int n = Pplus.nvars();
    std::vector<std::pair<ExpVec, AffineForm>> plus, minus;
    for (const auto& [e, c] : Pplus.terms()) plus.emplace_back(e, term_form(n, e, c));
    for (const auto& [e, c] : Pminus.terms()) minus.emplace_back(e, term_form(n, e, c));

    PolyComplex out;
    out.nvars = n;
    for (const auto& [ep, fp] : plus) {
        for (const auto& [em, fm] : minus) {
            std::vector<AffineForm> eqs{form_diff(fp, fm)};
            std::vector<AffineForm> ineqs;
            for (const auto& [e, f] : plus)
                if (e != ep) ineqs.push_back(form_diff(fp, f));
            for (const auto& [e, f] : minus)
                if (e != em) ineqs.push_back(form_diff(fm, f));
            auto cell = build_cell(n, std::move(eqs), std::move(ineqs), {ep, em});
            if (cell) out.cells.push_back(std::move(*cell));
        }
    }
    return out;
}

bool is_cone(const PolyComplex& C) {
    for (const auto& cell : C.cells) {
        for (const auto& f : cell.equalities)
            if (f.constant != 0) return false;
        for (const auto& f : cell.inequalities)
            if (f.constant != 0) return false;
    }
    return true;
}

int complex_dim(const PolyComplex& C) {
    int best = -1;
    for (const auto& cell : C.cells) best = std::max(best, cell.dim());
    return best;
}

bool TropPrevariety::contains(const VecQ& x) const {
    for (const auto& g : gens)
        if (!member_T(g, x)) return false;
    return true;
}

bool TropPrevariety::contains(const std::vector<double>& x, double eps) const {
    for (const auto& g : gens)
        if (!member_T(g, x, eps)) return false;
    return true;
}

TropPrevariety intersect_T(std::vector<TropPoly> gens) {
    if (gens.empty()) throw std::invalid_argument("intersection needs at least one hypersurface");
    const int n = gens.front().nvars();
    for (const auto& g : gens) {
        if (g.empty()) throw std::domain_error("tropical polynomial with empty support");
        if (g.nvars() != n)
            throw std::invalid_argument("hypersurfaces live in different variable counts");
    }
    return TropPrevariety{std::move(gens)};
}

bool cells_pairwise_faces(const PolyComplex& C) {
    auto face_ok = [&](const PolyCell& a, const PolyCell& b, const LinearSystem& inter) {
        LinearSystem face = a.system();
        for (auto& c : face.cons) {
            if (c.rel != Rel::ge) continue;
            LinearSystem probe = inter;
            probe.cons.push_back({c.form, Rel::gt});
            if (!is_feasible(probe)) c.rel = Rel::eq;  // forced on the intersection
        }
        for (const auto& c : b.system().cons)
            if (!implies(face, c)) return false;
        return true;
    };
    for (size_t i = 0; i < C.cells.size(); ++i) {
        for (size_t j = i + 1; j < C.cells.size(); ++j) {
            LinearSystem inter = C.cells[i].system();
            for (const auto& c : C.cells[j].system().cons) inter.cons.push_back(c);
            if (!is_feasible(inter)) continue;
            if (!face_ok(C.cells[i], C.cells[j], inter)) return false;
            if (!face_ok(C.cells[j], C.cells[i], inter)) return false;
        }
    }
    return true;
}

double cell_distance(const PolyCell& cell, const std::vector<double>& p) {
    const int n = cell.nvars;
    std::vector<double> eq_rhs;
    auto eq_rows = forms_to_rows(cell.equalities, n, &eq_rhs);
    std::vector<double> in_rhs;
    auto in_rows = forms_to_rows(cell.inequalities, n, &in_rhs);
    const size_t m = in_rows.size();
    if (m > 16) throw std::invalid_argument("cell has too many inequalities for projection");

    auto feasible_at = [&](const std::vector<double>& x) {
        for (size_t i = 0; i < m; ++i) {
            double v = 0.0;
            for (int j = 0; j < n; ++j) v += in_rows[i][j] * x[j];
            double scale = 1.0;
            for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(in_rows[i][j] * x[j]));
            if (v < in_rhs[i] - 1e-8 * scale) return false;
        }
        return true;
    };

    double best = std::numeric_limits<double>::infinity();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        auto rows = eq_rows;
        auto rhs = eq_rhs;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) {
                rows.push_back(in_rows[i]);
                rhs.push_back(in_rhs[i]);
            }
        auto x = project_affine(rows, rhs, p);
        if (!x || !feasible_at(*x)) continue;
        double d2 = 0.0;
        for (int j = 0; j < n; ++j) d2 += ((*x)[j] - p[j]) * ((*x)[j] - p[j]);
        best = std::min(best, std::sqrt(d2));
    }
    if (!std::isfinite(best)) {
        double d2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double w = rat_to_double(cell.witness[j]);
            d2 += (w - p[j]) * (w - p[j]);
        }
        best = std::sqrt(d2);
    }
    return best;
}

std::vector<std::vector<double>> cell_affine_basis(const PolyCell& cell) {
    const int n = cell.nvars;
    std::vector<double> rhs;
    auto rows = forms_to_rows(cell.equalities, n, &rhs);
    independent_rows(rows, rhs);
    const size_t m = rows.size();
    // Column echelon bookkeeping: find pivot columns of the reduced rows.
    std::vector<int> pivot_col(m, -1);
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j)
            if (std::fabs(rows[r][j]) > 1e-11) {
                pivot_col[r] = j;
                is_pivot[j] = true;
                break;
            }
    }
    std::vector<std::vector<double>> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<double> v(n, 0.0);
        v[fc] = 1.0;
        for (size_t r = 0; r < m; ++r) {
            if (pivot_col[r] < 0) continue;
            v[pivot_col[r]] = -rows[r][fc] / rows[r][pivot_col[r]];
        }
        // Gram-Schmidt against what we have.
        for (const auto& b : basis) {
            double dot = 0.0;
            for (int j = 0; j < n; ++j) dot += v[j] * b[j];
            for (int j = 0; j < n; ++j) v[j] -= dot * b[j];
        }
        double norm = 0.0;
        for (int j = 0; j < n; ++j) norm += v[j] * v[j];
        norm = std::sqrt(norm);
        if (norm < 1e-12) continue;
        for (int j = 0; j < n; ++j) v[j] /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace trop
