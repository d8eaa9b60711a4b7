#include "trop/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>

#include "trop/roots.hpp"

namespace trop {

namespace {

constexpr double kLopsidedSlack = -1e-6;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// log-sum-exp of all entries except index skip.
double lse_others(const std::vector<double>& t, size_t skip) {
    double m = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < t.size(); ++i) {
        if (i != skip) m = std::max(m, t[i]);
    }
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i != skip) s += std::exp(t[i] - m);
    }
    return m + std::log(s);
}

// True when, at u in log coordinates, no single monomial of f strictly
// dominates the sum of all the others. Every genuine amoeba point passes.
bool passes_monomial_balance(const std::vector<std::pair<ExpVec, double>>& terms,
                             const std::array<double, 2>& u) {
    std::vector<double> t(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        t[i] = terms[i].second + u[0] * static_cast<double>(terms[i].first[0]) +
               u[1] * static_cast<double>(terms[i].first[1]);
    }
    for (size_t i = 0; i < t.size(); ++i) {
        if (lse_others(t, i) - t[i] < kLopsidedSlack) return false;
    }
    return true;
}

// Coefficients (ascending in y, shifted so degree 0 is the lowest exponent)
// of f(x0, y), plus the shift applied. Trims genuine y = 0 roots away.
std::vector<std::complex<double>> fiber_in_y(const LaurentPoly& f, std::complex<double> x0,
                                             long long* shift_out) {
    long long jmin = std::numeric_limits<long long>::max();
    long long jmax = std::numeric_limits<long long>::min();
    for (const auto& [e, c] : f.terms()) {
        jmin = std::min(jmin, static_cast<long long>(e[1]));
        jmax = std::max(jmax, static_cast<long long>(e[1]));
    }
    std::vector<std::complex<double>> coeffs(static_cast<size_t>(jmax - jmin + 1));
    for (const auto& [e, c] : f.terms()) {
        const double cd = rat_to_double(c);
        std::complex<double> xp(1.0, 0.0);
        const int k = e[0];
        const std::complex<double> base = k >= 0 ? x0 : 1.0 / x0;
        for (int i = 0; i < std::abs(k); ++i) xp *= base;
        coeffs[static_cast<size_t>(e[1] - jmin)] += cd * xp;
    }
    double scale = 0.0;
    for (const auto& z : coeffs) scale = std::max(scale, std::abs(z));
    size_t lead0 = 0;
    while (lead0 + 1 < coeffs.size() && std::abs(coeffs[lead0]) <= 1e-14 * scale) ++lead0;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead0));
    *shift_out = jmin + static_cast<long long>(lead0);
    return coeffs;
}

}  // namespace

LogPoint log_map(const std::vector<double>& x, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw std::domain_error("log_map: h must be positive");
    LogPoint u(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        if (a == 0.0) throw std::domain_error("log_map: zero coordinate is outside the torus");
        u[i] = h * std::log(a);
    }
    return u;
}

SpherePoint sphere_project(const LogPoint& u) {
    const double n = norm2(u);
    if (!(n > 0.0)) throw std::domain_error("sphere_project: zero vector");
    SpherePoint p(u.size());
    for (size_t i = 0; i < u.size(); ++i) p[i] = u[i] / n;
    return p;
}

AmoebaSamples sample_plane_curve_amoeba(const LaurentPoly& f, int n_radii, int n_angles,
                                        double umin, double umax, uint64_t seed) {
    if (f.nvars() != 2) throw std::invalid_argument("amoeba sampler needs exactly 2 variables");
    if (f.is_zero()) throw std::domain_error("amoeba of the zero polynomial");
    if (n_radii < 1 || n_angles < 1) throw std::invalid_argument("grid must be at least 1x1");
    if (!(umin <= umax)) throw std::invalid_argument("empty radius window");

    std::vector<std::pair<ExpVec, double>> terms;
    for (const auto& [e, c] : f.terms()) {
        terms.emplace_back(e, std::log(std::abs(rat_to_double(c))));
    }

    AmoebaSamples out;
    if (f.terms().size() == 1) return out;  // a monomial never vanishes on the torus

    for (int ri = 0; ri < n_radii; ++ri) {
        const double u =
            n_radii == 1 ? umin : umin + (umax - umin) * static_cast<double>(ri) / (n_radii - 1);
        for (int ai = 0; ai < n_angles; ++ai) {
            const double th = 2.0 * M_PI * static_cast<double>(ai) / n_angles;
            const std::complex<double> x0 = std::polar(std::exp(u), th);
            long long shift = 0;
            auto coeffs = fiber_in_y(f, x0, &shift);
            if (coeffs.size() <= 1) continue;  // fiber is a monomial in y
            ++out.fibers_attempted;
            RootResult rr;
            try {
                rr = all_roots(std::move(coeffs), seed + static_cast<uint64_t>(ri) * 1000003u +
                                                      static_cast<uint64_t>(ai));
            } catch (const std::domain_error&) {
                ++out.fibers_failed;
                continue;
            }
            if (!rr.converged) {
                ++out.fibers_failed;
                continue;
            }
            for (const auto& y : rr.roots) {
                ++out.roots_total;
                const double ay = std::abs(y);
                if (!(ay > 0.0) || !std::isfinite(ay)) {
                    ++out.roots_filtered;
                    continue;
                }
                const std::array<double, 2> pt{u, std::log(ay)};
                if (!passes_monomial_balance(terms, pt)) {
                    ++out.roots_filtered;
                    continue;
                }
                out.points.push_back(pt);
            }
        }
    }
    // Canonical order: output must not depend on fiber traversal order.
    std::sort(out.points.begin(), out.points.end());
    return out;
}

std::vector<std::array<double, 2>> sample_real_curve_orthant(const LaurentPoly& f,
                                                             const OrthantSign& s, double umin,
                                                             double umax, int n, uint64_t seed) {
    if (f.nvars() != 2) throw std::invalid_argument("curve sampler needs exactly 2 variables");
    check_orthant(s, 2);
    if (n < 2) throw std::invalid_argument("need at least 2 scan points");

    std::vector<std::array<double, 2>> out;
    auto scan = [&](bool swapped, uint64_t salt) {
        LaurentPoly g = f;
        if (swapped) {
            LaurentPoly gs(2);
            for (const auto& [e, c] : f.terms()) gs.add_term({e[1], e[0]}, c);
            g = gs;
        }
        const int sx = swapped ? s[1] : s[0];
        const int sy = swapped ? s[0] : s[1];
        for (int i = 0; i < n; ++i) {
            const double u = umin + (umax - umin) * static_cast<double>(i) / (n - 1);
            const std::complex<double> x0(sx * std::exp(u), 0.0);
            long long shift = 0;
            auto coeffs = fiber_in_y(g, x0, &shift);
            if (coeffs.size() <= 1) continue;
            RootResult rr;
            try {
                rr = all_roots(std::move(coeffs), seed + salt + static_cast<uint64_t>(i));
            } catch (const std::domain_error&) {
                continue;
            }
            if (!rr.converged) continue;
            for (const auto& y : rr.roots) {
                if (std::abs(y.imag()) > 1e-8 * (1.0 + std::abs(y))) continue;
                const double yr = y.real();
                if (yr == 0.0 || (yr > 0) != (sy > 0)) continue;
                if (swapped) {
                    out.push_back({yr, x0.real()});
                } else {
                    out.push_back({x0.real(), yr});
                }
            }
        }
    };
    scan(false, 0);
    scan(true, 0x9e3779b97f4a7c15ull);
    std::sort(out.begin(), out.end());
    return out;
}

DeformationSample deform_family(const std::vector<std::vector<double>>& samples, double h) {
    DeformationSample out;
    out.h = h;
    out.points.reserve(samples.size());
    for (const auto& x : samples) out.points.push_back(log_map(x, h));
    return out;
}

bool Box::contains(const std::vector<double>& p, double tol) const {
    if (p.size() != lo.size() || hi.size() != lo.size()) return false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < lo[i] - tol || p[i] > hi[i] + tol) return false;
    }
    return true;
}

double Box::diameter() const {
    double s = 0.0;
    for (size_t i = 0; i < lo.size(); ++i) {
        const double d = hi[i] - lo[i];
        s += d * d;
    }
    return std::sqrt(s);
}

HausdorffEstimate hausdorff_to_tropical(const std::vector<LogPoint>& samples,
                                        const PolyComplex& complex, const Box& box,
                                        double grid_step) {
    if (complex.cells.empty()) throw std::domain_error("hausdorff: empty complex");
    if (!(grid_step > 0.0)) throw std::invalid_argument("hausdorff: grid step must be positive");
    if (box.lo.size() != static_cast<size_t>(complex.nvars) || box.hi.size() != box.lo.size())
        throw std::invalid_argument("hausdorff: box dimension mismatch");

    std::vector<LogPoint> inbox;
    for (const auto& s : samples) {
        if (box.contains(s, 1e-12)) inbox.push_back(s);
    }
    if (inbox.empty()) throw std::domain_error("hausdorff: no samples inside the box");

    HausdorffEstimate est;
    for (const auto& s : inbox) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& cell : complex.cells) best = std::min(best, cell_distance(cell, s));
        est.sample_to_complex = std::max(est.sample_to_complex, best);
    }

    const size_t nv = box.lo.size();
    std::vector<double> center(nv);
    for (size_t i = 0; i < nv; ++i) center[i] = 0.5 * (box.lo[i] + box.hi[i]);
    const double diam = box.diameter();

    bool any_candidate = false;
    for (const auto& cell : complex.cells) {
        std::vector<double> w(nv);
        for (size_t i = 0; i < nv; ++i) w[i] = rat_to_double(cell.witness[i]);
        const auto basis = cell_affine_basis(cell);
        const double reach = dist2(w, center) + diam;
        std::vector<std::vector<double>> candidates;
        if (basis.empty()) {
            candidates.push_back(w);
        } else {
            // Lay a regular grid over the affine hull, wide enough to cover
            // the box seen from the witness; cap the point count by
            // coarsening if the request explodes.
            double step = grid_step;
            double per_axis = 2.0 * reach / step + 1.0;
            double total = std::pow(per_axis, static_cast<double>(basis.size()));
            while (total > 2e6) {
                step *= 2.0;
                per_axis = 2.0 * reach / step + 1.0;
                total = std::pow(per_axis, static_cast<double>(basis.size()));
            }
            const long long m = static_cast<long long>(std::ceil(reach / step));
            std::vector<long long> idx(basis.size(), -m);
            while (true) {
                std::vector<double> p = w;
                for (size_t b = 0; b < basis.size(); ++b) {
                    const double t = static_cast<double>(idx[b]) * step;
                    for (size_t i = 0; i < nv; ++i) p[i] += t * basis[b][i];
                }
                candidates.push_back(std::move(p));
                size_t k = 0;
                while (k < idx.size() && idx[k] == m) {
                    idx[k] = -m;
                    ++k;
                }
                if (k == idx.size()) break;
                ++idx[k];
            }
        }
        for (const auto& p : candidates) {
            if (!box.contains(p, 1e-9)) continue;
            if (!cell.contains(p, 1e-7)) continue;
            any_candidate = true;
            double best = std::numeric_limits<double>::infinity();
            for (const auto& s : inbox) best = std::min(best, dist2(p, s));
            est.complex_to_sample = std::max(est.complex_to_sample, best);
        }
    }
    if (!any_candidate) throw std::domain_error("hausdorff: complex does not meet the box");

    est.value = std::max(est.sample_to_complex, est.complex_to_sample);
    return est;
}

IdealPointResult ideal_point_limit(const std::vector<std::vector<double>>& seq,
                                   const IdealPointOptions& opt) {
    if (seq.size() < 8) throw std::invalid_argument("ideal_point_limit: need at least 8 points");
    if (!(opt.escape_norm > 0.0)) throw std::invalid_argument("ideal_point_limit: bad threshold");

    IdealPointResult res;
    const size_t n = seq.size();
    std::vector<LogPoint> logs(n);
    res.norms.resize(n);
    res.projections.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        logs[i] = log_map(seq[i], opt.h);
        res.norms[i] = norm2(logs[i]);
        if (!(res.norms[i] > 0.0)) {
            res.status = IdealPointStatus::not_escaping;
            return res;
        }
        res.projections.push_back(sphere_project(logs[i]));
    }

    // Escape test: the tail must clear the threshold and keep growing.
    const size_t tail_len = std::min<size_t>(std::max<size_t>(4, n / 4), 8);
    const size_t t0 = n - tail_len;
    bool growing = res.norms.back() > opt.escape_norm;
    for (size_t i = t0 + 1; i < n && growing; ++i) {
        if (!(res.norms[i] > res.norms[i - 1])) growing = false;
    }
    if (!growing) {
        res.status = IdealPointStatus::not_escaping;
        return res;
    }

    // Richardson extrapolation of the sphere trace to t = 1/||Log x|| -> 0.
    const size_t K = tail_len;
    const size_t nv = seq[0].size();
    std::vector<double> t(K);
    for (size_t i = 0; i < K; ++i) t[i] = 1.0 / res.norms[t0 + i];
    std::vector<std::vector<double>> T(K, std::vector<double>(nv));
    for (size_t i = 0; i < K; ++i) T[i] = res.projections[t0 + i];
    std::vector<double> prev_diag = T[K - 1];
    for (size_t j = 1; j < K; ++j) {
        if (j == K - 1) prev_diag = T[K - 1];
        for (size_t i = K; i-- > j;) {
            const double denom = t[i] - t[i - j];
            for (size_t c = 0; c < nv; ++c) {
                T[i][c] = (t[i] * T[i - 1][c] - t[i - j] * T[i][c]) / denom;
            }
        }
    }
    // prev_diag currently holds the depth K-2 entry at row K-1; T[K-1] holds
    // the deepest extrapolant.
    double gap = 0.0;
    for (size_t c = 0; c < nv; ++c) {
        const double d = T[K - 1][c] - prev_diag[c];
        gap += d * d;
    }
    res.tail_gap = std::sqrt(gap);

    const double en = norm2(T[K - 1]);
    if (!(en > 0.0) || !std::isfinite(en) || !std::isfinite(res.tail_gap)) {
        res.status = IdealPointStatus::diverged;
        return res;
    }
    if (res.tail_gap < opt.tail_tol) {
        res.status = IdealPointStatus::converged;
        res.limit.resize(nv);
        for (size_t c = 0; c < nv; ++c) res.limit[c] = T[K - 1][c] / en;
    } else {
        res.status = IdealPointStatus::diverged;
    }
    return res;
}

}  // namespace trop
