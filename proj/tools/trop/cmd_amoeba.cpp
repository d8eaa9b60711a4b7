#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <limits>
#include <memory>
#include <random>

#include "common.hpp"
#include "trop/amoeba.hpp"
#include "trop/io.hpp"
#include "trop/polyhedral.hpp"
#include "trop/roots.hpp"

namespace tropcli {

namespace {

struct AmoebaOpts {
    std::string poly;
    std::string grid = "96x64";
    std::string window = "-6,6";
    uint64_t seed = 1;
    std::string out;
    std::string svg;
    bool overlay = false;
};

std::complex<double> ipow(std::complex<double> x, int k) {
    std::complex<double> p(1.0, 0.0);
    const std::complex<double> base = k >= 0 ? x : 1.0 / x;
    for (int i = 0; i < std::abs(k); ++i) p *= base;
    return p;
}

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

// No single monomial may dominate the sum of the others at u; genuine points
// of the log image always pass (same -1e-6 slack as the plane sampler).
bool balanced(const std::vector<std::pair<trop::ExpVec, double>>& logs,
              const std::vector<double>& u) {
    std::vector<double> t(logs.size());
    for (size_t i = 0; i < logs.size(); ++i) {
        double v = logs[i].second;
        for (size_t j = 0; j < u.size(); ++j)
            v += u[j] * static_cast<double>(logs[i].first[j]);
        t[i] = v;
    }
    for (size_t i = 0; i < t.size(); ++i) {
        if (lse_others(t, i) - t[i] < -1e-6) return false;
    }
    return true;
}

// Log moduli of the roots of a one-variable Laurent polynomial; the whole
// zero set on the torus, no grid involved.
trop::AmoebaSamples sample_univariate(const trop::LaurentPoly& f, uint64_t seed,
                                      std::vector<std::vector<double>>* pts) {
    int kmin = std::numeric_limits<int>::max();
    int kmax = std::numeric_limits<int>::min();
    for (const auto& [e, c] : f.terms()) {
        kmin = std::min(kmin, e[0]);
        kmax = std::max(kmax, e[0]);
    }
    std::vector<std::complex<double>> coeffs(static_cast<size_t>(kmax - kmin + 1));
    for (const auto& [e, c] : f.terms())
        coeffs[static_cast<size_t>(e[0] - kmin)] += trop::rat_to_double(c);

    trop::AmoebaSamples stats;
    stats.fibers_attempted = 1;
    trop::RootResult rr;
    try {
        rr = trop::all_roots(std::move(coeffs), seed);
    } catch (const std::domain_error&) {
        stats.fibers_failed = 1;
        return stats;
    }
    if (!rr.converged) {
        stats.fibers_failed = 1;
        return stats;
    }
    for (const auto& y : rr.roots) {
        ++stats.roots_total;
        const double ay = std::abs(y);
        if (!(ay > 0.0) || !std::isfinite(ay)) {
            ++stats.roots_filtered;
            continue;
        }
        pts->push_back({std::log(ay)});
    }
    std::sort(pts->begin(), pts->end());
    return stats;
}

// Three-variable analogue of the plane sampler: an n_r x n_a lattice of log
// radii (u1, u2) over the window, one seeded random phase pair per node, and
// a fiber solve in the last variable.
trop::AmoebaSamples sample_threefold(const trop::LaurentPoly& f, int nr, int na, double umin,
                                     double umax, uint64_t seed,
                                     std::vector<std::vector<double>>* pts) {
    std::vector<std::pair<trop::ExpVec, double>> logs;
    for (const auto& [e, c] : f.terms())
        logs.emplace_back(e, std::log(std::abs(trop::rat_to_double(c))));

    int kmin = std::numeric_limits<int>::max();
    int kmax = std::numeric_limits<int>::min();
    for (const auto& [e, c] : f.terms()) {
        kmin = std::min(kmin, e[2]);
        kmax = std::max(kmax, e[2]);
    }

    trop::AmoebaSamples stats;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int ri = 0; ri < nr; ++ri) {
        const double u =
            nr == 1 ? umin : umin + (umax - umin) * static_cast<double>(ri) / (nr - 1);
        for (int ai = 0; ai < na; ++ai) {
            const double v =
                na == 1 ? umin : umin + (umax - umin) * static_cast<double>(ai) / (na - 1);
            const double th1 = angle(rng);
            const double th2 = angle(rng);
            const std::complex<double> x1 = std::polar(std::exp(u), th1);
            const std::complex<double> x2 = std::polar(std::exp(v), th2);

            std::vector<std::complex<double>> coeffs(static_cast<size_t>(kmax - kmin + 1));
            for (const auto& [e, c] : f.terms()) {
                coeffs[static_cast<size_t>(e[2] - kmin)] +=
                    trop::rat_to_double(c) * ipow(x1, e[0]) * ipow(x2, e[1]);
            }
            double scale = 0.0;
            for (const auto& z : coeffs) scale = std::max(scale, std::abs(z));
            size_t lead0 = 0;
            while (lead0 + 1 < coeffs.size() && std::abs(coeffs[lead0]) <= 1e-14 * scale)
                ++lead0;
            coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead0));
            if (coeffs.size() <= 1) continue;  // fiber is a monomial in x3

            ++stats.fibers_attempted;
            trop::RootResult rr;
            try {
                rr = trop::all_roots(std::move(coeffs),
                                     seed + static_cast<uint64_t>(ri) * 1000003u +
                                         static_cast<uint64_t>(ai));
            } catch (const std::domain_error&) {
                ++stats.fibers_failed;
                continue;
            }
            if (!rr.converged) {
                ++stats.fibers_failed;
                continue;
            }
            for (const auto& y : rr.roots) {
                ++stats.roots_total;
                const double ay = std::abs(y);
                if (!(ay > 0.0) || !std::isfinite(ay)) {
                    ++stats.roots_filtered;
                    continue;
                }
                const std::vector<double> pt{u, v, std::log(ay)};
                if (!balanced(logs, pt)) {
                    ++stats.roots_filtered;
                    continue;
                }
                pts->push_back(pt);
            }
        }
    }
    std::sort(pts->begin(), pts->end());
    return stats;
}

void run(const AmoebaOpts& o) {
    const trop::LaurentPoly f = trop::laurent_from_json(trop::read_text_file(o.poly));
    const int nv = f.nvars();
    if (nv < 1 || nv > 3)
        throw Failure{2, "amoeba sampling handles 1 to 3 variables, got " + std::to_string(nv)};
    if (!o.svg.empty() && nv != 2)
        throw Failure{2, "SVG output needs a 2-variable polynomial"};
    const auto [nr, na] = parse_grid(o.grid);
    const auto [umin, umax] = parse_window(o.window);

    std::vector<std::string> header;
    for (int i = 1; i <= nv; ++i) header.push_back("u" + std::to_string(i));

    if (f.terms().size() <= 1) {
        emit(o.out, trop::csv_line(header));
        throw Failure{4, "a single monomial never vanishes on the torus; amoeba is empty"};
    }

    std::vector<std::vector<double>> pts;
    trop::AmoebaSamples stats;
    if (nv == 1) {
        stats = sample_univariate(f, o.seed, &pts);
    } else if (nv == 2) {
        stats = trop::sample_plane_curve_amoeba(f, nr, na, umin, umax, o.seed);
        for (const auto& p : stats.points) pts.push_back({p[0], p[1]});
    } else {
        stats = sample_threefold(f, nr, na, umin, umax, o.seed, &pts);
    }
    std::cerr << "fibers: " << stats.fibers_attempted << " attempted, " << stats.fibers_failed
              << " failed; roots: " << stats.roots_total << " found, " << stats.roots_filtered
              << " filtered\n";

    std::string csv = trop::csv_line(header);
    for (const auto& p : pts) {
        std::vector<std::string> row;
        for (double x : p) row.push_back(trop::fmt_g12(x));
        csv += trop::csv_line(row);
    }
    emit(o.out, csv);

    if (pts.empty()) {
        if (stats.fibers_attempted == 0)
            throw Failure{4, "no fiber depends on the last variable; nothing to solve"};
        throw Failure{4, "no amoeba points in the window"};
    }

    if (!o.svg.empty()) {
        double lo1 = pts[0][1], hi1 = lo1;
        for (const auto& p : pts) {
            lo1 = std::min(lo1, p[1]);
            hi1 = std::max(hi1, p[1]);
        }
        const double pad = 0.05 * std::max(1.0, hi1 - lo1);
        trop::Box box{{umin, lo1 - pad}, {umax, hi1 + pad}};

        trop::PolyComplex cells;
        if (o.overlay) {
            trop::TropPoly P(2);
            for (const auto& [e, c] : f.terms()) {
                P.set_term(e, trop::rat_from_double(std::log(std::abs(trop::rat_to_double(c)))));
            }
            cells = trop::cells_T(P);
        }
        std::vector<std::array<double, 2>> flat;
        flat.reserve(pts.size());
        for (const auto& p : pts) flat.push_back({p[0], p[1]});
        trop::write_text_file(resolve_out(o.svg),
                              trop::svg_scatter(flat, o.overlay ? &cells : nullptr, box));
    }

    if (stats.fibers_attempted > 0 && 10 * stats.fibers_failed > stats.fibers_attempted) {
        throw Failure{3, "root finder failed on more than 10% of fibers"};
    }
}

}  // namespace

void setup_amoeba(CLI::App& app) {
    auto* sub = app.add_subcommand(
        "amoeba", "sample the log image of a complex hypersurface, optionally against its "
                  "tropical skeleton");
    sub->set_help_flag("--help", "print this help message and exit");
    auto o = std::make_shared<AmoebaOpts>();
    sub->add_option("--poly", o->poly, "Laurent polynomial JSON file (1 to 3 variables)")
        ->required();
    sub->add_option("--grid", o->grid,
                    "radius x angle sample counts, e.g. 96x64; for 3 variables the two counts "
                    "grid the (u1, u2) log radii");
    sub->add_option("--window", o->window, "log-radius window umin,umax");
    sub->add_option("--seed", o->seed, "root finder and phase seed");
    sub->add_option("--out", o->out, "points CSV path (default: stdout)");
    sub->add_option("--svg", o->svg, "write a scatter plot to this SVG file (2 variables only)");
    sub->add_flag("--overlay", o->overlay,
                  "overlay the tropical curve with coefficients log|a_w| on the SVG");
    sub->callback([o] { run(*o); });
}

}  // namespace tropcli
