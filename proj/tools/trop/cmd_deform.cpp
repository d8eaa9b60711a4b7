#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>

#include "common.hpp"
#include "json.hpp"
#include "trop/amoeba.hpp"
#include "trop/io.hpp"
#include "trop/polyhedral.hpp"

namespace tropcli {

namespace {

struct DeformOpts {
    std::string poly;
    std::string orthant = "+,+";
    std::string hs;
    std::string window = "-4,4";
    int n = 400;
    uint64_t seed = 1;
    double step = 0.0;
    std::string out;
    std::string manifest;
};

void run(const DeformOpts& o) {
    const trop::LaurentPoly f = trop::laurent_from_json(trop::read_text_file(o.poly));
    if (f.nvars() != 2)
        throw Failure{2, "deformation scan is implemented for 2 variables"};
    const auto s = parse_orthant(o.orthant);
    if (s.size() != 2) throw Failure{2, "orthant must have 2 signs"};
    const auto [wmin, wmax] = parse_window(o.window);
    if (o.n < 2) throw Failure{2, "need at least 2 scan points"};

    auto hs = parse_double_list(o.hs);
    if (hs.empty()) throw Failure{2, "need at least one h"};
    for (double h : hs) {
        if (!(h > 0.0) || !std::isfinite(h)) throw Failure{2, "h values must be positive"};
    }
    std::sort(hs.rbegin(), hs.rend());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

    const auto [fp, fm] = trop::sign_split(f, s);
    if (fp.is_zero() || fm.is_zero())
        throw Failure{4, "every monomial has the same sign on this orthant; the real zero set "
                         "there is empty"};
    const trop::TropPoly Pp = trop::tropicalize_trivial(fp);
    const trop::TropPoly Pm = trop::tropicalize_trivial(fm);
    const trop::PolyComplex cells = trop::cells_TR(Pp, Pm);
    if (cells.cells.empty()) throw Failure{4, "the sign-split locus is empty"};

    const trop::Box box{{wmin, wmin}, {wmax, wmax}};
    const double step = o.step > 0.0 ? o.step : (wmax - wmin) / 160.0;

    std::string csv =
        trop::csv_line({"h", "samples", "hausdorff", "sample_to_complex", "complex_to_sample"});
    std::vector<double> dh;
    std::vector<size_t> counts;
    for (double h : hs) {
        const auto raw = trop::sample_real_curve_orthant(f, s, wmin / h, wmax / h, o.n, o.seed);
        std::vector<std::vector<double>> pts;
        pts.reserve(raw.size());
        for (const auto& p : raw) pts.push_back({p[0], p[1]});
        if (pts.empty())
            throw Failure{4, "no curve points in the orthant at h=" + trop::fmt_g12(h)};
        const auto def = trop::deform_family(pts, h);
        trop::HausdorffEstimate est;
        try {
            est = trop::hausdorff_to_tropical(def.points, cells, box, step);
        } catch (const std::domain_error& e) {
            throw Failure{4, std::string(e.what()) + " at h=" + trop::fmt_g12(h)};
        }
        dh.push_back(est.value);
        counts.push_back(def.points.size());
        csv += trop::csv_line({trop::fmt_g12(h), std::to_string(def.points.size()),
                               trop::fmt_g12(est.value), trop::fmt_g12(est.sample_to_complex),
                               trop::fmt_g12(est.complex_to_sample)});
        std::cerr << "h=" << trop::fmt_g12(h) << ": " << def.points.size() << " samples, d_H="
                  << trop::fmt_g12(est.value) << "\n";
    }
    emit(o.out, csv);

    bool monotone = true;
    for (size_t i = 1; i < dh.size(); ++i) {
        if (dh[i] > dh[i - 1] + 1e-9) monotone = false;
    }
    if (!o.manifest.empty()) {
        nlohmann::json j;
        j["cells"] = cells.cells.size();
        j["grid_step"] = step;
        j["h"] = hs;
        j["hausdorff"] = dh;
        j["monotone"] = monotone;
        j["orthant"] = o.orthant;
        j["samples"] = counts;
        j["seed"] = o.seed;
        j["window"] = std::vector<double>{wmin, wmax};
        trop::write_text_file(resolve_out(o.manifest), j.dump(2) + "\n");
    }
}

}  // namespace

void setup_deform(CLI::App& app) {
    auto* sub = app.add_subcommand(
        "deform", "track the h -> 0 log-deformation of a real curve in one orthant against the "
                  "sign-split polyhedral locus");
    sub->set_help_flag("--help", "print this help message and exit");
    auto o = std::make_shared<DeformOpts>();
    sub->add_option("--poly", o->poly, "Laurent polynomial JSON file (2 variables)")->required();
    sub->add_option("--orthant", o->orthant, "signs of the orthant, e.g. +,+ or +,-");
    sub->add_option("--h", o->hs, "comma-separated positive h values")->required();
    sub->add_option("--window", o->window, "box window min,max applied to both log coordinates");
    sub->add_option("--n", o->n, "scan resolution per sweep");
    sub->add_option("--seed", o->seed, "root finder seed");
    sub->add_option("--step", o->step, "grid step for the locus-side distance (default span/160)");
    sub->add_option("--out", o->out, "Hausdorff table CSV path (default: stdout)");
    sub->add_option("--manifest", o->manifest, "write a JSON run manifest here");
    sub->callback([o] { run(*o); });
}

}  // namespace tropcli
