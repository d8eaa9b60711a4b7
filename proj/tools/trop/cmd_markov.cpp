#include <cmath>
#include <iostream>
#include <memory>

#include "common.hpp"
#include "json.hpp"
#include "trop/io.hpp"
#include "trop/polyhedral.hpp"
#include "trop/teichmueller.hpp"

namespace tropcli {

namespace {

struct MarkovOpts {
    std::string ray = "w,w";
    double w0 = 4.0;
    double ratio = 1.5;
    int n = 24;
    double escape = 10.0;
    double tail_tol = 1e-3;
    std::string out;
    std::string manifest;
};

trop::RaySpec parse_ray(const std::string& s) {
    const auto toks = split(s, ',');
    if (toks.size() != 2) throw Failure{2, "ray must be two entries, each 'w' or a constant"};
    trop::RaySpec r;
    auto one = [](const std::string& t, bool* is_w, double* cst) {
        if (t == "w") {
            *is_w = true;
            return;
        }
        *is_w = false;
        size_t pos = 0;
        try {
            *cst = std::stod(t, &pos);
        } catch (const std::exception&) {
            throw Failure{2, "ray entry must be 'w' or a number, got '" + t + "'"};
        }
        if (pos != t.size()) throw Failure{2, "ray entry must be 'w' or a number, got '" + t + "'"};
    };
    one(toks[0], &r.x_is_w, &r.x_const);
    one(toks[1], &r.y_is_w, &r.y_const);
    return r;
}

std::string len_or_empty(double t) {
    return std::abs(t) >= 2.0 ? trop::fmt_g12(trop::length_of_trace(t)) : std::string();
}

void run(const MarkovOpts& o) {
    const trop::RaySpec ray = parse_ray(o.ray);
    trop::IdealPointOptions iopt;
    iopt.escape_norm = o.escape;
    iopt.tail_tol = o.tail_tol;
    const trop::BoundaryRayResult res = trop::boundary_ray_limit(ray, o.w0, o.ratio, o.n, iopt);

    std::string csv = trop::csv_line({"x", "y", "z", "lognorm", "p1", "p2", "p3", "len_x", "len_y"});
    double residual_max = 0.0;
    for (size_t k = 0; k < res.chars.size(); ++k) {
        const auto& c = res.chars[k];
        const double scale =
            1.0 + c.x * c.x + c.y * c.y + c.z * c.z + std::abs(c.x * c.y * c.z);
        residual_max = std::max(residual_max, std::abs(trop::markov_residual(c)) / scale);
        std::vector<std::string> row{trop::fmt_g12(c.x), trop::fmt_g12(c.y), trop::fmt_g12(c.z)};
        if (k < res.ideal.norms.size()) {
            row.push_back(trop::fmt_g12(res.ideal.norms[k]));
            for (double p : res.ideal.projections[k]) row.push_back(trop::fmt_g12(p));
        } else {
            row.insert(row.end(), {"", "", "", ""});
        }
        row.push_back(len_or_empty(c.x));
        row.push_back(len_or_empty(c.y));
        csv += trop::csv_line(row);
    }
    emit(o.out, csv);

    const char* status = "diverged";
    if (res.ideal.status == trop::IdealPointStatus::converged) status = "converged";
    if (res.ideal.status == trop::IdealPointStatus::not_escaping) status = "not_escaping";

    bool on_cone = false;
    if (res.ideal.status == trop::IdealPointStatus::converged) {
        const auto [Pp, Pm] = trop::markov_trop_pair();
        on_cone = trop::member_TR(Pp, Pm, res.ideal.limit, 1e-3);
    }

    if (!o.manifest.empty()) {
        nlohmann::json j;
        j["limit"] = res.ideal.limit;
        j["member_eps"] = 1e-3;
        j["on_cone"] = on_cone;
        j["ray"] = o.ray;
        j["residual_max"] = residual_max;
        j["status"] = status;
        j["tail_gap"] = res.ideal.tail_gap;
        trop::write_text_file(resolve_out(o.manifest), j.dump(2) + "\n");
    }
    std::cerr << "status=" << status << " tail_gap=" << trop::fmt_g12(res.ideal.tail_gap) << "\n";

    if (res.ideal.status == trop::IdealPointStatus::not_escaping)
        throw Failure{4, "the ray does not escape: trace norms stay below the threshold"};
    if (res.ideal.status == trop::IdealPointStatus::diverged)
        throw Failure{3, "sphere trace did not settle: extrapolation gap " +
                             trop::fmt_g12(res.ideal.tail_gap)};
    if (!on_cone)
        throw Failure{5, "ideal limit is not on the tropicalized relation cone"};
}

}  // namespace

void setup_markov(CLI::App& app) {
    auto* sub = app.add_subcommand(
        "markov-boundary", "follow a trace ray to infinity and land on the tropicalized "
                           "relation cone");
    sub->set_help_flag("--help", "print this help message and exit");
    auto o = std::make_shared<MarkovOpts>();
    sub->add_option("--ray", o->ray, "generator traces as functions of w: 'w,w', 'w,3', ...");
    sub->add_option("--w0", o->w0, "starting trace value");
    sub->add_option("--ratio", o->ratio, "geometric growth factor (> 1)");
    sub->add_option("--n", o->n, "number of points along the ray (>= 8)");
    sub->add_option("--escape", o->escape, "log-norm threshold for declaring escape");
    sub->add_option("--tail-tol", o->tail_tol, "accepted extrapolation gap");
    sub->add_option("--out", o->out, "schedule CSV path (default: stdout)");
    sub->add_option("--manifest", o->manifest, "write a JSON manifest here");
    sub->callback([o] { run(*o); });
}

}  // namespace tropcli
