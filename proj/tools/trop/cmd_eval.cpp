#include <cmath>
#include <iostream>
#include <memory>

#include "common.hpp"
#include "trop/io.hpp"
#include "trop/trop_poly.hpp"

namespace tropcli {

namespace {

struct EvalOpts {
    std::string poly;
    std::string point;
    std::string hs = "0";
    std::string out;
};

void run(const EvalOpts& o) {
    const trop::TropPoly P = trop::trop_from_json(trop::read_text_file(o.poly));
    if (P.empty()) throw Failure{4, "polynomial has empty support"};

    trop::VecQ xq;
    std::vector<double> xd;
    for (const auto& tok : split(o.point, ',')) {
        trop::Rational q;
        if (tok.find('/') != std::string::npos) {
            q = trop::rat_parse(tok);
        } else {
            size_t pos = 0;
            double v = 0;
            try {
                v = std::stod(tok, &pos);
            } catch (const std::exception&) {
                throw Failure{2, "bad coordinate '" + tok + "'"};
            }
            if (pos != tok.size() || !std::isfinite(v))
                throw Failure{2, "bad coordinate '" + tok + "'"};
            q = trop::rat_from_double(v);
        }
        xq.push_back(q);
        xd.push_back(trop::rat_to_double(q));
    }
    if (static_cast<int>(xq.size()) != P.nvars())
        throw Failure{2, "point has " + std::to_string(xq.size()) + " coordinates, polynomial has " +
                             std::to_string(P.nvars()) + " variables"};

    const auto hs = parse_double_list(o.hs);
    std::string csv = trop::csv_line({"h", "value"});
    for (double h : hs) {
        if (!(h >= 0.0) || !std::isfinite(h)) throw Failure{2, "h values must be finite and >= 0"};
        double val = 0;
        if (h == 0.0) {
            const auto ev = trop::eval_trop(P, xq);
            val = trop::rat_to_double(ev.value);
            std::cerr << "h=0: max attained by " << ev.argmax.size() << " term(s)\n";
        } else {
            val = trop::eval_deq(P, trop::DequantParam{h}, xd);
        }
        csv += trop::csv_line({trop::fmt_g12(h), trop::fmt_g12(val)});
    }
    emit(o.out, csv);
}

}  // namespace

void setup_eval(CLI::App& app) {
    auto* sub = app.add_subcommand(
        "trop-eval", "evaluate a tropical polynomial and its h-smoothed versions at a point");
    sub->set_help_flag("--help", "print this help message and exit");
    auto o = std::make_shared<EvalOpts>();
    sub->add_option("--poly", o->poly, "tropical polynomial JSON file")->required();
    sub->add_option("--point", o->point, "comma-separated coordinates (rationals or decimals)")
        ->required();
    sub->add_option("--h", o->hs, "comma-separated h values; 0 means the tropical value itself");
    sub->add_option("--out", o->out, "CSV output path (default: stdout)");
    sub->callback([o] { run(*o); });
}

}  // namespace tropcli
