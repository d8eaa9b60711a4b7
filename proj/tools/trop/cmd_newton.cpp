#include <algorithm>
#include <iostream>
#include <memory>

#include "common.hpp"
#include "trop/io.hpp"
#include "trop/puiseux.hpp"

namespace tropcli {

namespace {

struct NewtonOpts {
    std::string in;
    std::string out;
};

void run(const NewtonOpts& o) {
    const trop::ValuedPoly f = trop::valued_from_json(trop::read_text_file(o.in));

    int maxdeg = -1;
    for (const auto& [e, s] : f.terms) {
        if (!s.known_zero()) maxdeg = std::max(maxdeg, e[0]);
    }
    if (maxdeg < 0) throw Failure{2, "the zero polynomial has no Newton polygon"};

    std::vector<trop::PuiseuxSeries> coeffs(static_cast<size_t>(maxdeg) + 1);
    for (const auto& [e, s] : f.terms) {
        if (e[0] <= maxdeg) coeffs[static_cast<size_t>(e[0])] = s;
    }

    const trop::NewtonRoots nr = trop::newton_polygon_roots(coeffs);
    const trop::TropPoly P = trop::tropicalize_valued(f);
    std::vector<trop::Rational> troots = trop::univariate_trop_roots(P);

    std::vector<trop::Rational> vals = nr.finite;
    std::sort(vals.begin(), vals.end());
    std::sort(troots.rbegin(), troots.rend());  // descending = -valuation ascending

    std::string csv = trop::csv_line({"valuation", "tropical_root"});
    const size_t rows = std::max(vals.size(), troots.size());
    bool mismatch = vals.size() != troots.size();
    for (size_t i = 0; i < rows; ++i) {
        std::string a = i < vals.size() ? trop::rat_str(vals[i]) : "";
        std::string b = i < troots.size() ? trop::rat_str(troots[i]) : "";
        if (i < vals.size() && i < troots.size() && troots[i] != -vals[i]) mismatch = true;
        csv += trop::csv_line({a, b});
    }
    emit(o.out, csv);

    if (nr.infinite_count > 0)
        std::cerr << nr.infinite_count << " root(s) with valuation +inf (zero roots)\n";
    if (mismatch)
        throw Failure{5, "tropical roots do not match the negated Newton valuations"};
}

}  // namespace

void setup_newton(CLI::App& app) {
    auto* sub = app.add_subcommand(
        "newton", "root valuations of a univariate polynomial over series, cross-checked "
                  "against the roots of its tropicalization");
    sub->set_help_flag("--help", "print this help message and exit");
    auto o = std::make_shared<NewtonOpts>();
    sub->add_option("--in", o->in, "JSON file with series coefficients by degree")->required();
    sub->add_option("--out", o->out, "CSV output path (default: stdout)");
    sub->callback([o] { run(*o); });
}

}  // namespace tropcli
