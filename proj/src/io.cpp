#include "trop/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace trop {

namespace {

using nlohmann::json;

Rational coeff_from_json(const json& j) {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rat_from_double(j.get<double>());
    throw std::invalid_argument("coefficient must be a rational string or a number");
}

ExpVec exp_from_json(const json& j, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != nvars)
        throw std::invalid_argument("exponent vector length must equal nvars");
    ExpVec e;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("exponents must be integers");
        e.push_back(v.get<int>());
    }
    return e;
}

json parse_checked(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
}

int nvars_of(const json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j["nvars"].is_number_integer())
        throw std::invalid_argument("polynomial file needs an integer \"nvars\"");
    const int n = j["nvars"].get<int>();
    check_nvars(n);
    return n;
}

const json& terms_of(const json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial file needs a \"terms\" array");
    return j["terms"];
}

std::string rat_json(const Rational& q) { return rat_str(q); }

json form_to_json(const AffineForm& f) {
    json out;
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(rat_json(c));
    out["coeffs"] = coeffs;
    out["constant"] = rat_json(f.constant);
    return out;
}

}  // namespace

LaurentPoly laurent_from_json(const std::string& text) {
    const json j = parse_checked(text);
    const int n = nvars_of(j);
    LaurentPoly f(n);
    for (const auto& t : terms_of(j)) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
            throw std::invalid_argument("each term needs \"coeff\" and \"exp\"");
        f.add_term(exp_from_json(t["exp"], n), coeff_from_json(t["coeff"]));
    }
    return f;
}

std::string laurent_to_json(const LaurentPoly& f) {
    json j;
    j["nvars"] = f.nvars();
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["coeff"] = rat_json(c);
        t["exp"] = e;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

TropPoly trop_from_json(const std::string& text) {
    const json j = parse_checked(text);
    const int n = nvars_of(j);
    TropPoly P(n);
    for (const auto& t : terms_of(j)) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
            throw std::invalid_argument("each term needs \"coeff\" and \"exp\"");
        P.set_term(exp_from_json(t["exp"], n), coeff_from_json(t["coeff"]));
    }
    return P;
}

std::string trop_to_json(const TropPoly& P) {
    json j;
    j["nvars"] = P.nvars();
    json terms = json::array();
    for (const auto& [e, c] : P.terms()) {
        json t;
        t["coeff"] = rat_json(c);
        t["exp"] = e;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

ValuedPoly valued_from_json(const std::string& text) {
    const json j = parse_checked(text);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("series polynomial file needs a \"coeffs\" array");
    ValuedPoly f(1);
    for (const auto& t : j["coeffs"]) {
        if (!t.is_object() || !t.contains("deg") || !t.contains("series") ||
            !t["deg"].is_number_integer() || !t["series"].is_string())
            throw std::invalid_argument("each coefficient needs integer \"deg\" and \"series\"");
        const int deg = t["deg"].get<int>();
        if (deg < 0) throw std::invalid_argument("degrees must be nonnegative");
        f.add_term({deg}, parse_puiseux(t["series"].get<std::string>()));
    }
    return f;
}

std::string complex_to_json(const PolyComplex& C) {
    json j;
    j["nvars"] = C.nvars;
    j["dim"] = complex_dim(C);
    json cells = json::array();
    for (const auto& cell : C.cells) {
        json jc;
        jc["dim"] = cell.dim();
        json eqs = json::array();
        for (const auto& f : cell.equalities) eqs.push_back(form_to_json(f));
        jc["equalities"] = eqs;
        json ineqs = json::array();
        for (const auto& f : cell.inequalities) ineqs.push_back(form_to_json(f));
        jc["inequalities"] = ineqs;
        json label = json::array();
        for (const auto& e : cell.label) label.push_back(e);
        jc["label"] = label;
        json wit = json::array();
        for (const auto& q : cell.witness) wit.push_back(rat_json(q));
        jc["witness"] = wit;
        cells.push_back(jc);
    }
    j["cells"] = cells;
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\r\n") != std::string::npos) {
            out += '"';
            for (char ch : c) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        } else {
            out += c;
        }
    }
    out += "\r\n";
    return out;
}

std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string fmt_px(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double form_at(const AffineForm& f, const std::vector<double>& p) {
    double s = rat_to_double(f.constant);
    for (size_t i = 0; i < p.size(); ++i) s += rat_to_double(f.coeffs[i]) * p[i];
    return s;
}

double form_along(const AffineForm& f, const std::vector<double>& d) {
    double s = 0.0;
    for (size_t i = 0; i < d.size(); ++i) s += rat_to_double(f.coeffs[i]) * d[i];
    return s;
}

// Clip {w + t d : constraints of cell, inside box} to a t-interval.
bool clip_line(const PolyCell& cell, const std::vector<double>& w, const std::vector<double>& d,
               const Box& box, double* t0, double* t1) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    auto cut = [&](double v, double s) {
        // v + t s >= 0
        if (std::abs(s) < 1e-14) return v >= -1e-9;
        const double t = -v / s;
        if (s > 0) {
            lo = std::max(lo, t);
        } else {
            hi = std::min(hi, t);
        }
        return true;
    };
    for (size_t i = 0; i < w.size(); ++i) {
        if (!cut(w[i] - box.lo[i], d[i])) return false;
        if (!cut(box.hi[i] - w[i], -d[i])) return false;
    }
    for (const auto& f : cell.inequalities) {
        if (!cut(form_at(f, w), form_along(f, d))) return false;
    }
    if (!(lo < hi)) return false;
    *t0 = lo;
    *t1 = hi;
    return true;
}

}  // namespace

std::string svg_scatter(const std::vector<std::array<double, 2>>& pts, const PolyComplex* overlay,
                        const Box& box, int width, int height) {
    if (box.lo.size() != 2 || box.hi.size() != 2)
        throw std::invalid_argument("svg_scatter needs a 2d box");
    const double margin = 42.0;
    const double spanx = box.hi[0] - box.lo[0];
    const double spany = box.hi[1] - box.lo[1];
    if (!(spanx > 0.0) || !(spany > 0.0)) throw std::invalid_argument("svg_scatter: empty box");
    auto px = [&](double x) { return margin + (x - box.lo[0]) / spanx * (width - 2 * margin); };
    auto py = [&](double y) { return height - margin - (y - box.lo[1]) / spany * (height - 2 * margin); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
    s += "<rect x=\"" + fmt_px(margin) + "\" y=\"" + fmt_px(margin) + "\" width=\"" +
         fmt_px(width - 2 * margin) + "\" height=\"" + fmt_px(height - 2 * margin) +
         "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + fmt_px(margin) + "\" y=\"" + fmt_px(height - margin + 16.0) +
         "\" font-family=\"monospace\" font-size=\"11\">" + fmt_g12(box.lo[0]) + "," +
         fmt_g12(box.lo[1]) + "</text>\n";
    s += "<text x=\"" + fmt_px(width - margin - 120.0) + "\" y=\"" + fmt_px(margin - 8.0) +
         "\" font-family=\"monospace\" font-size=\"11\">" + fmt_g12(box.hi[0]) + "," +
         fmt_g12(box.hi[1]) + "</text>\n";

    for (const auto& p : pts) {
        if (p[0] < box.lo[0] || p[0] > box.hi[0] || p[1] < box.lo[1] || p[1] > box.hi[1]) continue;
        s += "<circle cx=\"" + fmt_px(px(p[0])) + "\" cy=\"" + fmt_px(py(p[1])) +
             "\" r=\"1.4\" fill=\"#1f6fb4\" fill-opacity=\"0.55\"/>\n";
    }

    if (overlay) {
        for (const auto& cell : overlay->cells) {
            if (cell.nvars != 2) continue;
            std::vector<double> w(2);
            for (int i = 0; i < 2; ++i) w[i] = rat_to_double(cell.witness[i]);
            const auto basis = cell_affine_basis(cell);
            if (basis.empty()) {
                if (!box.contains(w, 0.0)) continue;
                s += "<rect x=\"" + fmt_px(px(w[0]) - 2.5) + "\" y=\"" + fmt_px(py(w[1]) - 2.5) +
                     "\" width=\"5\" height=\"5\" fill=\"#d62728\"/>\n";
            } else if (basis.size() == 1) {
                double t0 = 0, t1 = 0;
                if (!clip_line(cell, w, basis[0], box, &t0, &t1)) continue;
                const double x1 = w[0] + t0 * basis[0][0], y1 = w[1] + t0 * basis[0][1];
                const double x2 = w[0] + t1 * basis[0][0], y2 = w[1] + t1 * basis[0][1];
                s += "<line x1=\"" + fmt_px(px(x1)) + "\" y1=\"" + fmt_px(py(y1)) + "\" x2=\"" +
                     fmt_px(px(x2)) + "\" y2=\"" + fmt_px(py(y2)) +
                     "\" stroke=\"#d62728\" stroke-width=\"1.8\"/>\n";
            }
            // Full-dimensional cells are not drawn; the overlay is meant for
            // curves in the plane.
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace trop
