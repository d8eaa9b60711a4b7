#pragma once

#include <array>
#include <string>
#include <vector>

#include "trop/amoeba.hpp"
#include "trop/laurent.hpp"
#include "trop/polyhedral.hpp"
#include "trop/puiseux.hpp"
#include "trop/trop_poly.hpp"

namespace trop {

// Polynomial files: {"nvars": n, "terms": [{"coeff": "p/q" or number,
// "exp": [..]}, ...]}. Coefficients serialize as exact rational strings.
LaurentPoly laurent_from_json(const std::string& text);
std::string laurent_to_json(const LaurentPoly& f);
TropPoly trop_from_json(const std::string& text);
std::string trop_to_json(const TropPoly& P);

// Univariate polynomial with series coefficients:
// {"coeffs": [{"deg": k, "series": "t^3 - 2*t^(1/2)"}, ...]}.
ValuedPoly valued_from_json(const std::string& text);

// Cells with exact constraint data, tie labels, witnesses, dimensions.
std::string complex_to_json(const PolyComplex& C);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// RFC 4180: cells joined by commas, quoted and escaped when needed, CRLF.
std::string csv_line(const std::vector<std::string>& cells);
// Fixed numeric formatting for all emitted tables ("%.12g").
std::string fmt_g12(double v);

// Scatter plot of a log-space point cloud with an optional overlay of the
// dimension <= 1 cells of a two-variable complex, clipped to the box.
std::string svg_scatter(const std::vector<std::array<double, 2>>& pts, const PolyComplex* overlay,
                        const Box& box, int width = 640, int height = 640);

}  // namespace trop
