#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "trop/amoeba.hpp"
#include "trop/trop_poly.hpp"

namespace trop {

struct Sl2 {
    double a = 1, b = 0, c = 0, d = 1;
};

Sl2 sl2_mul(const Sl2& u, const Sl2& v);
Sl2 sl2_inv(const Sl2& u);
double sl2_trace(const Sl2& u);
double sl2_det(const Sl2& u);

struct Sl2Pair {
    Sl2 A, B;
};

// Both determinants must be 1 up to 1e-10.
void validate_sl2_pair(const Sl2Pair& p);

// Trace coordinates (tr A, tr B, tr AB) of a representation of the free
// group on two generators.
struct Character {
    double x = 0, y = 0, z = 0;
};

Character char_of_pair(const Sl2Pair& p);

// A word in the generators: +1 = A, -1 = A^-1, +2 = B, -2 = B^-1.
// At most 64 letters.
using Word = std::vector<signed char>;

Sl2 word_matrix(const Sl2Pair& p, const Word& w);

// Trace of the word as a polynomial in the character, by trace identities:
// cyclic and free reduction, tr(Mg^-1) = tr M tr g - tr(Mg) to clear
// inverses, tr(g^2 S) = tr g tr(gS) - tr S to clear repeats, and the
// three-term recursion for tr((AB)^k) on alternating words.
double trace_of_word(const Character& chi, const Word& w);

// x^2 + y^2 + z^2 - xyz; zero exactly on the characters with tr[A,B] = -2.
double markov_residual(const Character& chi);

// Largest z with x^2 + y^2 + z^2 - xyz = 0 for given x, y; requires the
// discriminant x^2 y^2 - 4x^2 - 4y^2 to be nonnegative.
double teich_solve_z(double x, double y);

// Translation length 2 arccosh(|t|/2) of a hyperbolic element; |t| >= 2.
double length_of_trace(double t);

// The tropicalization of the relation surface: max(2u1, 2u2, 2u3) vs
// u1 + u2 + u3, both with zero coefficients.
std::pair<TropPoly, TropPoly> markov_trop_pair();

// A line in the (x, y) trace plane along which the character escapes:
// each generator trace is either the parameter w itself or a constant.
struct RaySpec {
    bool x_is_w = true;
    double x_const = 0.0;
    bool y_is_w = true;
    double y_const = 0.0;
};

struct BoundaryRayResult {
    IdealPointResult ideal;
    std::vector<Character> chars;  // the characters along the schedule
};

// Follows the ray w = w0 * ratio^k for npoints steps, solving z from the
// relation each time, and extrapolates the sphere trace of
// (log x, log y, log z) to its ideal limit.
BoundaryRayResult boundary_ray_limit(const RaySpec& ray, double w0, double ratio, int npoints,
                                     const IdealPointOptions& opt = {});

struct ProjectionCheck {
    bool compatible = false;
    bool degenerate_projection = false;  // the restricted limit vanished
    double max_dev = 0.0;
};

// Restricts a limit computed from a larger trace list to the coordinates
// idx of a smaller list, renormalizes, and compares against the limit
// computed directly from the smaller list.
ProjectionCheck projection_compatibility_check(const SpherePoint& big_limit,
                                               const std::vector<size_t>& idx,
                                               const SpherePoint& small_limit, double tol = 1e-3);

}  // namespace trop
