#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trop/laurent.hpp"
#include "trop/polyhedral.hpp"

namespace trop {

// Point of Log_h|.| applied to a torus point: u_j = h * ln|x_j|.
using LogPoint = std::vector<double>;
// Unit vector on the sphere at infinity.
using SpherePoint = std::vector<double>;

// u_j = h * ln|x_j|; any zero coordinate is outside the torus.
LogPoint log_map(const std::vector<double>& x, double h = 1.0);

// Radial projection u / ||u||_2; throws on the origin.
SpherePoint sphere_project(const LogPoint& u);

struct AmoebaSamples {
    std::vector<std::array<double, 2>> points;  // (log|x|, log|y|)
    size_t fibers_attempted = 0;
    size_t fibers_failed = 0;    // root finder did not converge
    size_t roots_total = 0;
    size_t roots_filtered = 0;   // rejected by the lopsidedness filter
};

// Samples Log|V(f)| for a two-variable Laurent polynomial by slicing along
// |x| = e^u, arg x = theta over an n_radii x n_angles grid, solving the fiber
// polynomial in y, and keeping only points where no single monomial of f
// dominates the sum of all others (slack >= -1e-6 in log scale). Points come
// back sorted lexicographically, so the output is canonical for a fixed seed.
AmoebaSamples sample_plane_curve_amoeba(const LaurentPoly& f, int n_radii, int n_angles,
                                        double umin, double umax, uint64_t seed);

// Real points of V(f) inside a fixed orthant of (R*)^2: scans |x| = e^u over
// [umin, umax] and keeps real fiber roots with the requested signs, then does
// the same with the roles of x and y swapped for coverage near vertical
// tangents. Returns signed coordinate pairs (x, y), sorted lexicographically.
std::vector<std::array<double, 2>> sample_real_curve_orthant(const LaurentPoly& f,
                                                             const OrthantSign& s, double umin,
                                                             double umax, int n, uint64_t seed);

struct DeformationSample {
    double h = 1.0;
    std::vector<LogPoint> points;
};

// Applies u = h * ln|x| to every sample; coordinates must be nonzero.
DeformationSample deform_family(const std::vector<std::vector<double>>& samples, double h);

struct Box {
    std::vector<double> lo, hi;
    bool contains(const std::vector<double>& p, double tol) const;
    double diameter() const;
};

struct HausdorffEstimate {
    double sample_to_complex = 0.0;
    double complex_to_sample = 0.0;
    double value = 0.0;
};

// Symmetric Hausdorff distance, restricted to the box, between a point cloud
// and a polyhedral complex: exact point-to-cell projection one way, a grid of
// step grid_step laid over each cell's affine hull the other way.
HausdorffEstimate hausdorff_to_tropical(const std::vector<LogPoint>& samples,
                                        const PolyComplex& complex, const Box& box,
                                        double grid_step);

struct IdealPointOptions {
    double escape_norm = 10.0;  // ||Log x_n|| must exceed this at the tail
    double tail_tol = 1e-3;     // accepted gap between the last two extrapolants
    double h = 1.0;
};

enum class IdealPointStatus { converged, not_escaping, diverged };

struct IdealPointResult {
    IdealPointStatus status = IdealPointStatus::diverged;
    SpherePoint limit;                      // unit vector (empty unless converged)
    double tail_gap = 0.0;                  // Cauchy estimate from the tableau
    std::vector<SpherePoint> projections;   // sphere trace of the whole sequence
    std::vector<double> norms;
};

// Limit of sphere_project(log_map(x_n)) for a sequence escaping to infinity:
// Richardson extrapolation in t = 1/||Log x_n|| over the last quarter of the
// sequence, with the gap between the two deepest tableau entries as the
// convergence certificate. Needs at least 8 points.
IdealPointResult ideal_point_limit(const std::vector<std::vector<double>>& seq,
                                   const IdealPointOptions& opt = {});

}  // namespace trop
