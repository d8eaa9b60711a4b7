#pragma once

#include <vector>

#include "trop/feasibility.hpp"
#include "trop/trop_poly.hpp"

namespace trop {

// One polyhedral cell of a tropical set: {x : all equalities = 0, all
// inequalities >= 0}, constraint data exact. The label lists the exponents
// whose terms are tied-and-maximal on the cell (for real pairs, the tied
// plus-exponents followed by the tied minus-exponents). Cells are stored
// canonicalized: inequalities that the cell forces to equality are moved into
// the equality list, so nvars - rank(equalities) is the affine-hull dimension.
struct PolyCell {
    int nvars = 0;
    std::vector<AffineForm> equalities;
    std::vector<AffineForm> inequalities;
    std::vector<ExpVec> label;
    VecQ witness;  // a certified interior-ish point

    LinearSystem system() const;
    bool contains(const VecQ& x) const;
    bool contains(const std::vector<double>& x, double eps) const;
    int dim() const;  // nvars - rank of the equality system
};

struct PolyComplex {
    int nvars = 0;
    std::vector<PolyCell> cells;
};

// Exact membership: at least two terms of P attain the max at x.
bool member_T(const TropPoly& P, const VecQ& x);
// Float membership: a tie of the top two values within eps; eps < 0 selects
// the default 1e-9 * (1 + |max|).
bool member_T(const TropPoly& P, const std::vector<double>& x, double eps = -1.0);

// Membership in the real pair locus {Pplus = Pminus}; supports must be
// disjoint and both nonempty.
bool member_TR(const TropPoly& Pplus, const TropPoly& Pminus, const VecQ& x);
bool member_TR(const TropPoly& Pplus, const TropPoly& Pminus, const std::vector<double>& x,
               double eps = -1.0);

// Enumerates the cells of T(P) (ties of pairs dominating the rest), keeping
// the cells of affine dimension nvars-1; their union is all of T(P) because
// the corner locus of a convex piecewise-linear function is pure of
// codimension one. Exact; nvars <= 4.
PolyComplex cells_T(const TropPoly& P);

// Enumerates all nonempty pair cells of {Pplus = Pminus}, one per tie pair
// (wplus, wminus); no dimension filter, the union is exactly the locus.
PolyComplex cells_TR(const TropPoly& Pplus, const TropPoly& Pminus);

bool is_cone(const PolyComplex& C);

// Max over cells of nvars - rank(equalities); -1 for an empty complex.
int complex_dim(const PolyComplex& C);

// Finite intersection of tropical hypersurfaces, as a membership predicate.
// This contains the tropicalized variety of the generating set but can be
// strictly larger; it is exactly the set cut out by the generators given.
struct TropPrevariety {
    std::vector<TropPoly> gens;
    bool contains(const VecQ& x) const;
    bool contains(const std::vector<double>& x, double eps = -1.0) const;
};

TropPrevariety intersect_T(std::vector<TropPoly> gens);

// Desk-scale complex sanity: every pairwise intersection of cells is a face
// of both. Exact.
bool cells_pairwise_faces(const PolyComplex& C);

// Euclidean distance from p to the cell, by projecting onto the affine span
// of every face subset and keeping the nearest feasible projection. Float
// arithmetic over the exact constraint data.
double cell_distance(const PolyCell& cell, const std::vector<double>& p);

// Orthonormal basis (float) of the direction space of the cell's affine hull.
std::vector<std::vector<double>> cell_affine_basis(const PolyCell& cell);

}  // namespace trop
