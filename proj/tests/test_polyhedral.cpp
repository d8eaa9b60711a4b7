#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "trop/feasibility.hpp"
#include "trop/polyhedral.hpp"

using namespace trop;

namespace {

TropPoly random_trop(std::mt19937_64& rng, int nvars, int max_terms) {
    std::uniform_int_distribution<int> nt(2, max_terms);
    std::uniform_int_distribution<int> ed(-3, 3);
    std::uniform_int_distribution<long long> cn(-6, 6);
    TropPoly P(nvars);
    const int k = nt(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e;
        for (int j = 0; j < nvars; ++j) e.push_back(ed(rng));
        P.set_term(e, Rational(cn(rng), 3));
    }
    return P;
}

VecQ random_point(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<long long> num(-15, 15);
    std::uniform_int_distribution<long long> den(1, 6);
    VecQ x;
    for (int j = 0; j < nvars; ++j) x.push_back(Rational(num(rng), den(rng)));
    return x;
}

// Values of every linear piece at x, recomputed from the raw terms.
std::vector<Rational> piece_values(const TropPoly& P, const VecQ& x) {
    std::vector<Rational> vals;
    for (const auto& [e, c] : P.terms()) {
        Rational v = c;
        for (size_t j = 0; j < x.size(); ++j) v += Rational(e[j]) * x[j];
        vals.push_back(v);
    }
    return vals;
}

Rational piece_max(const TropPoly& P, const VecQ& x) {
    auto v = piece_values(P, x);
    return *std::max_element(v.begin(), v.end());
}

// Local-linearity probe: the max of affine pieces is linear near x exactly
// when no symmetric second difference along a coordinate is positive, with
// the probe radius chosen small enough (from the top-two gap) that a unique
// leading piece cannot be overtaken.
bool probe_is_corner(const TropPoly& P, const VecQ& x) {
    auto vals = piece_values(P, x);
    std::sort(vals.rbegin(), vals.rend());
    const Rational gap = vals.size() > 1 ? vals[0] - vals[1] : Rational(1);
    long long maxnorm = 1;
    for (const auto& [e, c] : P.terms())
        for (int ej : e) maxnorm = std::max(maxnorm, static_cast<long long>(std::abs(ej)));
    const Rational delta =
        gap == 0 ? Rational(1) : gap / Rational(2 * maxnorm + 1);
    for (size_t j = 0; j < x.size(); ++j) {
        VecQ xp = x, xm = x;
        xp[j] += delta;
        xm[j] -= delta;
        if (piece_max(P, xp) + piece_max(P, xm) != Rational(2) * piece_max(P, x)) return true;
    }
    return false;
}

// A point on the tie hyperplane of two chosen terms, if some coordinate
// separates them.
std::optional<VecQ> tie_point(const TropPoly& P, std::mt19937_64& rng) {
    if (P.support_size() < 2) return std::nullopt;
    std::vector<std::pair<ExpVec, Rational>> ts(P.terms().begin(), P.terms().end());
    const size_t a = rng() % ts.size();
    size_t b = rng() % ts.size();
    if (a == b) return std::nullopt;
    int k = -1;
    for (size_t j = 0; j < ts[a].first.size(); ++j) {
        if (ts[a].first[j] != ts[b].first[j]) {
            k = static_cast<int>(j);
            break;
        }
    }
    if (k < 0) return std::nullopt;
    VecQ x = random_point(rng, static_cast<int>(ts[a].first.size()));
    // Solve c_a + <x, e_a> = c_b + <x, e_b> for x_k.
    Rational lhs = ts[a].second - ts[b].second;
    for (size_t j = 0; j < x.size(); ++j) {
        if (static_cast<int>(j) == k) continue;
        lhs += Rational(ts[a].first[j] - ts[b].first[j]) * x[j];
    }
    x[static_cast<size_t>(k)] = -lhs / Rational(ts[a].first[k] - ts[b].first[k]);
    return x;
}

TropPoly trop_line() {
    TropPoly P(2);
    P.set_term({0, 0}, Rational(0));
    P.set_term({1, 0}, Rational(0));
    P.set_term({0, 1}, Rational(0));
    return P;
}

std::pair<TropPoly, TropPoly> markov_pair() {
    TropPoly plus(3), minus(3);
    plus.set_term({2, 0, 0}, Rational(0));
    plus.set_term({0, 2, 0}, Rational(0));
    plus.set_term({0, 0, 2}, Rational(0));
    minus.set_term({1, 1, 1}, Rational(0));
    return {plus, minus};
}

}  // namespace

TEST_CASE("exact linear feasibility with strict inequalities and witnesses") {
    LinearSystem sys(2);
    sys.add({Rational(-1), Rational(-1)}, Rational(1), Rel::ge);  // x + y <= 1
    sys.add({Rational(1), Rational(0)}, Rational(0), Rel::ge);
    sys.add({Rational(0), Rational(1)}, Rational(0), Rel::gt);  // y strictly positive
    auto w = feasible_point(sys);
    REQUIRE(w.has_value());
    CHECK(satisfies(sys, *w));

    LinearSystem bad(1);
    bad.add({Rational(1)}, Rational(0), Rel::gt);
    bad.add({Rational(-1)}, Rational(0), Rel::gt);
    CHECK(!feasible_point(bad).has_value());

    LinearSystem pinch(1);
    pinch.add({Rational(1)}, Rational(0), Rel::ge);
    pinch.add({Rational(-1)}, Rational(0), Rel::ge);
    REQUIRE(is_feasible(pinch));
    const auto forced = forced_equalities(pinch);
    CHECK(forced.size() == 2);

    LinearSystem half(1);
    half.add({Rational(1)}, Rational(-1), Rel::ge);  // x >= 1
    CHECK(implies(half, {{{Rational(1)}, Rational(0)}, Rel::gt}));   // x > 0
    CHECK(!implies(half, {{{Rational(1)}, Rational(-2)}, Rel::ge}));  // x >= 2
}

TEST_CASE("rank of coefficient rows is exact") {
    std::vector<AffineForm> forms;
    forms.push_back({{Rational(1), Rational(2)}, Rational(0)});
    forms.push_back({{Rational(2), Rational(4)}, Rational(5)});  // dependent
    forms.push_back({{Rational(0), Rational(1)}, Rational(0)});
    CHECK(rank_of_forms(2, forms) == 2);
}

TEST_CASE("corner membership agrees with a local-linearity probe") {
    std::mt19937_64 rng(211);
    int corners = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const int nv = 1 + static_cast<int>(rng() % 3);
        const TropPoly P = random_trop(rng, nv, 6);
        VecQ x = random_point(rng, nv);
        if (rep % 2 == 0) {
            auto t = tie_point(P, rng);
            if (t) x = *t;
        }
        const bool member = member_T(P, x);
        CHECK(member == probe_is_corner(P, x));
        corners += member ? 1 : 0;
    }
    CHECK(corners > 50);  // the engineered tie points must actually land on corners
}

TEST_CASE("corner cells of the tropical line") {
    const PolyComplex C = cells_T(trop_line());
    REQUIRE(C.cells.size() == 3);
    for (const auto& cell : C.cells) {
        CHECK(cell.dim() == 1);
        CHECK(cell.label.size() == 2);
        CHECK(cell.contains(cell.witness));
        // witness sits in the relative interior: all inequalities strict
        for (const auto& f : cell.inequalities) CHECK(eval_form(f, cell.witness) > 0);
        for (const auto& f : cell.equalities) CHECK(eval_form(f, cell.witness) == 0);
    }
    CHECK(is_cone(C));
    CHECK(complex_dim(C) == 1);
    CHECK(cells_pairwise_faces(C));
}

TEST_CASE("a shifted line is not a cone") {
    TropPoly P(2);
    P.set_term({0, 0}, Rational(3));
    P.set_term({1, 0}, Rational(0));
    P.set_term({0, 1}, Rational(0));
    const PolyComplex C = cells_T(P);
    CHECK(C.cells.size() == 3);
    CHECK(!is_cone(C));
    // vertex at (3, 3)
    CHECK(member_T(P, VecQ{Rational(3), Rational(3)}));
}

TEST_CASE("collinear support collapses to one cell with a three-term label") {
    TropPoly P(2);
    P.set_term({0, 0}, Rational(0));
    P.set_term({1, 0}, Rational(0));
    P.set_term({2, 0}, Rational(0));
    const PolyComplex C = cells_T(P);
    REQUIRE(C.cells.size() == 1);
    CHECK(C.cells[0].dim() == 1);
    CHECK(C.cells[0].label.size() == 3);
}

TEST_CASE("cell enumeration covers the corner locus exactly") {
    std::mt19937_64 rng(223);
    for (int rep = 0; rep < 60; ++rep) {
        const int nv = 2 + static_cast<int>(rng() % 2);
        const TropPoly P = random_trop(rng, nv, 5);
        const PolyComplex C = cells_T(P);
        for (int t = 0; t < 12; ++t) {
            VecQ x = random_point(rng, nv);
            if (t % 2 == 0) {
                auto tp = tie_point(P, rng);
                if (tp) x = *tp;
            }
            bool in_cells = false;
            for (const auto& cell : C.cells) in_cells = in_cells || cell.contains(x);
            CHECK(in_cells == member_T(P, x));
        }
    }
}

TEST_CASE("pair locus enumeration covers the sign-split set exactly") {
    std::mt19937_64 rng(227);
    for (int rep = 0; rep < 40; ++rep) {
        const int nv = 2 + static_cast<int>(rng() % 2);
        TropPoly t = random_trop(rng, nv, 6);
        // split the support into two nonempty disjoint halves
        TropPoly plus(nv), minus(nv);
        size_t i = 0;
        for (const auto& [e, c] : t.terms()) {
            if (i % 2 == 0) {
                plus.set_term(e, c);
            } else {
                minus.set_term(e, c);
            }
            ++i;
        }
        if (plus.empty() || minus.empty()) continue;
        const PolyComplex C = cells_TR(plus, minus);
        for (int k = 0; k < 10; ++k) {
            VecQ x = random_point(rng, nv);
            bool in_cells = false;
            for (const auto& cell : C.cells) in_cells = in_cells || cell.contains(x);
            CHECK(in_cells == member_TR(plus, minus, x));
        }
    }
}

TEST_CASE("pair locus input validation") {
    TropPoly a(2), b(2);
    a.set_term({1, 0}, Rational(0));
    b.set_term({1, 0}, Rational(0));
    CHECK_THROWS_AS(member_TR(a, b, VecQ{Rational(0), Rational(0)}), std::invalid_argument);
    TropPoly e(2);
    CHECK_THROWS_AS(member_TR(a, e, VecQ{Rational(0), Rational(0)}), std::domain_error);
}

TEST_CASE("relation cone: three two-dimensional cells glued along rays") {
    const auto [plus, minus] = markov_pair();
    const PolyComplex C = cells_TR(plus, minus);
    REQUIRE(C.cells.size() == 3);
    for (const auto& cell : C.cells) CHECK(cell.dim() == 2);
    CHECK(is_cone(C));
    CHECK(complex_dim(C) == 2);
    CHECK(cells_pairwise_faces(C));

    CHECK(member_TR(plus, minus, VecQ{Rational(1), Rational(1), Rational(2)}));
    CHECK(member_TR(plus, minus, VecQ{Rational(1), Rational(0), Rational(1)}));
    CHECK(member_TR(plus, minus, VecQ{Rational(0), Rational(1), Rational(1)}));
    CHECK(!member_TR(plus, minus, VecQ{Rational(1), Rational(1), Rational(1)}));

    // the three glue rays each lie in exactly two of the three cells
    const std::vector<VecQ> rays = {{Rational(1), Rational(1), Rational(0)},
                                    {Rational(1), Rational(0), Rational(1)},
                                    {Rational(0), Rational(1), Rational(1)}};
    for (const auto& r : rays) {
        int hit = 0;
        for (const auto& cell : C.cells) hit += cell.contains(r) ? 1 : 0;
        CHECK(hit == 2);
    }
}

TEST_CASE("membership in a cone is scale invariant, checked exactly") {
    const auto [plus, minus] = markov_pair();
    std::mt19937_64 rng(229);
    for (int rep = 0; rep < 200; ++rep) {
        VecQ x = random_point(rng, 3);
        const bool base = member_TR(plus, minus, x);
        for (const Rational& lam : {Rational(2), Rational(1, 2), Rational(7, 3)}) {
            VecQ y = x;
            for (auto& c : y) c *= lam;
            CHECK(member_TR(plus, minus, y) == base);
        }
    }
    const PolyComplex C = cells_T(trop_line());
    for (int rep = 0; rep < 100; ++rep) {
        VecQ x = random_point(rng, 2);
        for (const auto& cell : C.cells) {
            const bool base = cell.contains(x);
            VecQ y = x;
            for (auto& c : y) c *= Rational(2);
            CHECK(cell.contains(y) == base);
        }
    }
}

TEST_CASE("float membership tolerates eps-sized slack") {
    const TropPoly P = trop_line();
    CHECK(member_T(P, std::vector<double>{0.0, 0.0}));
    CHECK(member_T(P, std::vector<double>{1e-12, 0.0}));
    CHECK(!member_T(P, std::vector<double>{0.5, 0.0}));
    CHECK(member_T(P, std::vector<double>{0.5, 0.0}, 0.6));
}

TEST_CASE("prevariety membership is the conjunction of the generators") {
    TropPoly a = trop_line();
    TropPoly b(2);
    b.set_term({0, 0}, Rational(1));
    b.set_term({1, 0}, Rational(0));
    b.set_term({0, 1}, Rational(0));
    const TropPrevariety V = intersect_T({a, b});
    std::mt19937_64 rng(233);
    for (int rep = 0; rep < 150; ++rep) {
        VecQ x = random_point(rng, 2);
        CHECK(V.contains(x) == (member_T(a, x) && member_T(b, x)));
    }
}

TEST_CASE("distance to a cell and its affine basis") {
    const PolyComplex C = cells_T(trop_line());
    // nearest cell to (2, 1) is the diagonal ray; the projection is (3/2, 3/2)
    double best = 1e18;
    for (const auto& cell : C.cells) best = std::min(best, cell_distance(cell, {2.0, 1.0}));
    CHECK(std::abs(best - 0.7071067811865476) <= 1e-9);

    for (const auto& cell : C.cells) {
        const auto basis = cell_affine_basis(cell);
        REQUIRE(basis.size() == 1);
        double n2 = 0;
        for (double v : basis[0]) n2 += v * v;
        CHECK(std::abs(n2 - 1.0) <= 1e-12);
        // basis direction annihilates the equality normals
        for (const auto& f : cell.equalities) {
            double dot = 0;
            for (size_t j = 0; j < basis[0].size(); ++j)
                dot += rat_to_double(f.coeffs[j]) * basis[0][j];
            CHECK(std::abs(dot) <= 1e-12);
        }
    }
}

TEST_CASE("distance to a bounded segment clamps to its endpoints") {
    // the segment {0} x [0, 1]
    PolyCell cell;
    cell.nvars = 2;
    cell.equalities.push_back({{Rational(1), Rational(0)}, Rational(0)});
    cell.inequalities.push_back({{Rational(0), Rational(1)}, Rational(0)});    // y >= 0
    cell.inequalities.push_back({{Rational(0), Rational(-1)}, Rational(1)});   // y <= 1
    cell.witness = {Rational(0), Rational(1, 2)};
    CHECK(std::abs(cell_distance(cell, {0.0, 0.5}) - 0.0) <= 1e-12);
    CHECK(std::abs(cell_distance(cell, {3.0, 0.5}) - 3.0) <= 1e-9);
    CHECK(std::abs(cell_distance(cell, {0.0, 2.5}) - 1.5) <= 1e-9);
    CHECK(std::abs(cell_distance(cell, {1.0, -1.0}) - std::sqrt(2.0)) <= 1e-9);
}

TEST_CASE("enumeration limits are enforced") {
    TropPoly big(5);
    ExpVec e(5, 0);
    big.set_term(e, Rational(0));
    e[0] = 1;
    big.set_term(e, Rational(0));
    CHECK_THROWS_AS(cells_T(big), std::invalid_argument);
}
