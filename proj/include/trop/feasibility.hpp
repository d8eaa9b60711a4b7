#pragma once

#include <optional>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

enum class Rel { eq, ge, gt };

// c . x + d, compared against 0 under a Rel.
struct AffineForm {
    VecQ coeffs;
    Rational constant;
};

struct Constraint {
    AffineForm form;
    Rel rel = Rel::ge;
};

struct LinearSystem {
    int nvars = 0;
    std::vector<Constraint> cons;

    explicit LinearSystem(int n = 0) : nvars(n) {}

    void add(VecQ c, Rational d, Rel r) {
        cons.push_back({{std::move(c), std::move(d)}, r});
    }
};

Rational eval_form(const AffineForm& f, const VecQ& x);
bool satisfies(const LinearSystem& sys, const VecQ& x);

// Exact Fourier-Motzkin elimination. Returns a rational witness when the
// system is solvable. Strict inequalities are supported throughout.
std::optional<VecQ> feasible_point(const LinearSystem& sys);
bool is_feasible(const LinearSystem& sys);

// Indices of Rel::ge constraints that cannot be strict anywhere on the
// solution set. Meaningful only for feasible systems.
std::vector<size_t> forced_equalities(const LinearSystem& sys);

// Whether every solution of sys satisfies c.
bool implies(const LinearSystem& sys, const Constraint& c);

// Rank over Q of the coefficient rows (constants ignored).
int rank_of_forms(int nvars, const std::vector<AffineForm>& forms);

}  // namespace trop
