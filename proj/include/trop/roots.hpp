#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace trop {

struct RootResult {
    std::vector<std::complex<double>> roots;
    bool converged = false;
    int iterations = 0;
};

// Simultaneous-iteration (Durand-Kerner) root finder for one complex
// polynomial, coefficients by ascending degree. Starts on a circle with a
// seed-determined phase, runs at most 256 sweeps, declares convergence at
// 1e-12 relative movement. Near-zero leading coefficients are trimmed first.
RootResult all_roots(std::vector<std::complex<double>> coeffs, uint64_t seed);

}  // namespace trop
