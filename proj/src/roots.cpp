#include "trop/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace trop {

namespace {

constexpr int kMaxSweeps = 256;
constexpr double kRelTol = 1e-12;

double max_abs(const std::vector<std::complex<double>>& c) {
    double m = 0.0;
    for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

RootResult all_roots(std::vector<std::complex<double>> coeffs, uint64_t seed) {
    const double scale = max_abs(coeffs);
    if (!(scale > 0.0)) throw std::domain_error("all_roots: zero polynomial");
    if (!std::isfinite(scale)) throw std::domain_error("all_roots: non-finite coefficient");

    // Degree drops when the top coefficient vanishes along a fiber family;
    // trim relative to the largest coefficient.
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-14 * scale) coeffs.pop_back();

    RootResult out;
    const size_t deg = coeffs.size() - 1;
    if (deg == 0) {
        out.converged = true;
        return out;
    }

    // Monic normalization.
    const std::complex<double> lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    // Cauchy-style inclusion radius.
    double r = 0.0;
    for (size_t i = 0; i < deg; ++i) r = std::max(r, std::abs(coeffs[i]));
    r = 1.0 + r;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    const double theta0 = phase(rng);

    std::vector<std::complex<double>> z(deg);
    for (size_t k = 0; k < deg; ++k) {
        const double th = theta0 + 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(deg);
        z[k] = std::polar(r, th);
    }

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = coeffs[deg];
        for (size_t i = deg; i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };

    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
        double worst = 0.0;
        for (size_t i = 0; i < deg; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (size_t j = 0; j < deg; ++j) {
                if (j != i) denom *= z[i] - z[j];
            }
            if (std::abs(denom) == 0.0) {
                // Collision; nudge deterministically and retry next sweep.
                z[i] += std::polar(1e-6 * r, phase(rng));
                worst = 1.0;
                continue;
            }
            const std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[i])));
        }
        out.iterations = sweep;
        if (worst < kRelTol) {
            out.converged = true;
            break;
        }
    }

    std::sort(z.begin(), z.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.roots = std::move(z);
    return out;
}

}  // namespace trop
