#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// band-limited fields and independent quadrature oracles. Everything here
// stays off the library's multiplier code paths unless stated otherwise.

#include <cmath>
#include <random>
#include <vector>

#include "nltrans/grid.hpp"

namespace testsup {

using nltrans::Field;
using nltrans::PeriodicGrid;

/// Random trigonometric polynomial with modes 1..kmax, coefficients of
/// size ~amp, plus a constant offset. Deterministic for a given seed.
inline Field random_band_limited(PeriodicGrid grid, std::mt19937& rng, int kmax,
                                 double amp, double offset) {
    std::normal_distribution<double> coef(0.0, 1.0);
    std::vector<double> ca(kmax + 1), sa(kmax + 1);
    for (int k = 1; k <= kmax; ++k) {
        ca[k] = amp * coef(rng) / k;
        sa[k] = amp * coef(rng) / k;
    }
    return Field::sample(grid, [&](double x) {
        double v = offset;
        for (int k = 1; k <= kmax; ++k)
            v += ca[k] * std::cos(k * x) + sa[k] * std::sin(k * x);
        return v;
    });
}

/// Positive random field: offset 1, modes scaled so min stays well above 0.
inline Field random_positive(PeriodicGrid grid, std::mt19937& rng, int kmax = 6,
                             double amp = 0.15) {
    for (int tries = 0; tries < 100; ++tries) {
        Field u = random_band_limited(grid, rng, kmax, amp, 1.0);
        if (nltrans::min_value(u) > 0.3) return u;
    }
    return Field::constant(grid, 1.0);
}

/// Independent L2(0,2pi) norm by plain summation.
inline double quad_l2(const Field& u) {
    double s = 0.0;
    for (double x : u.values()) s += x * x;
    return std::sqrt(u.grid().dx() * s);
}

/// Independent L1 norm.
inline double quad_l1(const Field& u) {
    double s = 0.0;
    for (double x : u.values()) s += std::abs(x);
    return u.grid().dx() * s;
}

/// O(n^2) quadrature of the singular-integral form of Lambda:
///   (1/4pi) p.v. int (u(x) - u(x-y)) / sin^2(y/2) dy,
/// node-pair sum with the diagonal replaced by its analytic limit
/// -2 u''(x), u'' from centered finite differences. Entirely independent
/// of the Fourier multiplier path.
inline Field lambda_singular_quadrature(const Field& u) {
    const int n = u.size();
    const double dx = u.grid().dx();
    Field out = Field::zeros(u.grid());
    for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int l = 0; l < n; ++l) {
            if (l == j) {
                double upp = (u[(j + 1) % n] - 2.0 * u[j] + u[(j + n - 1) % n]) / (dx * dx);
                sum += -2.0 * upp;
            } else {
                double s = std::sin(0.5 * (u.grid().node(j) - u.grid().node(l)));
                sum += (u[j] - u[l]) / (s * s);
            }
        }
        out[j] = dx * sum / (4.0 * std::numbers::pi);
    }
    return out;
}

inline double rel_l2_error(const Field& got, const Field& want) {
    double num = 0.0, den = 0.0;
    for (int j = 0; j < got.size(); ++j) {
        num += (got[j] - want[j]) * (got[j] - want[j]);
        den += want[j] * want[j];
    }
    return std::sqrt(num / den);
}

} // namespace testsup
