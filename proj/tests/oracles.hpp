#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation paths; each oracle reaches the same quantity by a different route.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Leibniz formula: sum over all permutations of sign * prod m[i][p(i)].
inline cplx leibniz_det(const std::vector<std::vector<cplx>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    cplx total{0.0, 0.0};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        cplx term = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// a is 1-based in spirit: a[0] holds a_1.
inline std::vector<std::vector<cplx>> toeplitz_matrix(const std::vector<cplx>& a, int q, int n)
{
    std::vector<std::vector<cplx>> m(q, std::vector<cplx>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[i][j] = a[static_cast<std::size_t>(n - 1 + std::abs(i - j))];
    return m;
}

inline std::vector<std::vector<cplx>> hankel_matrix(const std::vector<cplx>& a, int q, int n)
{
    std::vector<std::vector<cplx>> m(q, std::vector<cplx>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[i][j] = a[static_cast<std::size_t>(n - 1 + i + j)];
    return m;
}

// Taylor coefficients by the discrete Cauchy integral on |z| = radius:
// coeff_k ~ (1/N) sum_j f(r w^j) w^{-jk} / r^k, w = e^{2 pi i / N}.
inline std::vector<cplx> cauchy_coefficients(const std::function<cplx(cplx)>& f, int count, double radius,
                                             int samples = 256)
{
    std::vector<cplx> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < samples; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / samples;
            acc += f(std::polar(radius, theta)) * std::polar(1.0, -theta * k);
        }
        out[static_cast<std::size_t>(k)] = acc / static_cast<double>(samples) / std::pow(radius, k);
    }
    return out;
}

// Composite Simpson rule for the integral of g along the segment [0, z].
inline cplx segment_integral(const std::function<cplx(cplx)>& g, cplx z, int panels = 2000)
{
    const double h = 1.0 / panels;
    cplx acc = g(0.0) + g(z);
    for (int k = 1; k < panels; ++k) acc += (k % 2 ? 4.0 : 2.0) * g(z * (k * h));
    return acc * z * (h / 3.0);
}

// Dense-grid maximum of a scalar function on [lo, hi].
inline double grid_max(const std::function<double(double)>& f, double lo, double hi, int points = 200001)
{
    double best = -INFINITY;
    for (int k = 0; k < points; ++k) best = std::max(best, f(lo + (hi - lo) * k / (points - 1)));
    return best;
}

inline cplx random_disc(std::mt19937_64& g, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(g)), 2.0 * std::numbers::pi * u(g));
}

} // namespace oracle
