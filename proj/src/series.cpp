#include "coefflab/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coefflab/error.hpp"

namespace coefflab {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, cplx{0.0, 0.0}) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::span<const cplx> coeffs)
    : TruncatedSeries(order)
{
    if (coeffs.size() > order + 1) {
        throw std::invalid_argument("TruncatedSeries: " + std::to_string(coeffs.size()) +
                                    " coefficients exceed order " + std::to_string(order));
    }
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<cplx> coeffs)
    : TruncatedSeries(order, std::span<const cplx>(coeffs.begin(), coeffs.size()))
{
}

TruncatedSeries TruncatedSeries::unit(std::size_t order)
{
    TruncatedSeries one(order);
    one.coeffs_[0] = 1.0;
    return one;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw std::invalid_argument("TruncatedSeries::truncated: cannot extend order " +
                                    std::to_string(order()) + " to " +
                                    std::to_string(new_order));
    }
    return TruncatedSeries(new_order, std::span<const cplx>(coeffs_.data(), new_order + 1));
}

cplx TruncatedSeries::evaluate(cplx z) const noexcept
{
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const std::size_t n = std::min(s.order(), t.order());
    TruncatedSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i <= k; ++i) {
            acc += s[i] * t[k - i];
        }
        out[k] = acc;
    }
    return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s, double zero_threshold)
{
    if (std::abs(s[0]) < zero_threshold) {
        throw ZeroConstantTerm("series_reciprocal: |s_0| = " + std::to_string(std::abs(s[0])) +
                               " is below threshold");
    }
    const std::size_t n = s.order();
    const cplx inv0 = 1.0 / s[0];
    TruncatedSeries r(n);
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += s[j] * r[k - j];
        }
        r[k] = -inv0 * acc;
    }
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const std::size_t n = std::min(s.order(), t.order());
    TruncatedSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) out[k] = s[k] + t[k];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const std::size_t n = std::min(s.order(), t.order());
    TruncatedSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) out[k] = s[k] - t[k];
    return out;
}

double max_coeff_distance(const TruncatedSeries& s, const TruncatedSeries& t)
{
    const std::size_t n = std::min(s.order(), t.order());
    double worst = 0.0;
    for (std::size_t k = 0; k <= n; ++k) worst = std::max(worst, std::abs(s[k] - t[k]));
    return worst;
}

} // namespace coefflab
