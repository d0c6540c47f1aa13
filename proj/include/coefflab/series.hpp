#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace coefflab {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 8;
inline constexpr double kDefaultZeroThreshold = 1e-12;

// Power series c_0 + c_1 z + ... + c_N z^N truncated at a fixed order N.
// Binary operations truncate to the smaller operand order; nothing is ever
// silently extended.
class TruncatedSeries {
public:
    // Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = kDefaultOrder);

    // Coefficients c_0.. given explicitly; missing high-order terms are zero.
    // Throws std::invalid_argument if more than order+1 coefficients are given.
    TruncatedSeries(std::size_t order, std::span<const cplx> coeffs);
    TruncatedSeries(std::size_t order, std::initializer_list<cplx> coeffs);

    static TruncatedSeries unit(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

    const cplx& operator[](std::size_t k) const { return coeffs_.at(k); }
    cplx& operator[](std::size_t k) { return coeffs_.at(k); }

    // Drops every term above new_order. new_order must not exceed order().
    TruncatedSeries truncated(std::size_t new_order) const;

    // Horner evaluation of the polynomial part.
    cplx evaluate(cplx z) const noexcept;

private:
    std::vector<cplx> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

// Multiplicative inverse by the usual recursion
//   r_0 = 1/s_0,  r_k = -(1/s_0) * sum_{j=1..k} s_j r_{k-j}.
// Throws ZeroConstantTerm if |s_0| < zero_threshold.
TruncatedSeries series_reciprocal(const TruncatedSeries& s,
                                  double zero_threshold = kDefaultZeroThreshold);

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t)
{
    return series_mul(s, t);
}

// Largest coefficient-wise modulus of s - t over the common order.
double max_coeff_distance(const TruncatedSeries& s, const TruncatedSeries& t);

} // namespace coefflab
