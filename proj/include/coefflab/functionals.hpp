#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coefflab/series.hpp"

namespace coefflab {

// Normalized coefficients a_1..a_m of f(z) = z + a_2 z^2 + ..., with a_1 == 1.
class CoefficientWindow {
public:
    // Full window a_1..a_m. Throws InvalidWindow if empty or a_1 != 1 exactly.
    explicit CoefficientWindow(std::vector<cplx> a);
    CoefficientWindow(std::initializer_list<cplx> a);

    // Builds a_1 = 1 followed by the given a_2, a_3, ...
    static CoefficientWindow from_tail(std::span<const cplx> a2_onwards);

    std::size_t size() const noexcept { return a_.size(); }

    // 1-based coefficient access; throws WindowTooShort when k > size().
    const cplx& a(std::size_t k) const;

    const std::vector<cplx>& values() const noexcept { return a_; }

private:
    std::vector<cplx> a_;
};

enum class DeterminantKind { Toeplitz, Hankel };

struct DeterminantId {
    DeterminantKind kind = DeterminantKind::Toeplitz;
    int q = 1;
    int n = 1;

    // Highest coefficient index the q x q matrix touches.
    std::size_t required_length() const;

    bool operator==(const DeterminantId&) const = default;
};

// "T3,2" / "H2,3" (whitespace-free). Throws std::invalid_argument on bad syntax.
DeterminantId parse_determinant_id(std::string_view text);
std::string to_string(const DeterminantId& id);

// Ids with an explicit polynomial form.
inline constexpr std::array<DeterminantId, 7> kClosedFormIds{{
    {DeterminantKind::Toeplitz, 2, 2},
    {DeterminantKind::Toeplitz, 2, 3},
    {DeterminantKind::Toeplitz, 3, 1},
    {DeterminantKind::Toeplitz, 3, 2},
    {DeterminantKind::Toeplitz, 3, 3},
    {DeterminantKind::Hankel, 2, 2},
    {DeterminantKind::Hankel, 2, 3},
}};

bool has_closed_form(const DeterminantId& id) noexcept;

// Symmetric Toeplitz determinant: det[a_{n+|i-j|}]_{i,j=1..q}.
cplx toeplitz_det(const CoefficientWindow& w, int q, int n);

// Hankel determinant: det[a_{n+i+j-2}]_{i,j=1..q}.
cplx hankel_det(const CoefficientWindow& w, int q, int n);

// Dispatches on id.kind.
cplx determinant(const CoefficientWindow& w, const DeterminantId& id);

// Explicit polynomial in a_2..a_5, e.g. T_{3,2} = (a_2-a_4)(a_2^2 - 2a_3^2 + a_2 a_4).
// Throws UnsupportedId outside kClosedFormIds and WindowTooShort when needed.
cplx closed_form(const CoefficientWindow& w, const DeterminantId& id);

// Determinant of a dense square complex matrix stored row-major.
// Cofactor expansion up to 3x3, partial-pivot LU above.
cplx dense_determinant(std::span<const cplx> matrix, std::size_t dim);

} // namespace coefflab
