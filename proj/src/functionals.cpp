#include "coefflab/functionals.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "coefflab/error.hpp"

namespace coefflab {

CoefficientWindow::CoefficientWindow(std::vector<cplx> a) : a_(std::move(a))
{
    if (a_.empty()) {
        throw InvalidWindow("coefficient window must contain at least a_1");
    }
    if (a_.front() != cplx{1.0, 0.0}) {
        throw InvalidWindow("coefficient window must start with a_1 = 1");
    }
}

CoefficientWindow::CoefficientWindow(std::initializer_list<cplx> a)
    : CoefficientWindow(std::vector<cplx>(a))
{
}

CoefficientWindow CoefficientWindow::from_tail(std::span<const cplx> a2_onwards)
{
    std::vector<cplx> a;
    a.reserve(a2_onwards.size() + 1);
    a.emplace_back(1.0, 0.0);
    a.insert(a.end(), a2_onwards.begin(), a2_onwards.end());
    return CoefficientWindow(std::move(a));
}

const cplx& CoefficientWindow::a(std::size_t k) const
{
    if (k == 0 || k > a_.size()) {
        throw WindowTooShort("coefficient a_" + std::to_string(k) + " requested from a window of length " +
                             std::to_string(a_.size()));
    }
    return a_[k - 1];
}

std::size_t DeterminantId::required_length() const
{
    if (q < 1 || n < 1) {
        throw std::invalid_argument("determinant id needs q >= 1 and n >= 1");
    }
    if (kind == DeterminantKind::Toeplitz) {
        return static_cast<std::size_t>(n + q - 1);
    }
    return static_cast<std::size_t>(n + 2 * (q - 1));
}

namespace {

int parse_positive(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) {
        throw std::invalid_argument("expected a positive integer, got '" + std::string(s) + "'");
    }
    return v;
}

void require_length(const CoefficientWindow& w, const DeterminantId& id)
{
    const std::size_t need = id.required_length();
    if (w.size() < need) {
        throw WindowTooShort(to_string(id) + " needs a_1..a_" + std::to_string(need) + ", window has " +
                             std::to_string(w.size()));
    }
}

} // namespace

DeterminantId parse_determinant_id(std::string_view text)
{
    if (text.size() < 4) {
        throw std::invalid_argument("determinant id must look like T3,2 or H2,2");
    }
    DeterminantId id;
    switch (text.front()) {
    case 'T': case 't': id.kind = DeterminantKind::Toeplitz; break;
    case 'H': case 'h': id.kind = DeterminantKind::Hankel; break;
    default:
        throw std::invalid_argument("determinant id must start with T or H: '" + std::string(text) + "'");
    }
    const auto body = text.substr(1);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("determinant id missing ',': '" + std::string(text) + "'");
    }
    id.q = parse_positive(body.substr(0, comma));
    id.n = parse_positive(body.substr(comma + 1));
    return id;
}

std::string to_string(const DeterminantId& id)
{
    return std::string(id.kind == DeterminantKind::Toeplitz ? "T" : "H") + std::to_string(id.q) + "," +
           std::to_string(id.n);
}

bool has_closed_form(const DeterminantId& id) noexcept
{
    return std::find(kClosedFormIds.begin(), kClosedFormIds.end(), id) != kClosedFormIds.end();
}

cplx dense_determinant(std::span<const cplx> m, std::size_t dim)
{
    if (m.size() != dim * dim) {
        throw std::invalid_argument("dense_determinant: matrix size does not match dimension");
    }
    auto at = [&](std::size_t i, std::size_t j) { return m[i * dim + j]; };
    switch (dim) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return at(0, 0);
    case 2:
        return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    case 3:
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    default:
        break;
    }

    std::vector<cplx> lu(m.begin(), m.end());
    cplx det{1.0, 0.0};
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu[k * dim + k]);
        for (std::size_t i = k + 1; i < dim; ++i) {
            const double v = std::abs(lu[i * dim + k]);
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) {
            return {0.0, 0.0};
        }
        if (pivot != k) {
            std::swap_ranges(lu.begin() + static_cast<std::ptrdiff_t>(k * dim),
                             lu.begin() + static_cast<std::ptrdiff_t>((k + 1) * dim),
                             lu.begin() + static_cast<std::ptrdiff_t>(pivot * dim));
            det = -det;
        }
        const cplx diag = lu[k * dim + k];
        det *= diag;
        for (std::size_t i = k + 1; i < dim; ++i) {
            const cplx factor = lu[i * dim + k] / diag;
            for (std::size_t j = k + 1; j < dim; ++j) {
                lu[i * dim + j] -= factor * lu[k * dim + j];
            }
        }
    }
    return det;
}

cplx toeplitz_det(const CoefficientWindow& w, int q, int n)
{
    const DeterminantId id{DeterminantKind::Toeplitz, q, n};
    require_length(w, id);
    const auto dim = static_cast<std::size_t>(q);
    std::vector<cplx> m(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            m[i * dim + j] = w.a(static_cast<std::size_t>(n) + gap);
        }
    }
    return dense_determinant(m, dim);
}

cplx hankel_det(const CoefficientWindow& w, int q, int n)
{
    const DeterminantId id{DeterminantKind::Hankel, q, n};
    require_length(w, id);
    const auto dim = static_cast<std::size_t>(q);
    std::vector<cplx> m(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m[i * dim + j] = w.a(static_cast<std::size_t>(n) + i + j);
        }
    }
    return dense_determinant(m, dim);
}

cplx determinant(const CoefficientWindow& w, const DeterminantId& id)
{
    return id.kind == DeterminantKind::Toeplitz ? toeplitz_det(w, id.q, id.n) : hankel_det(w, id.q, id.n);
}

cplx closed_form(const CoefficientWindow& w, const DeterminantId& id)
{
    if (!has_closed_form(id)) {
        throw UnsupportedId("no closed form for " + to_string(id));
    }
    require_length(w, id);

    // Only touch coefficients the formula needs, so short windows work for T2,2 etc.
    auto a = [&](std::size_t k) { return w.a(k); };

    if (id.kind == DeterminantKind::Hankel) {
        if (id.n == 2) return a(2) * a(4) - a(3) * a(3);
        return a(3) * a(5) - a(4) * a(4);
    }
    if (id.q == 2) {
        if (id.n == 2) return a(2) * a(2) - a(3) * a(3);
        return a(3) * a(3) - a(4) * a(4);
    }
    switch (id.n) {
    case 1: {
        const cplx a2 = a(2), a3 = a(3);
        return 1.0 - 2.0 * a2 * a2 + 2.0 * a2 * a2 * a3 - a3 * a3;
    }
    case 2: {
        const cplx a2 = a(2), a3 = a(3), a4 = a(4);
        return (a2 - a4) * (a2 * a2 - 2.0 * a3 * a3 + a2 * a4);
    }
    default: {
        const cplx a3 = a(3), a4 = a(4), a5 = a(5);
        return (a3 - a5) * (a3 * a3 - 2.0 * a4 * a4 + a3 * a5);
    }
    }
}

} // namespace coefflab
