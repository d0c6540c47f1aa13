#include "coefflab/class_u.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "coefflab/error.hpp"

namespace coefflab {

namespace {

double c2_bound(double abs_c1) { return 0.5 * (1.0 - abs_c1 * abs_c1); }

double c3_bound(double abs_c1, double abs_c2)
{
    return (1.0 - abs_c1 * abs_c1 - 4.0 * abs_c2 * abs_c2 / (1.0 + abs_c1)) / 3.0;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx clamp_radius(cplx z, double radius)
{
    const double r = std::abs(z);
    if (r <= radius) return z;
    if (radius <= 0.0) return {0.0, 0.0};
    // Step inward past rounding so a second clamp is a no-op.
    double scale = radius / r;
    while (std::abs(z * scale) > radius) scale = std::nextafter(scale, 0.0);
    return z * scale;
}

} // namespace

Feasibility schwarz_feasible(const SchwarzParams& p)
{
    const double r1 = std::abs(p.c1);
    const double r2 = std::abs(p.c2);
    const double r3 = std::abs(p.c3);
    Feasibility out;
    out.margins = {1.0 - r1, c2_bound(r1) - r2, c3_bound(r1, r2) - r3};
    out.feasible = std::all_of(out.margins.begin(), out.margins.end(),
                               [](double m) { return m >= -kFeasibilityTolerance; });
    return out;
}

SchwarzParams project_feasible(const SchwarzParams& p)
{
    SchwarzParams out;
    out.c1 = clamp_radius(p.c1, 1.0);
    const double r1 = std::abs(out.c1);
    out.c2 = clamp_radius(p.c2, std::max(0.0, c2_bound(r1)));
    out.c3 = clamp_radius(p.c3, std::max(0.0, c3_bound(r1, std::abs(out.c2))));
    return out;
}

bool point_feasible(const UParamPoint& pt)
{
    return std::abs(pt.a2) <= kA2Radius + kFeasibilityTolerance && schwarz_feasible(pt.schwarz).feasible;
}

std::array<cplx, 5> u_coefficients_closed(const UParamPoint& pt) noexcept
{
    const cplx a2 = pt.a2;
    const auto& [c1, c2, c3] = pt.schwarz;
    const cplx a2sq = a2 * a2;
    return {cplx{1.0, 0.0},
            a2,
            a2sq + c1,
            c2 + 2.0 * a2 * c1 + a2sq * a2,
            c3 + 2.0 * a2 * c2 + c1 * c1 + 3.0 * a2sq * c1 + a2sq * a2sq};
}

CoefficientWindow u_coefficients_series(const UParamPoint& pt, std::size_t m)
{
    if (m == 0) {
        throw std::invalid_argument("u_coefficients_series: m must be >= 1");
    }
    const std::size_t order = std::max(kDefaultOrder, m - 1);
    const TruncatedSeries z_over_f(order, {cplx{1.0, 0.0}, -pt.a2, -pt.schwarz.c1, -pt.schwarz.c2,
                                           -pt.schwarz.c3});
    const TruncatedSeries f_over_z = series_reciprocal(z_over_f);
    return CoefficientWindow(std::vector<cplx>(f_over_z.coeffs().begin(),
                                               f_over_z.coeffs().begin() + static_cast<std::ptrdiff_t>(m)));
}

CoefficientWindow u_coefficients(const UParamPoint& pt, std::size_t m)
{
    CoefficientWindow via_series = u_coefficients_series(pt, m);
    const auto closed = u_coefficients_closed(pt);
    const std::size_t overlap = std::min<std::size_t>(m, closed.size());
    std::vector<cplx> out(via_series.values());
    for (std::size_t k = 0; k < overlap; ++k) {
        const double gap = std::abs(closed[k] - via_series.values()[k]);
        if (!(gap <= kCoefficientMapTolerance)) {
            throw CoefficientMapMismatch("coefficient map routes disagree at a_" + std::to_string(k + 1) +
                                         " by " + std::to_string(gap));
        }
        out[k] = closed[k];
    }
    return CoefficientWindow(std::move(out));
}

cplx f4_omega(cplx z)
{
    constexpr double s2 = std::numbers::sqrt2;
    return s2 * z - std::log(1.0 + z / s2);
}

cplx f4_omega_prime(cplx z)
{
    constexpr double alpha = 1.0 / std::numbers::sqrt2;
    return (alpha + z) / (1.0 + alpha * z);
}

namespace {

CatalogEntry make_entry(std::string name, std::string formula, Evaluator f, std::optional<UParamPoint> param,
                        std::vector<cplx> window = {})
{
    CoefficientWindow w = param ? u_coefficients(*param, 5) : CoefficientWindow(std::move(window));
    return CatalogEntry{std::move(name), std::move(formula), std::move(f), std::move(w), param, true};
}

std::map<std::string, CatalogEntry, std::less<>> build_catalog()
{
    using namespace std::complex_literals;
    constexpr double s2 = std::numbers::sqrt2;

    std::map<std::string, CatalogEntry, std::less<>> cat;
    auto add = [&](CatalogEntry e) { cat.emplace(e.name, std::move(e)); };

    add(make_entry("identity", "z", [](cplx z) { return z; }, UParamPoint{}));
    add(make_entry(
        "f1", "z/(1-iz)^2",
        [](cplx z) {
            const cplx d = 1.0 - 1i * z;
            return z / (d * d);
        },
        UParamPoint{2i, {1.0, 0.0, 0.0}}));
    add(make_entry(
        "f2", "z/(1-z^2)", [](cplx z) { return z / (1.0 - z * z); }, UParamPoint{0.0, {1.0, 0.0, 0.0}}));
    add(make_entry(
        "f3", "z/(1-iz^2)", [](cplx z) { return z / (1.0 - 1i * z * z); }, UParamPoint{0.0, {1i, 0.0, 0.0}}));
    // omega_1 = z/sqrt2 + z^2/4 - z^3/(6 sqrt2) + ...
    add(make_entry(
        "f4", "z/(1 - z*omega1(z)), omega1(z) = sqrt(2) z - log(1 + z/sqrt(2))",
        [](cplx z) { return z / (1.0 - z * f4_omega(z)); },
        UParamPoint{0.0, {1.0 / s2, 0.25, -1.0 / (6.0 * s2)}}));
    add(make_entry(
        "koebe", "z/(1-z)^2",
        [](cplx z) {
            const cplx d = 1.0 - z;
            return z / (d * d);
        },
        UParamPoint{2.0, {-1.0, 0.0, 0.0}}));

    CatalogEntry odd = make_entry(
        "z+2z3", "z+2z^3", [](cplx z) { return z + 2.0 * z * z * z; }, std::nullopt,
        {1.0, 0.0, 2.0, 0.0, 0.0});
    odd.expected_member = false;
    add(std::move(odd));
    return cat;
}

const std::map<std::string, CatalogEntry, std::less<>>& catalog_map()
{
    static const auto cat = build_catalog();
    return cat;
}

} // namespace

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names{"identity", "f1", "f2", "f3", "f4", "koebe", "z+2z3"};
    return names;
}

const CatalogEntry& catalog(std::string_view name)
{
    const auto& cat = catalog_map();
    const auto it = cat.find(name);
    if (it == cat.end()) {
        throw UnknownName("no catalog function named '" + std::string(name) + "'");
    }
    return it->second;
}

MembershipResult membership_max_defect(const Evaluator& f, std::span<const double> radii, int samples_per_circle)
{
    if (radii.empty()) {
        throw std::invalid_argument("membership_max_defect: at least one radius is required");
    }
    if (samples_per_circle < 8) {
        throw std::invalid_argument("membership_max_defect: need at least 8 samples per circle");
    }
    MembershipResult best{-1.0, {}};
    for (const double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw std::invalid_argument("membership_max_defect: radii must lie in (0, 1)");
        }
        const double h = kFiniteDifferenceScale * r;
        for (int k = 0; k < samples_per_circle; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / samples_per_circle;
            const cplx z = std::polar(r, theta);
            const cplx fz = f(z);
            const cplx df = (f(z + h) - f(z - h)) / (2.0 * h);
            const cplx ratio = z / fz;
            const cplx value = ratio * ratio * df - 1.0;
            const double defect = std::abs(value);
            // A pole can make z/f collapse to 0 and hide behind a finite defect.
            if (!finite(fz) || !finite(df) || fz == cplx{0.0, 0.0} || !std::isfinite(defect)) {
                throw EvaluationFailure("non-finite value near z = (" + std::to_string(z.real()) + ", " +
                                        std::to_string(z.imag()) + ")");
            }
            if (defect > best.max_defect) {
                best = {defect, z};
            }
        }
    }
    return best;
}

} // namespace coefflab
