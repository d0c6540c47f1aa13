#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coefflab/functionals.hpp"
#include "coefflab/series.hpp"

namespace coefflab {

// Leading Taylor coefficients of the Schwarz-type function
// omega(z) = c1 z + c2 z^2 + c3 z^3 + ... in z/f(z) = 1 - a2 z - z omega(z).
struct SchwarzParams {
    cplx c1{};
    cplx c2{};
    cplx c3{};
};

inline constexpr double kFeasibilityTolerance = 1e-12;
inline constexpr double kA2Radius = 2.0;

struct Feasibility {
    bool feasible = false;
    // bound - value for |c1| <= 1, |c2| <= (1-|c1|^2)/2,
    // |c3| <= (1 - |c1|^2 - 4|c2|^2/(1+|c1|))/3. Negative when violated.
    std::array<double, 3> margins{};
};

Feasibility schwarz_feasible(const SchwarzParams& p);

// Radial repair in dependency order c1, c2, c3; phases are kept.
SchwarzParams project_feasible(const SchwarzParams& p);

struct UParamPoint {
    cplx a2{};
    SchwarzParams schwarz{};
};

// |a2| <= 2 (within tolerance) and the Schwarz constraints hold.
bool point_feasible(const UParamPoint& pt);

// a_1..a_5 from the explicit coefficient map
//   a3 = a2^2 + c1, a4 = c2 + 2 a2 c1 + a2^3,
//   a5 = c3 + 2 a2 c2 + c1^2 + 3 a2^2 c1 + a2^4.
std::array<cplx, 5> u_coefficients_closed(const UParamPoint& pt) noexcept;

// a_1..a_m by inverting z/f = 1 - a2 z - c1 z^2 - c2 z^3 - c3 z^4 as a series
// (truncation order max(kDefaultOrder, m-1)).
CoefficientWindow u_coefficients_series(const UParamPoint& pt, std::size_t m);

// a_1..a_m by both routes; the overlapping coefficients must agree to 1e-10
// or CoefficientMapMismatch is thrown.
CoefficientWindow u_coefficients(const UParamPoint& pt, std::size_t m = 5);

inline constexpr double kCoefficientMapTolerance = 1e-10;

using Evaluator = std::function<cplx(cplx)>;

struct CatalogEntry {
    std::string name;
    std::string formula;
    Evaluator evaluator;
    CoefficientWindow window;
    std::optional<UParamPoint> param;
    // false only for the deliberate non-member example.
    bool expected_member = true;
};

// identity, f1, f2, f3, f4, koebe, and the non-member z+2z3.
const std::vector<std::string>& catalog_names();

// Throws UnknownName.
const CatalogEntry& catalog(std::string_view name);

// omega_1(z) = sqrt(2) z - log(1 + z/sqrt(2)), the antiderivative of
// (1/sqrt2 + t)/(1 + t/sqrt2) vanishing at 0.
cplx f4_omega(cplx z);
// Its derivative, the kernel itself.
cplx f4_omega_prime(cplx z);

struct MembershipResult {
    double max_defect = 0.0;
    cplx argmax{};
};

inline constexpr double kFiniteDifferenceScale = 1e-6;

// max |(z/f)^2 f'(z) - 1| over the polar grid r e^{2 pi i k / samples},
// with f' from central differences of step 1e-6 r.
// Throws EvaluationFailure on non-finite values, std::invalid_argument on a bad grid.
MembershipResult membership_max_defect(const Evaluator& f, std::span<const double> radii,
                                       int samples_per_circle);

} // namespace coefflab
