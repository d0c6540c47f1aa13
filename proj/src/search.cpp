#include "coefflab/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "coefflab/error.hpp"

namespace coefflab {

namespace {

constexpr int kMaxSampleAttempts = 1'000'000;

using Coords = std::array<double, 8>;

Coords to_coords(const UParamPoint& pt)
{
    const auto& s = pt.schwarz;
    return {pt.a2.real(), pt.a2.imag(), s.c1.real(), s.c1.imag(),
            s.c2.real(), s.c2.imag(), s.c3.real(), s.c3.imag()};
}

UParamPoint from_coords(const Coords& x)
{
    return UParamPoint{{x[0], x[1]}, {{x[2], x[3]}, {x[4], x[5]}, {x[6], x[7]}}};
}

bool within(cplx v, double bound) { return std::abs(v) <= bound + kFeasibilityTolerance; }

bool inside_all(cplx p, std::span<const Disc> discs, double tolerance)
{
    return std::all_of(discs.begin(), discs.end(),
                       [&](const Disc& d) { return std::abs(p - d.center) <= d.radius + tolerance; });
}

cplx toward(cplx p, const Disc& d)
{
    const cplx offset = p - d.center;
    const double r = std::abs(offset);
    if (r <= d.radius) return p;
    // Rounding can leave the projection an ulp outside; step inward until it is not.
    double scale = d.radius / r;
    cplx q = d.center + offset * scale;
    while (std::abs(q - d.center) > d.radius && scale > 0.0) {
        scale = std::nextafter(scale, 0.0);
        q = d.center + offset * scale;
    }
    return q;
}

// Constraint |alpha * c + beta| <= bound as a disc in c. If alpha == 0 the
// constraint does not involve c; it is then returned through `holds`.
std::optional<Disc> linear_disc(cplx alpha, cplx beta, double bound, bool& holds)
{
    if (alpha == cplx{0.0, 0.0}) {
        holds = holds && within(beta, bound);
        return std::nullopt;
    }
    return Disc{-beta / alpha, bound / std::abs(alpha)};
}

} // namespace

std::optional<cplx> nearest_in_discs(cplx p, std::span<const Disc> discs)
{
    // Interior and single-circle candidates must satisfy the other discs exactly;
    // circle-circle vertices get the tolerance, since near-tangent lenses collapse
    // to them and rounding moves them off both circles.
    if (inside_all(p, discs, 0.0)) return p;

    std::optional<cplx> best;
    double best_dist = 0.0;
    auto consider = [&](cplx q, double tolerance) {
        if (!inside_all(q, discs, tolerance)) return;
        const double d = std::abs(q - p);
        if (!best || d < best_dist) {
            best = q;
            best_dist = d;
        }
    };
    for (std::size_t i = 0; i < discs.size(); ++i) {
        consider(toward(p, discs[i]), 0.0);
        for (std::size_t j = i + 1; j < discs.size(); ++j) {
            const Disc& u = discs[i];
            const Disc& v = discs[j];
            const cplx axis = v.center - u.center;
            const double d = std::abs(axis);
            // Tangency within tolerance still counts as touching.
            if (d == 0.0 || d > u.radius + v.radius + kFeasibilityTolerance ||
                d < std::abs(u.radius - v.radius) - kFeasibilityTolerance) {
                continue;
            }
            const double along = (u.radius * u.radius - v.radius * v.radius + d * d) / (2.0 * d);
            const double across = std::sqrt(std::max(0.0, u.radius * u.radius - along * along));
            const cplx dir = axis / d;
            const cplx foot = u.center + along * dir;
            consider(foot + across * cplx{0.0, 1.0} * dir, kFeasibilityTolerance);
            consider(foot - across * cplx{0.0, 1.0} * dir, kFeasibilityTolerance);
        }
    }
    return best;
}

std::optional<UParamPoint> repair_point(const Objective& obj, const UParamPoint& pt, const Ledger& ledger)
{
    UParamPoint out;
    if (obj.a2_mode == A2Mode::Free) {
        const double r = std::abs(pt.a2);
        out.a2 = r > kA2Radius ? pt.a2 * (kA2Radius / r) : pt.a2;
    }
    if (obj.region == SearchRegion::Schwarz) {
        out.schwarz = project_feasible(pt.schwarz);
        return out;
    }

    using C = ConstantId;
    const bool zero = obj.a2_mode == A2Mode::Zero;
    const double a3max = ledger[zero ? C::U0_a3max : C::U_a3max];
    const double a4max = ledger[zero ? C::U0_a4max : C::U_a4max];
    const double a5max = ledger[zero ? C::U0_a5max : C::U_a5max];
    const double h23max = ledger[zero ? C::U_H23_a2zero : C::U_H23];
    const double h22max = ledger[C::U_H22];

    const cplx a2 = out.a2;
    const cplx a2sq = a2 * a2;
    bool holds = true;
    std::vector<Disc> discs;

    // c1: |c1| <= 1, |a2^2 + c1| <= a3max.
    discs = {{0.0, 1.0}, {-a2sq, a3max}};
    const auto c1 = nearest_in_discs(pt.schwarz.c1, discs);
    if (!c1) return std::nullopt;
    out.schwarz.c1 = *c1;
    const cplx a3 = a2sq + *c1;
    const double r1 = std::abs(*c1);

    // c2: Schwarz bound, |a4| <= a4max, |a2 a4 - a3^2| <= h22max.
    const cplx k4 = 2.0 * a2 * *c1 + a2sq * a2;
    discs = {{0.0, std::max(0.0, 0.5 * (1.0 - r1 * r1))}, {-k4, a4max}};
    if (!zero) {
        if (auto d = linear_disc(a2, a2 * k4 - a3 * a3, h22max, holds)) discs.push_back(*d);
    }
    const auto c2 = nearest_in_discs(pt.schwarz.c2, discs);
    if (!c2 || !holds) return std::nullopt;
    out.schwarz.c2 = *c2;
    const cplx a4 = *c2 + k4;
    const double r2 = std::abs(*c2);

    // c3: Schwarz bound, |a5| <= a5max, |a3 a5 - a4^2| <= h23max.
    const cplx k5 = 2.0 * a2 * *c2 + *c1 * *c1 + 3.0 * a2sq * *c1 + a2sq * a2sq;
    discs = {{0.0, std::max(0.0, (1.0 - r1 * r1 - 4.0 * r2 * r2 / (1.0 + r1)) / 3.0)}, {-k5, a5max}};
    if (auto d = linear_disc(a3, a3 * k5 - a4 * a4, h23max, holds)) discs.push_back(*d);
    const auto c3 = nearest_in_discs(pt.schwarz.c3, discs);
    if (!c3 || !holds) return std::nullopt;
    out.schwarz.c3 = *c3;
    return out;
}

cplx uniform_disc(std::mt19937_64& stream, double radius)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(stream));
    const double theta = 2.0 * std::numbers::pi * unit(stream);
    return std::polar(r, theta);
}

void validate(const Objective& obj)
{
    if (!has_closed_form(obj.det)) {
        throw UnsupportedId("search objective " + to_string(obj.det) + " has no closed form");
    }
}

double objective_value(const Objective& obj, const UParamPoint& pt)
{
    const auto a = u_coefficients_closed(pt);
    return std::abs(closed_form(CoefficientWindow(std::vector<cplx>(a.begin(), a.end())), obj.det));
}

bool region_admits(const Objective& obj, const UParamPoint& pt, const Ledger& ledger)
{
    if (!point_feasible(pt)) return false;
    if (obj.a2_mode == A2Mode::Zero && pt.a2 != cplx{0.0, 0.0}) return false;
    if (obj.region == SearchRegion::Schwarz) return true;

    using C = ConstantId;
    const auto a = u_coefficients_closed(pt);
    const cplx h22 = a[1] * a[3] - a[2] * a[2];
    const cplx h23 = a[2] * a[4] - a[3] * a[3];
    if (obj.a2_mode == A2Mode::Zero) {
        return within(a[2], ledger[C::U0_a3max]) && within(a[3], ledger[C::U0_a4max]) &&
               within(a[4], ledger[C::U0_a5max]) && within(h23, ledger[C::U_H23_a2zero]);
    }
    return within(a[1], ledger[C::U_a2max]) && within(a[2], ledger[C::U_a3max]) &&
           within(a[3], ledger[C::U_a4max]) && within(a[4], ledger[C::U_a5max]) &&
           within(h22, ledger[C::U_H22]) && within(h23, ledger[C::U_H23]);
}

void validate(const SearchConfig& cfg)
{
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (cfg.refine_budget < 0) throw std::invalid_argument("refine budget must be >= 0");
    if (!(cfg.step_min > 0.0 && cfg.step_min < cfg.step_init)) {
        throw std::invalid_argument("need 0 < step_min < step_init");
    }
    const auto total = static_cast<std::uint64_t>(cfg.restarts) * static_cast<std::uint64_t>(cfg.refine_budget);
    if (total > cfg.eval_cap) {
        throw BudgetExceeded("restarts * refine_budget = " + std::to_string(total) + " exceeds the cap of " +
                             std::to_string(cfg.eval_cap) + " evaluations");
    }
}

std::mt19937_64 restart_stream(std::uint64_t seed, int restart_index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart_index), 0x436f6566u};
    return std::mt19937_64(seq);
}

UParamPoint sample_point(std::mt19937_64& stream, const Objective& obj)
{
    for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
        UParamPoint pt;
        if (obj.a2_mode == A2Mode::Free) pt.a2 = uniform_disc(stream, kA2Radius);
        auto& s = pt.schwarz;
        s.c1 = uniform_disc(stream, 1.0);
        const double r1 = std::abs(s.c1);
        s.c2 = uniform_disc(stream, std::max(0.0, 0.5 * (1.0 - r1 * r1)));
        const double r2 = std::abs(s.c2);
        s.c3 = uniform_disc(stream, std::max(0.0, (1.0 - r1 * r1 - 4.0 * r2 * r2 / (1.0 + r1)) / 3.0));
        if (region_admits(obj, pt)) return pt;
    }
    throw Error("sample_point: no admissible point after " + std::to_string(kMaxSampleAttempts) + " draws");
}

RefineResult refine(const Objective& obj, const UParamPoint& start, std::int64_t budget, double step_init,
                    double step_min, const EvaluationObserver& observer)
{
    validate(obj);
    if (!region_admits(obj, start)) {
        throw InfeasibleStart("refine: start point lies outside the search region");
    }
    auto evaluate = [&](const UParamPoint& pt) {
        if (observer) observer(pt);
        return objective_value(obj, pt);
    };

    RefineResult best{start, evaluate(start), 1};
    Coords current = to_coords(start);
    const std::size_t first = obj.a2_mode == A2Mode::Zero ? 2 : 0;
    std::int64_t proposals = 0;
    double step = step_init;

    while (step >= step_min && proposals < budget) {
        bool improved = false;
        for (std::size_t d = first; d < current.size() && proposals < budget; ++d) {
            for (const double sign : {1.0, -1.0}) {
                if (proposals >= budget) break;
                ++proposals;
                Coords trial = current;
                trial[d] += sign * step;
                const auto candidate = repair_point(obj, from_coords(trial));
                if (!candidate || !region_admits(obj, *candidate)) continue;
                const double value = evaluate(*candidate);
                ++best.evaluations;
                if (value > best.value) {
                    best.value = value;
                    best.point = *candidate;
                    current = to_coords(*candidate);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

SearchResult campaign(const Objective& obj, const SearchConfig& cfg)
{
    validate(obj);
    validate(cfg);

    std::vector<RefineResult> runs(static_cast<std::size_t>(cfg.restarts));
    auto work = [&](unsigned lane, unsigned lanes) {
        for (int r = static_cast<int>(lane); r < cfg.restarts; r += static_cast<int>(lanes)) {
            auto stream = restart_stream(cfg.seed, r);
            const UParamPoint start = sample_point(stream, obj);
            runs[static_cast<std::size_t>(r)] = refine(obj, start, cfg.refine_budget, cfg.step_init, cfg.step_min);
        }
    };

    const unsigned lanes = std::clamp<unsigned>(cfg.threads, 1u, static_cast<unsigned>(cfg.restarts));
    if (lanes == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(lanes);
        for (unsigned lane = 0; lane < lanes; ++lane) pool.emplace_back(work, lane, lanes);
    }

    SearchResult result;
    result.best_value = -1.0;
    for (int r = 0; r < cfg.restarts; ++r) {
        const auto& run = runs[static_cast<std::size_t>(r)];
        result.per_restart.push_back({r, run.value});
        result.evaluations_used += run.evaluations;
        if (run.value > result.best_value) {
            result.best_value = run.value;
            result.best_point = run.point;
            result.best_restart = r;
        }
    }
    result.best_window = u_coefficients(result.best_point, 5);
    return result;
}

ObjectiveContext objective_context(const Objective& obj, const Ledger& ledger)
{
    ObjectiveContext ctx;
    const bool zero = obj.a2_mode == A2Mode::Zero;
    if (obj.det.kind == DeterminantKind::Toeplitz) {
        static const std::array<DeterminantId, 5> order{{{DeterminantKind::Toeplitz, 2, 2},
                                                         {DeterminantKind::Toeplitz, 2, 3},
                                                         {DeterminantKind::Toeplitz, 3, 1},
                                                         {DeterminantKind::Toeplitz, 3, 2},
                                                         {DeterminantKind::Toeplitz, 3, 3}}};
        static const std::array<const char*, 5> suffix{"i", "ii", "iii", "iv", "v"};
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (order[k] == obj.det) {
                const std::string id = std::string(zero ? "thm2_" : "thm1_") + suffix[k];
                ctx.bound_source = id;
                ctx.bound_value = theorem_chain(id, ledger).computed_value;
            }
        }
    } else {
        const ConstantId id = obj.det.n == 2 ? ConstantId::U_H22
                              : zero         ? ConstantId::U_H23_a2zero
                                             : ConstantId::U_H23;
        ctx.bound_source = ledger.entry(id).id;
        ctx.bound_value = ledger[id];
    }

    for (const auto& name : catalog_names()) {
        const CatalogEntry& e = catalog(name);
        if (!e.expected_member || !e.param) continue;
        if (zero && e.param->a2 != cplx{0.0, 0.0}) continue;
        const double v = std::abs(closed_form(e.window, obj.det));
        if (!ctx.witness_value || v > *ctx.witness_value) {
            ctx.witness_name = name;
            ctx.witness_value = v;
        }
    }
    return ctx;
}

} // namespace coefflab
