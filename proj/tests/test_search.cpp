#include <catch2/catch.hpp>

#include <random>

#include "coefflab/bounds.hpp"
#include "coefflab/error.hpp"
#include "coefflab/search.hpp"
#include "oracles.hpp"

using namespace coefflab;
using namespace std::complex_literals;

namespace {

using K = DeterminantKind;

Objective objective(DeterminantId id, A2Mode mode = A2Mode::Free, SearchRegion region = SearchRegion::Ledger)
{
    return {id, mode, region};
}

const DeterminantId kT22{K::Toeplitz, 2, 2};
const DeterminantId kT23{K::Toeplitz, 2, 3};
const DeterminantId kT31{K::Toeplitz, 3, 1};
const DeterminantId kT32{K::Toeplitz, 3, 2};
const DeterminantId kT33{K::Toeplitz, 3, 3};

SearchConfig config(std::uint64_t seed, int restarts, unsigned threads = 1)
{
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.threads = threads;
    return cfg;
}

bool same_point(const UParamPoint& a, const UParamPoint& b)
{
    return a.a2 == b.a2 && a.schwarz.c1 == b.schwarz.c1 && a.schwarz.c2 == b.schwarz.c2 &&
           a.schwarz.c3 == b.schwarz.c3;
}

double point_distance(const UParamPoint& a, const UParamPoint& b)
{
    return std::max({std::abs(a.a2 - b.a2), std::abs(a.schwarz.c1 - b.schwarz.c1),
                     std::abs(a.schwarz.c2 - b.schwarz.c2), std::abs(a.schwarz.c3 - b.schwarz.c3)});
}

} // namespace

TEST_CASE("objectives need a closed form", "[search]")
{
    CHECK_NOTHROW(validate(objective(kT33)));
    CHECK_NOTHROW(validate(objective({K::Hankel, 2, 3})));
    CHECK_THROWS_AS(validate(objective({K::Toeplitz, 4, 1})), UnsupportedId);
}

TEST_CASE("search configs are validated", "[search]")
{
    CHECK_NOTHROW(validate(SearchConfig{}));
    SearchConfig c;
    c.step_min = c.step_init;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = {};
    c.restarts = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = {};
    c.refine_budget = -1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = {};
    c.restarts = 1000;
    c.refine_budget = 20'000;
    CHECK_THROWS_AS(validate(c), BudgetExceeded);
    c.eval_cap = 20'000'000;
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("sample_point is deterministic per stream", "[search]")
{
    const Objective obj = objective(kT22);
    auto s1 = restart_stream(42, 3), s2 = restart_stream(42, 3), s3 = restart_stream(42, 4);
    const UParamPoint a = sample_point(s1, obj), b = sample_point(s2, obj), c = sample_point(s3, obj);
    CHECK(same_point(a, b));
    CHECK_FALSE(same_point(a, c));
    auto s4 = restart_stream(43, 3);
    CHECK_FALSE(same_point(a, sample_point(s4, obj)));
}

TEST_CASE("sample_point in zero mode pins a2 to zero", "[search]")
{
    auto s = restart_stream(1, 0);
    for (int k = 0; k < 1000; ++k) REQUIRE(sample_point(s, objective(kT32, A2Mode::Zero)).a2 == cplx(0.0));
}

TEST_CASE("sample_point draws are always feasible", "[search][property]")
{
    for (const auto region : {SearchRegion::Ledger, SearchRegion::Schwarz}) {
        for (const auto mode : {A2Mode::Free, A2Mode::Zero}) {
            const Objective obj = objective(kT22, mode, region);
            std::mt19937_64 g(305);
            int feasible = 0;
            for (int k = 0; k < 10000; ++k) {
                const UParamPoint pt = sample_point(g, obj);
                feasible += schwarz_feasible(pt.schwarz).feasible && std::abs(pt.a2) <= 2.0 + 1e-12 &&
                            region_admits(obj, pt);
            }
            CHECK(feasible == 10000);
        }
    }
}

TEST_CASE("uniform_disc covers the disc evenly", "[search]")
{
    std::mt19937_64 g(306);
    int inner = 0;
    for (int k = 0; k < 20000; ++k) {
        const cplx z = uniform_disc(g, 2.0);
        REQUIRE(std::abs(z) <= 2.0);
        inner += std::abs(z) <= 1.0;
    }
    // Area fraction of the inner half-radius disc is 1/4.
    CHECK(inner / 20000.0 == Approx(0.25).margin(0.015));
}

TEST_CASE("nearest_in_discs matches a brute-force grid", "[search][oracle]")
{
    std::mt19937_64 g(307);
    std::uniform_real_distribution<double> r(0.2, 1.5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Disc> discs;
        const int count = 1 + trial % 3;
        for (int k = 0; k < count; ++k) discs.push_back({oracle::random_disc(g, 1.0), r(g)});
        const cplx p = oracle::random_disc(g, 3.0);
        const auto got = nearest_in_discs(p, discs);

        // Admissible grid points.
        std::vector<cplx> admissible;
        const int n = 300;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const cplx z{-3.0 + 6.0 * i / n, -3.0 + 6.0 * j / n};
                bool inside = true;
                for (const auto& d : discs) inside = inside && std::abs(z - d.center) <= d.radius;
                if (inside) admissible.push_back(z);
            }
        INFO("trial " << trial);
        if (!got) {
            CHECK(admissible.empty());
            continue;
        }
        for (const auto& d : discs) CHECK(std::abs(*got - d.center) <= d.radius + 1e-9);
        // Projection onto a convex set: Re((p - q) conj(z - q)) <= 0 for every admissible z.
        double worst = -INFINITY;
        for (const cplx z : admissible) {
            CHECK(std::abs(*got - p) <= std::abs(z - p) + 1e-9);
            worst = std::max(worst, std::real((p - *got) * std::conj(z - *got)));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("repair_point lands inside the region", "[search][property]")
{
    std::mt19937_64 g(308);
    for (const auto mode : {A2Mode::Free, A2Mode::Zero}) {
        for (const auto region : {SearchRegion::Ledger, SearchRegion::Schwarz}) {
            const Objective obj = objective(kT32, mode, region);
            int empty = 0;
            for (int k = 0; k < 2000; ++k) {
                UParamPoint raw{oracle::random_disc(g, 3.0),
                                {oracle::random_disc(g, 1.5), oracle::random_disc(g, 1.0), oracle::random_disc(g, 1.0)}};
                if (mode == A2Mode::Zero) raw.a2 = 0.0;
                const auto fixed = repair_point(obj, raw);
                if (!fixed) {
                    ++empty;
                    continue;
                }
                REQUIRE(region_admits(obj, *fixed));
                const auto again = repair_point(obj, *fixed);
                REQUIRE(again);
                REQUIRE(point_distance(*again, *fixed) <= 1e-12);
            }
            // Coefficients are fixed one at a time, so in the free ledger region an
            // early choice can leave no room for a later one; elsewhere 0 is always shared.
            if (mode == A2Mode::Zero || region == SearchRegion::Schwarz) CHECK(empty == 0);
        }
    }
}

TEST_CASE("repair_point leaves sampled points in place", "[search][property]")
{
    for (const auto mode : {A2Mode::Free, A2Mode::Zero}) {
        const Objective obj = objective(kT33, mode);
        std::mt19937_64 g(309);
        for (int k = 0; k < 5000; ++k) {
            const UParamPoint pt = sample_point(g, obj);
            const auto fixed = repair_point(obj, pt);
            REQUIRE(fixed);
            REQUIRE(point_distance(*fixed, pt) <= 1e-12);
        }
    }
}

TEST_CASE("refine examples", "[search]")
{
    const Objective t22 = objective(kT22);
    const UParamPoint f1{2i, {1.0, 0.0, 0.0}};

    SECTION("zero budget returns the start")
    {
        const RefineResult r = refine(t22, f1, 0, 0.25, 1e-7);
        CHECK(same_point(r.point, f1));
        CHECK(r.value == objective_value(t22, f1));
        CHECK(r.evaluations == 1);
    }
    SECTION("the f1 parameters are a maximum of T2,2")
    {
        const RefineResult r = refine(t22, f1, 20'000, 0.25, 1e-7);
        CHECK(r.value == Approx(13.0).margin(1e-9));
        CHECK(point_distance(r.point, f1) <= 1e-6);
    }
    SECTION("acceptance is monotone")
    {
        const UParamPoint start{1.9i, {0.9, 0.0, 0.0}};
        REQUIRE(region_admits(t22, start));
        const RefineResult r = refine(t22, start, 20'000, 0.25, 1e-7);
        CHECK(r.value >= objective_value(t22, start));
    }
    SECTION("infeasible starts are rejected")
    {
        CHECK_THROWS_AS(refine(t22, {2.5, {}}, 100, 0.25, 1e-7), InfeasibleStart);
        CHECK_THROWS_AS(refine(objective(kT22, A2Mode::Zero), f1, 100, 0.25, 1e-7), InfeasibleStart);
        CHECK_THROWS_AS(refine(t22, {0.0, {0.5, 0.5, 0.0}}, 100, 0.25, 1e-7), InfeasibleStart);
    }
}

TEST_CASE("every point refine evaluates is feasible", "[search][property]")
{
    for (const auto& id : kClosedFormIds) {
        for (const auto mode : {A2Mode::Free, A2Mode::Zero}) {
            for (const auto region : {SearchRegion::Ledger, SearchRegion::Schwarz}) {
                const Objective obj = objective(id, mode, region);
                std::int64_t seen = 0;
                bool all_ok = true;
                const EvaluationObserver watch = [&](const UParamPoint& pt) {
                    ++seen;
                    all_ok = all_ok && schwarz_feasible(pt.schwarz).feasible && std::abs(pt.a2) <= 2.0 + 1e-12 &&
                             region_admits(obj, pt) && (mode == A2Mode::Free || pt.a2 == cplx(0.0));
                };
                for (int restart = 0; restart < 3; ++restart) {
                    auto s = restart_stream(99, restart);
                    const RefineResult r = refine(obj, sample_point(s, obj), 5000, 0.25, 1e-7, watch);
                    CHECK(r.evaluations <= 5001);
                }
                INFO(to_string(id) << (mode == A2Mode::Zero ? " zero" : " free"));
                CHECK(seen > 0);
                CHECK(all_ok);
            }
        }
    }
}

TEST_CASE("refine never lowers the value along its path", "[search][property]")
{
    const Objective obj = objective(kT32);
    auto s = restart_stream(5, 0);
    const UParamPoint start = sample_point(s, obj);
    const double v0 = objective_value(obj, start);
    const RefineResult r = refine(obj, start, 20'000, 0.25, 1e-7);
    CHECK(r.value >= v0);
    CHECK(r.value == objective_value(obj, r.point));
}

TEST_CASE("campaign results are independent of thread count", "[search][determinism]")
{
    const Objective obj = objective(kT31);
    const SearchResult one = campaign(obj, config(44, 24, 1));
    const SearchResult four = campaign(obj, config(44, 24, 4));
    const SearchResult again = campaign(obj, config(44, 24, 1));
    for (const SearchResult* r : {&four, &again}) {
        CHECK(r->best_value == one.best_value);
        CHECK(r->best_restart == one.best_restart);
        CHECK(same_point(r->best_point, one.best_point));
        CHECK(r->evaluations_used == one.evaluations_used);
        REQUIRE(r->per_restart.size() == one.per_restart.size());
        for (std::size_t k = 0; k < one.per_restart.size(); ++k) {
            CHECK(r->per_restart[k].restart_index == one.per_restart[k].restart_index);
            CHECK(r->per_restart[k].value == one.per_restart[k].value);
        }
    }
}

TEST_CASE("campaign summary invariants", "[search]")
{
    const Objective obj = objective(kT23);
    const SearchResult r = campaign(obj, config(43, 16));
    double best = -1.0;
    int best_index = -1;
    for (const auto& rec : r.per_restart)
        if (rec.value > best) {
            best = rec.value;
            best_index = rec.restart_index;
        }
    CHECK(r.best_value == best);
    CHECK(r.best_restart == best_index);
    CHECK(std::abs(r.best_value - std::abs(closed_form(u_coefficients(r.best_point), obj.det))) <= 1e-12);
    CHECK(r.best_window.values() == u_coefficients(r.best_point).values());
    CHECK(r.evaluations_used > 0);
}

TEST_CASE("degenerate budget evaluates only the sampled point", "[search]")
{
    const Objective obj = objective(kT23);
    SearchConfig cfg = config(1, 1);
    cfg.refine_budget = 0;
    const SearchResult r = campaign(obj, cfg);
    auto s = restart_stream(1, 0);
    const UParamPoint pt = sample_point(s, obj);
    CHECK(same_point(r.best_point, pt));
    CHECK(r.best_value == objective_value(obj, pt));
    CHECK(r.evaluations_used == 1);
}

TEST_CASE("campaigns reach the witnesses and stay under the chains", "[search][campaign]")
{
    struct Plan {
        DeterminantId id;
        A2Mode mode;
        std::uint64_t seed;
        double low;
        double high;
    };
    const std::vector<Plan> plans{
        {kT22, A2Mode::Free, 42, 12.99, 13.0},  {kT23, A2Mode::Free, 43, 24.99, 25.0},
        {kT31, A2Mode::Free, 44, 23.9, 24.0},   {kT32, A2Mode::Free, 45, 83.5, 84.0},
        {kT32, A2Mode::Zero, 7, 0.2499, 0.2501},
    };
    for (const auto& p : plans) {
        const Objective obj = objective(p.id, p.mode);
        const SearchResult r = campaign(obj, config(p.seed, 200));
        const ObjectiveContext ctx = objective_context(obj);
        INFO(to_string(p.id) << " seed " << p.seed);
        CHECK(r.best_value >= p.low);
        CHECK(r.best_value <= p.high + 1e-6);
        REQUIRE(ctx.bound_value);
        CHECK(r.best_value <= *ctx.bound_value + 1e-6);
        if (p.mode == A2Mode::Free) {
            REQUIRE(ctx.witness_value);
            CHECK(*ctx.witness_name == "f1");
            CHECK(r.best_value >= *ctx.witness_value - 1e-9);
        }
    }
}

TEST_CASE("every objective stays under its chain on the ledger region", "[search][campaign]")
{
    for (const auto& id : kClosedFormIds) {
        for (const auto mode : {A2Mode::Free, A2Mode::Zero}) {
            const Objective obj = objective(id, mode);
            const ObjectiveContext ctx = objective_context(obj);
            if (!ctx.bound_value) continue;
            const SearchResult r = campaign(obj, config(11, 40));
            INFO(to_string(id) << (mode == A2Mode::Zero ? " zero" : " free") << " bound " << *ctx.bound_source);
            CHECK(r.best_value <= *ctx.bound_value + 1e-6);
            if (ctx.witness_value) CHECK(*ctx.witness_value <= *ctx.bound_value + 1e-9);
        }
    }
}

TEST_CASE("the bare Schwarz region is not bounded by the chains", "[search][campaign]")
{
    // Diagnostic: without the coefficient bounds the chains rely on, T2,2 reaches
    // |a2^2 - a3^2| = |4 - 25| = 21 at a2 = 2, c1 = 1 already.
    const Objective obj = objective(kT22, A2Mode::Free, SearchRegion::Schwarz);
    const UParamPoint corner{2.0, {1.0, 0.0, 0.0}};
    CHECK(region_admits(obj, corner));
    CHECK_FALSE(region_admits(objective(kT22), corner));
    CHECK(objective_value(obj, corner) == Approx(21.0));
    const SearchResult r = campaign(obj, config(42, 20));
    CHECK(r.best_value > theorem_chain("thm1_i").computed_value);
}
