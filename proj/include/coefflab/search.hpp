#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "coefflab/bounds.hpp"
#include "coefflab/class_u.hpp"
#include "coefflab/functionals.hpp"

namespace coefflab {

enum class A2Mode { Free, Zero };

// Parameter region the search walks.
//   Schwarz: |a2| <= 2 and the c1, c2, c3 constraints only.
//   Ledger:  Schwarz plus the class-U necessary conditions the bound chains use
//            (|a_k| and |H2,n| bounds from the ledger), so every chain value is a
//            provable upper bound on the region.
enum class SearchRegion { Ledger, Schwarz };

struct Objective {
    DeterminantId det{DeterminantKind::Toeplitz, 2, 2};
    A2Mode a2_mode = A2Mode::Free;
    SearchRegion region = SearchRegion::Ledger;
};

// Throws UnsupportedId unless obj.det has a closed form.
void validate(const Objective& obj);

// |closed_form(u_coefficients(pt), obj.det)|.
double objective_value(const Objective& obj, const UParamPoint& pt);

// Whether pt is inside the objective's region (Schwarz feasibility, |a2| bound,
// a2 = 0 in zero mode, and the ledger conditions for SearchRegion::Ledger).
bool region_admits(const Objective& obj, const UParamPoint& pt, const Ledger& ledger = Ledger::standard());

inline constexpr std::uint64_t kDefaultEvalCap = 10'000'000;

struct SearchConfig {
    std::uint64_t seed = 42;
    int restarts = 200;
    std::int64_t refine_budget = 20'000;
    double step_init = 0.25;
    double step_min = 1e-7;
    std::uint64_t eval_cap = kDefaultEvalCap;
    unsigned threads = 1;
};

// Throws std::invalid_argument or BudgetExceeded.
void validate(const SearchConfig& cfg);

struct RestartRecord {
    int restart_index = 0;
    double value = 0.0;
};

struct SearchResult {
    double best_value = 0.0;
    UParamPoint best_point;
    CoefficientWindow best_window{1.0};
    int best_restart = 0;
    std::vector<RestartRecord> per_restart;
    std::int64_t evaluations_used = 0;
};

struct Disc {
    cplx center{};
    double radius = 0.0;
};

// Nearest point to p inside the intersection of closed discs, or nullopt when
// the intersection is empty.
std::optional<cplx> nearest_in_discs(cplx p, std::span<const Disc> discs);

// Maps an arbitrary point into the objective's region: radial clamp of a2, then
// c1, c2, c3 in turn moved to the nearest point satisfying every constraint that
// is a disc in that coefficient given the earlier ones. nullopt when some
// intersection is empty.
std::optional<UParamPoint> repair_point(const Objective& obj, const UParamPoint& pt,
                                        const Ledger& ledger = Ledger::standard());

// Uniform draw on the closed disc |z| <= radius.
cplx uniform_disc(std::mt19937_64& stream, double radius);

// Private generator for one restart, a pure function of (seed, restart_index).
std::mt19937_64 restart_stream(std::uint64_t seed, int restart_index);

// a2 uniform on the disc of radius 2 (exactly 0 in zero mode), then c1, c2, c3
// uniform on their nested discs. For the ledger region draws are repeated until
// the region admits the point.
UParamPoint sample_point(std::mt19937_64& stream, const Objective& obj);

struct RefineResult {
    UParamPoint point;
    double value = 0.0;
    std::int64_t evaluations = 0;
};

using EvaluationObserver = std::function<void(const UParamPoint&)>;

// Coordinate pattern search over Re/Im of a2, c1, c2, c3 (a2 fixed in zero
// mode). Proposals go through repair_point, are rejected if still outside the region,
// and accepted only on strict improvement; the step halves after a sweep with
// no acceptance. Stops below step_min or after `budget` proposals.
// Throws InfeasibleStart.
RefineResult refine(const Objective& obj, const UParamPoint& start, std::int64_t budget, double step_init,
                    double step_min, const EvaluationObserver& observer = {});

// Multi-start maximization. Result is independent of cfg.threads.
SearchResult campaign(const Objective& obj, const SearchConfig& cfg);

struct ObjectiveContext {
    std::optional<std::string> bound_source;  // theorem id or ledger id
    std::optional<double> bound_value;
    std::optional<std::string> witness_name;  // best catalog member for this objective
    std::optional<double> witness_value;
};

ObjectiveContext objective_context(const Objective& obj, const Ledger& ledger = Ledger::standard());

} // namespace coefflab
