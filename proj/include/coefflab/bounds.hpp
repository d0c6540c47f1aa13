#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coefflab/functionals.hpp"

namespace coefflab {

// Cited numeric inputs the bound chains are built from. Chains refer to these
// enumerators, never to literal values, so removing an entry is a compile error.
enum class ConstantId {
    U_a2max,
    U_a3max,
    U_a4max,
    U_a5max,
    U_c1max,
    U_c2scale,
    U_H22,
    U_H23,
    U_H23_a2zero,
    U0_a3max,
    U0_a4max,
    U0_a5max,
    S_a2max,
    S_a3max,
    S_a4max,
    S_a5max,
    S_H22,
    S_H23,
    S0_a3max,
    S0_a4max,
    S0_a5max,
    S0_H22,
    S0_H23,
    A_T22,
    A_T23,
    A_T31,
};

inline constexpr std::size_t kConstantCount = static_cast<std::size_t>(ConstantId::A_T31) + 1;

struct LedgerConstant {
    std::string id;
    double value = 0.0;
    std::string source;
};

class Ledger {
public:
    // The cited constants as published.
    static const Ledger& standard();

    const LedgerConstant& entry(ConstantId id) const { return entries_[static_cast<std::size_t>(id)]; }
    double operator[](ConstantId id) const { return entry(id).value; }

    // Throws UnknownConstant.
    const LedgerConstant& find(std::string_view id) const;
    ConstantId id_of(std::string_view id) const;

    // Copy with one value replaced (for sensitivity checks).
    Ledger with(ConstantId id, double value) const;

    const std::array<LedgerConstant, kConstantCount>& entries() const noexcept { return entries_; }

private:
    explicit Ledger(std::array<LedgerConstant, kConstantCount> entries) : entries_(std::move(entries)) {}

    std::array<LedgerConstant, kConstantCount> entries_{};
};

// Looks up a constant of the standard ledger, e.g. "U.H23" or "S0.a5max".
const LedgerConstant& constant(std::string_view id);

// Symbolic expression over ledger constants. Integer literals only appear as
// structural coefficients of the underlying identities.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace expr {
ExprPtr c(ConstantId id);
ExprPtr integer(int v);
// The bound variable of max_over.
ExprPtr x();
ExprPtr sum(std::vector<ExprPtr> terms);
ExprPtr product(std::vector<ExprPtr> factors);
ExprPtr difference(ExprPtr lhs, ExprPtr rhs);
ExprPtr square(ExprPtr base);
// Exact maximum over x in [0, upper] of a body that is at most quadratic in x.
ExprPtr max_over(ExprPtr upper, ExprPtr body);
} // namespace expr

double evaluate(const Expr& e, const Ledger& ledger);
// Symbolic form with ledger ids, e.g. "(U.a2max + U.a4max) * (...)".
std::string render(const Expr& e);
// Same shape with the ledger values substituted.
std::string render_values(const Expr& e, const Ledger& ledger);
// Top-level factors of a product, or addends of a sum, or the expression itself.
std::vector<ExprPtr> top_level_steps(const ExprPtr& e);

struct ChainStep {
    std::string expression;
    std::string instantiated;
    double value = 0.0;
};

struct BoundChain {
    std::string theorem_id;
    std::string function_class;   // "U" or "S"
    bool a2_zero = false;
    DeterminantId bounded;        // functional the chain bounds (following the proof)
    std::string stated_label;     // functional named in the theorem statement
    ExprPtr expression;
    std::vector<ChainStep> steps;
    double computed_value = 0.0;
    double paper_stated = 0.0;
    bool stated_truncated = false;
    double tolerance = 0.0;
    bool match = false;
    std::optional<double> proof_line_value;
    std::optional<std::string> reference_id;
    std::optional<double> reference_value;
    std::string note;
};

inline constexpr double kTruncatedTolerance = 5e-4;
inline constexpr double kExactTolerance = 1e-12;

const std::vector<std::string>& theorem_ids();

// Throws UnknownTheorem.
BoundChain theorem_chain(std::string_view theorem_id, const Ledger& ledger = Ledger::standard());

struct ChainMismatch {
    std::string theorem_id;
    double computed = 0.0;
    double stated = 0.0;
    double delta = 0.0;
};

struct VerificationReport {
    std::vector<BoundChain> chains;
    std::vector<std::string> matches;
    std::vector<ChainMismatch> mismatches;
};

// Evaluates every chain (or only `only`, if non-empty). With use_stated the
// stated value replaces the computed one, a self-comparison mode.
VerificationReport verify_against_paper(const Ledger& ledger = Ledger::standard(), bool use_stated = false,
                                        const std::vector<std::string>& only = {});

} // namespace coefflab
