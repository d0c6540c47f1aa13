#include "coefflab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <variant>

#include "coefflab/error.hpp"

namespace coefflab {

namespace {

LedgerConstant make(std::string id, double value, std::string source)
{
    return LedgerConstant{std::move(id), value, std::move(source)};
}

std::array<LedgerConstant, kConstantCount> standard_entries()
{
    using C = ConstantId;
    std::map<C, LedgerConstant> m;
    m[C::U_a2max] = make("U.a2max", 2.0, "class U coefficient bound |a2| <= 2");
    m[C::U_a3max] = make("U.a3max", 3.0, "class U coefficient bound |a3| <= 3");
    m[C::U_a4max] = make("U.a4max", 4.0, "class U coefficient bound |a4| <= 4");
    m[C::U_a5max] = make("U.a5max", 5.0, "class U coefficient bound |a5| <= 5");
    m[C::U_c1max] = make("U.c1max", 1.0, "Schwarz coefficient bound |c1| <= 1");
    m[C::U_c2scale] = make("U.c2scale", 0.5, "Schwarz coefficient bound |c2| <= (1-|c1|^2)/2");
    m[C::U_H22] = make("U.H22", 1.0, "class U Hankel bound |H2,2| <= 1 (sharp)");
    m[C::U_H23] = make("U.H23", 1.4946575, "class U Hankel bound |H2,3| <= 1.4946575...");
    m[C::U_H23_a2zero] = make("U.H23_a2zero", 1.0, "class U Hankel bound |H2,3| <= 1 when a2 = 0 (sharp)");
    m[C::U0_a3max] = make("U0.a3max", 1.0, "class U, a2 = 0: |a3| = |c1| <= 1");
    m[C::U0_a4max] = make("U0.a4max", 0.5, "class U, a2 = 0: |a4| = |c2| <= 1/2");
    m[C::U0_a5max] = make("U0.a5max", 1.0, "class U, a2 = 0: |a5| <= 1/3 + 2|c1|^2/3 <= 1");
    m[C::S_a2max] = make("S.a2max", 2.0, "class S coefficient bound |a2| <= 2");
    m[C::S_a3max] = make("S.a3max", 3.0, "class S coefficient bound |a3| <= 3");
    m[C::S_a4max] = make("S.a4max", 4.0, "class S coefficient bound |a4| <= 4");
    m[C::S_a5max] = make("S.a5max", 5.0, "class S coefficient bound |a5| <= 5");
    m[C::S_H22] = make("S.H22", 1.3614, "class S Hankel bound |H2,2| <= 1.3614...");
    m[C::S_H23] = make("S.H23", 4.89869, "class S Hankel bound |H2,3| <= 4.89869...");
    m[C::S0_a3max] = make("S0.a3max", 1.0, "class S, a2 = 0: |a3| <= 1");
    m[C::S0_a4max] = make("S0.a4max", 2.0 / 3.0, "class S, a2 = 0: |a4| <= 2/3");
    m[C::S0_a5max] = make("S0.a5max", 0.75 + 1.0 / std::sqrt(7.0), "class S, a2 = 0: |a5| <= 3/4 + 1/sqrt(7)");
    m[C::S0_H22] = make("S0.H22", 1.0, "class S, a2 = 0: |H2,2| <= 1");
    m[C::S0_H23] = make("S0.H23", 2.02757, "class S, a2 = 0: |H2,3| <= 2.02757...");
    m[C::A_T22] = make("A.T22", 13.0, "class S reference: |T2,2| <= 13 (sharp)");
    m[C::A_T23] = make("A.T23", 25.0, "class S reference: |T2,3| <= 25 (sharp)");
    m[C::A_T31] = make("A.T31", 24.0, "class S reference: |T3,1| <= 24 (sharp)");

    if (m.size() != kConstantCount) {
        throw std::logic_error("ledger is missing an entry");
    }
    std::array<LedgerConstant, kConstantCount> entries;
    for (auto& [id, value] : m) entries[static_cast<std::size_t>(id)] = std::move(value);
    return entries;
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

const Ledger& Ledger::standard()
{
    static const Ledger ledger{standard_entries()};
    return ledger;
}

const LedgerConstant& Ledger::find(std::string_view id) const
{
    return entry(id_of(id));
}

ConstantId Ledger::id_of(std::string_view id) const
{
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k].id == id) return static_cast<ConstantId>(k);
    }
    throw UnknownConstant("no ledger constant named '" + std::string(id) + "'");
}

Ledger Ledger::with(ConstantId id, double value) const
{
    Ledger copy = *this;
    copy.entries_[static_cast<std::size_t>(id)].value = value;
    return copy;
}

const LedgerConstant& constant(std::string_view id)
{
    return Ledger::standard().find(id);
}

// ---------------------------------------------------------------------------
// Expressions

struct ConstantNode {
    ConstantId id;
};
struct IntegerNode {
    int value;
};
struct VariableNode {};
struct SumNode {
    std::vector<ExprPtr> terms;
};
struct ProductNode {
    std::vector<ExprPtr> factors;
};
struct DifferenceNode {
    ExprPtr lhs, rhs;
};
struct SquareNode {
    ExprPtr base;
};
struct MaxOverNode {
    ExprPtr upper, body;
};

class Expr {
public:
    using Node = std::variant<ConstantNode, IntegerNode, VariableNode, SumNode, ProductNode, DifferenceNode,
                              SquareNode, MaxOverNode>;
    explicit Expr(Node node) : node_(std::move(node)) {}
    const Node& node() const noexcept { return node_; }

private:
    Node node_;
};

namespace expr {

ExprPtr c(ConstantId id) { return std::make_shared<const Expr>(ConstantNode{id}); }
ExprPtr integer(int v) { return std::make_shared<const Expr>(IntegerNode{v}); }
ExprPtr x() { return std::make_shared<const Expr>(VariableNode{}); }
ExprPtr sum(std::vector<ExprPtr> terms) { return std::make_shared<const Expr>(SumNode{std::move(terms)}); }
ExprPtr product(std::vector<ExprPtr> factors)
{
    return std::make_shared<const Expr>(ProductNode{std::move(factors)});
}
ExprPtr difference(ExprPtr lhs, ExprPtr rhs)
{
    return std::make_shared<const Expr>(DifferenceNode{std::move(lhs), std::move(rhs)});
}
ExprPtr square(ExprPtr base) { return std::make_shared<const Expr>(SquareNode{std::move(base)}); }
ExprPtr max_over(ExprPtr upper, ExprPtr body)
{
    return std::make_shared<const Expr>(MaxOverNode{std::move(upper), std::move(body)});
}

} // namespace expr

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double eval_at(const Expr& e, const Ledger& ledger, std::optional<double> var)
{
    return std::visit(
        overloaded{
            [&](const ConstantNode& n) { return ledger[n.id]; },
            [](const IntegerNode& n) { return static_cast<double>(n.value); },
            [&](const VariableNode&) {
                if (!var) throw std::logic_error("free variable outside max_over");
                return *var;
            },
            [&](const SumNode& n) {
                double acc = 0.0;
                for (const auto& t : n.terms) acc += eval_at(*t, ledger, var);
                return acc;
            },
            [&](const ProductNode& n) {
                double acc = 1.0;
                for (const auto& f : n.factors) acc *= eval_at(*f, ledger, var);
                return acc;
            },
            [&](const DifferenceNode& n) { return eval_at(*n.lhs, ledger, var) - eval_at(*n.rhs, ledger, var); },
            [&](const SquareNode& n) {
                const double b = eval_at(*n.base, ledger, var);
                return b * b;
            },
            [&](const MaxOverNode& n) {
                const double hi = eval_at(*n.upper, ledger, var);
                auto p = [&](double t) { return eval_at(*n.body, ledger, t); };
                // Recover p(t) = A t^2 + B t + C from three samples, then check a fourth.
                const double p0 = p(0.0), p1 = p(1.0), p2 = p(2.0);
                const double A = 0.5 * (p2 - 2.0 * p1 + p0);
                const double B = p1 - p0 - A;
                const double C = p0;
                const double p3 = p(3.0);
                const double predicted = 9.0 * A + 3.0 * B + C;
                if (std::abs(p3 - predicted) > 1e-9 * std::max(1.0, std::abs(p3))) {
                    throw std::logic_error("max_over body is not quadratic in x");
                }
                auto q = [&](double t) { return (A * t + B) * t + C; };
                double best = std::max(q(0.0), q(hi));
                if (A < 0.0) {
                    const double vertex = -B / (2.0 * A);
                    if (vertex > 0.0 && vertex < hi) best = std::max(best, q(vertex));
                }
                return best;
            },
        },
        e.node());
}

bool is_compound(const Expr& e)
{
    return std::holds_alternative<SumNode>(e.node()) || std::holds_alternative<DifferenceNode>(e.node()) ||
           std::holds_alternative<ProductNode>(e.node());
}

std::string render_impl(const Expr& e, const std::function<std::string(ConstantId)>& leaf)
{
    auto wrapped = [&](const ExprPtr& child) {
        const std::string s = render_impl(*child, leaf);
        return is_compound(*child) ? "(" + s + ")" : s;
    };
    return std::visit(
        overloaded{
            [&](const ConstantNode& n) { return leaf(n.id); },
            [](const IntegerNode& n) { return std::to_string(n.value); },
            [](const VariableNode&) { return std::string("x"); },
            [&](const SumNode& n) {
                std::string out;
                for (std::size_t k = 0; k < n.terms.size(); ++k) {
                    if (k) out += " + ";
                    const auto& t = n.terms[k];
                    out += std::holds_alternative<SumNode>(t->node()) ? "(" + render_impl(*t, leaf) + ")"
                                                                      : render_impl(*t, leaf);
                }
                return out;
            },
            [&](const ProductNode& n) {
                std::string out;
                for (std::size_t k = 0; k < n.factors.size(); ++k) {
                    if (k) out += " * ";
                    const auto& f = n.factors[k];
                    out += std::holds_alternative<ProductNode>(f->node()) ? render_impl(*f, leaf) : wrapped(f);
                }
                return out;
            },
            [&](const DifferenceNode& n) { return render_impl(*n.lhs, leaf) + " - " + wrapped(n.rhs); },
            [&](const SquareNode& n) { return wrapped(n.base) + "^2"; },
            [&](const MaxOverNode& n) {
                return "max_{x in [0, " + render_impl(*n.upper, leaf) + "]} (" + render_impl(*n.body, leaf) + ")";
            },
        },
        e.node());
}

} // namespace

double evaluate(const Expr& e, const Ledger& ledger) { return eval_at(e, ledger, std::nullopt); }

std::string render(const Expr& e)
{
    const Ledger& ledger = Ledger::standard();
    return render_impl(e, [&](ConstantId id) { return ledger.entry(id).id; });
}

std::string render_values(const Expr& e, const Ledger& ledger)
{
    return render_impl(e, [&](ConstantId id) { return format_number(ledger[id]); });
}

std::vector<ExprPtr> top_level_steps(const ExprPtr& e)
{
    if (const auto* p = std::get_if<ProductNode>(&e->node())) return p->factors;
    if (const auto* s = std::get_if<SumNode>(&e->node())) return s->terms;
    return {e};
}

// ---------------------------------------------------------------------------
// Chains

namespace {

struct ChainSpec {
    std::string function_class;
    bool a2_zero;
    DeterminantId bounded;
    std::string stated_label;
    ExprPtr expression;
    double stated;
    bool truncated;
    std::optional<double> proof_line_value;
    std::optional<ConstantId> reference;
    std::string note;
};

// |T_{3,n}| <= (|a_n| + |a_{n+2}|) (|a_n|^2 + |a_{n+1}|^2 + |H_{2,n}|)
ExprPtr t3_chain(ConstantId lead, ConstantId far, ConstantId next, ConstantId hankel)
{
    using namespace expr;
    return product({sum({c(lead), c(far)}), sum({square(c(lead)), square(c(next)), c(hankel)})});
}

const std::map<std::string, ChainSpec, std::less<>>& chain_specs()
{
    using namespace expr;
    using C = ConstantId;
    using K = DeterminantKind;
    static const std::map<std::string, ChainSpec, std::less<>> specs = [] {
        std::map<std::string, ChainSpec, std::less<>> s;
        const DeterminantId t22{K::Toeplitz, 2, 2}, t23{K::Toeplitz, 2, 3}, t31{K::Toeplitz, 3, 1},
            t32{K::Toeplitz, 3, 2}, t33{K::Toeplitz, 3, 3};

        s["thm1_i"] = {"U", false, t22, "T2,2", sum({square(c(C::U_a2max)), square(c(C::U_a3max))}), 13.0, false,
                       std::nullopt, C::A_T22, ""};
        s["thm1_ii"] = {"U", false, t23, "T2,3", sum({square(c(C::U_a3max)), square(c(C::U_a4max))}), 25.0,
                        false, std::nullopt, C::A_T23, ""};
        s["thm1_iii"] = {"U",
                         false,
                         t31,
                         "T3,1",
                         sum({integer(1), product({integer(2), square(c(C::U_a2max))}),
                              product({sum({square(c(C::U_a2max)), c(C::U_c1max)}), c(C::U_a3max)})}),
                         24.0,
                         false,
                         std::nullopt,
                         C::A_T31,
                         ""};
        s["thm1_iv"] = {"U", false, t32, "T3,2",
                        t3_chain(C::U_a2max, C::U_a4max, C::U_a3max, C::U_H22), 84.0, false,
                        std::nullopt, std::nullopt, ""};
        s["thm1_v"] = {"U",
                       false,
                       t33,
                       "T3,3",
                       t3_chain(C::U_a3max, C::U_a5max, C::U_a4max, C::U_H23),
                       211.8771,
                       true,
                       211.4846575,
                       std::nullopt,
                       "statement gives 211.8771..., the proof line writes 8*(25+1.4846575...) = 211.4846575... "
                       "although that product is 211.87726 (close to the statement), and the cited |H2,3| "
                       "constant 1.4946575... gives 211.95726; not claimed sharp"};

        s["thm2_i"] = {"U", true, t22, "T2,2", square(c(C::U0_a3max)), 1.0, false, std::nullopt, std::nullopt, ""};
        // |c1|^2 + |c2|^2 with |c2| <= c2scale (1 - |c1|^2), maximized over x = |c1|^2.
        s["thm2_ii"] = {"U",
                        true,
                        t23,
                        "T2,3",
                        max_over(square(c(C::U_c1max)),
                                 sum({x(), square(product({c(C::U_c2scale), difference(integer(1), x())}))})),
                        1.0,
                        false,
                        std::nullopt,
                        std::nullopt,
                        ""};
        s["thm2_iii"] = {"U", true, t31, "T3,1", sum({integer(1), square(c(C::U0_a3max))}), 2.0, false,
                         std::nullopt, std::nullopt, ""};
        // 2 |c1|^2 |c2| with |c2| <= c2scale (1 - |c1|^2), maximized over x = |c1|^2.
        s["thm2_iv"] = {"U",
                        true,
                        t32,
                        "T3,2",
                        max_over(square(c(C::U_c1max)),
                                 product({integer(2), x(), c(C::U_c2scale), difference(integer(1), x())})),
                        3.0 / 16.0,
                        false,
                        std::nullopt,
                        std::nullopt,
                        "2x(1-x)/2 peaks at x = |c1|^2 = 1/2 with value 1/4, not 3/16"};
        s["thm2_v"] = {"U", true, t33, "T3,3",
                       t3_chain(C::U0_a3max, C::U0_a5max, C::U0_a4max, C::U_H23_a2zero), 4.5, false,
                       std::nullopt, std::nullopt, "not claimed sharp"};

        s["thm3_i"] = {"S", false, t32, "T3,2",
                       t3_chain(C::S_a2max, C::S_a4max, C::S_a3max, C::S_H22), 86.1684, true,
                       std::nullopt, std::nullopt, ""};
        s["thm3_ii"] = {"S",
                        false,
                        t33,
                        "T2,3",
                        t3_chain(C::S_a3max, C::S_a5max, C::S_a4max, C::S_H23),
                        239.1895,
                        true,
                        std::nullopt,
                        std::nullopt,
                        "statement names |T2,3| but the chain bounds |T3,3|"};
        s["thm4_i"] = {"S", true, t32, "T3,2",
                       product({c(C::S0_a4max), sum({square(c(C::S0_a3max)), c(C::S0_H22)})}), 4.0 / 3.0, false,
                       std::nullopt, std::nullopt, ""};
        s["thm4_ii"] = {"S",
                        true,
                        t33,
                        "T2,3",
                        t3_chain(C::S0_a3max, C::S0_a5max, C::S0_a4max, C::S0_H23),
                        7.3883,
                        true,
                        std::nullopt,
                        std::nullopt,
                        "statement names |T2,3| but the chain bounds |T3,3|"};
        return s;
    }();
    return specs;
}

} // namespace

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids{"thm1_i",  "thm1_ii",  "thm1_iii", "thm1_iv", "thm1_v",
                                              "thm2_i",  "thm2_ii",  "thm2_iii", "thm2_iv", "thm2_v",
                                              "thm3_i",  "thm3_ii",  "thm4_i",   "thm4_ii"};
    return ids;
}

BoundChain theorem_chain(std::string_view theorem_id, const Ledger& ledger)
{
    const auto& specs = chain_specs();
    const auto it = specs.find(theorem_id);
    if (it == specs.end()) {
        throw UnknownTheorem("unknown theorem id '" + std::string(theorem_id) + "'");
    }
    const ChainSpec& spec = it->second;

    BoundChain chain;
    chain.theorem_id = std::string(theorem_id);
    chain.function_class = spec.function_class;
    chain.a2_zero = spec.a2_zero;
    chain.bounded = spec.bounded;
    chain.stated_label = spec.stated_label;
    chain.expression = spec.expression;
    for (const auto& step : top_level_steps(spec.expression)) {
        chain.steps.push_back({render(*step), render_values(*step, ledger), evaluate(*step, ledger)});
    }
    chain.computed_value = evaluate(*spec.expression, ledger);
    chain.paper_stated = spec.stated;
    chain.stated_truncated = spec.truncated;
    chain.tolerance = spec.truncated ? kTruncatedTolerance : kExactTolerance * std::max(1.0, std::abs(spec.stated));
    chain.match = std::abs(chain.computed_value - chain.paper_stated) <= chain.tolerance;
    chain.proof_line_value = spec.proof_line_value;
    if (spec.reference) {
        chain.reference_id = ledger.entry(*spec.reference).id;
        chain.reference_value = ledger[*spec.reference];
    }
    chain.note = spec.note;
    return chain;
}

VerificationReport verify_against_paper(const Ledger& ledger, bool use_stated, const std::vector<std::string>& only)
{
    VerificationReport report;
    const auto& ids = only.empty() ? theorem_ids() : only;
    for (const auto& id : ids) {
        BoundChain chain = theorem_chain(id, ledger);
        if (use_stated) {
            chain.computed_value = chain.paper_stated;
            chain.match = true;
        }
        if (chain.match) {
            report.matches.push_back(chain.theorem_id);
        } else {
            report.mismatches.push_back({chain.theorem_id, chain.computed_value, chain.paper_stated,
                                         std::abs(chain.computed_value - chain.paper_stated)});
        }
        report.chains.push_back(std::move(chain));
    }
    return report;
}

} // namespace coefflab
