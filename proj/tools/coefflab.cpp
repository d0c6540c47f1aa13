// coefflab: Toeplitz/Hankel coefficient determinants, bound chains and
// parameter-space searches for the class U.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coefflab/error.hpp"
#include "coefflab/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEvaluation = 3;

struct OutputOptions {
    std::string format = "json";
    std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o)
{
    cmd->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

int emit(const coefflab::ReportDocument& doc, const OutputOptions& o)
{
    const std::string text = coefflab::serialize(doc, coefflab::parse_format(o.format));
    if (o.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << o.out << " for writing\n";
        return kExitUsage;
    }
    file << text;
    return kExitOk;
}

std::uint64_t eval_cap_from_env()
{
    const char* raw = std::getenv("COEFFLAB_EVAL_CAP");
    if (!raw || !*raw) return coefflab::kDefaultEvalCap;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("COEFFLAB_EVAL_CAP is not an integer: ") + raw);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"coefflab: coefficient determinants and sharp-bound checks for the class U"};
    app.set_version_flag("--version", coefflab::tool_version());
    app.require_subcommand(1);

    // eval
    OutputOptions eval_out;
    std::string eval_function, eval_coeffs, eval_det;
    auto* eval = app.add_subcommand("eval", "evaluate a Toeplitz or Hankel determinant");
    auto* fn_opt = eval->add_option("--function", eval_function, "catalog function name");
    eval->add_option("--coeffs", eval_coeffs, "comma-separated a_1..a_m, e.g. \"1,2i,-3,-4i,5\"")->excludes(fn_opt);
    eval->add_option("--det", eval_det, "determinant id such as T3,2 or H2,2")->required();
    add_output_options(eval, eval_out);

    // bounds
    OutputOptions bounds_out;
    std::vector<std::string> bounds_theorems;
    bool bounds_all = false, bounds_stated = false;
    auto* bounds = app.add_subcommand("bounds", "evaluate theorem bound chains from the constants ledger");
    bounds->add_option("--theorem", bounds_theorems, "theorem id(s), e.g. thm3_i");
    bounds->add_flag("--all", bounds_all, "every chain (default when no --theorem is given)");
    bounds->add_flag("--use-stated", bounds_stated, "substitute stated values for computed ones");
    add_output_options(bounds, bounds_out);

    // search
    OutputOptions search_out;
    std::string search_objective = "T2,2";
    bool search_a2zero = false;
    std::string search_region = "ledger";
    coefflab::SearchConfig cfg;
    auto* search = app.add_subcommand("search", "multi-start pattern search over the parameter region");
    search->add_option("--objective", search_objective, "determinant id with a closed form");
    search->add_flag("--a2zero", search_a2zero, "restrict to a2 = 0");
    search->add_option("--region", search_region, "ledger (default) or schwarz")
        ->check(CLI::IsMember({"ledger", "schwarz"}));
    search->add_option("--starts", cfg.restarts, "number of restarts")->check(CLI::PositiveNumber);
    search->add_option("--seed", cfg.seed, "campaign seed");
    search->add_option("--budget", cfg.refine_budget, "proposal budget per restart")->check(CLI::NonNegativeNumber);
    search->add_option("--step-init", cfg.step_init, "initial pattern step");
    search->add_option("--step-min", cfg.step_min, "terminal pattern step");
    search->add_option("--threads", cfg.threads, "worker threads (results do not depend on it)");
    add_output_options(search, search_out);

    // membership
    OutputOptions member_out;
    std::string member_function;
    std::vector<double> member_radii{0.9, 0.99};
    int member_samples = 256;
    auto* member = app.add_subcommand("membership", "numerical check of the defining inequality of U");
    member->add_option("--function", member_function, "catalog function name")->required();
    member->add_option("--radius", member_radii, "sample radius (repeatable)");
    member->add_option("--samples", member_samples, "samples per circle");
    add_output_options(member, member_out);

    // report
    OutputOptions report_out;
    bool report_all = false;
    int report_restarts = 200;
    auto* report = app.add_subcommand("report", "run the full verification sweep");
    report->add_flag("--all", report_all, "include the search campaigns");
    report->add_option("--starts", report_restarts, "restarts per campaign")->check(CLI::PositiveNumber);
    add_output_options(report, report_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) {
            if (eval_function.empty() == eval_coeffs.empty()) {
                std::cerr << "error: give exactly one of --function or --coeffs\n";
                return kExitUsage;
            }
            const auto id = coefflab::parse_determinant_id(eval_det);
            if (!eval_function.empty()) {
                return emit(coefflab::eval_report(coefflab::catalog(eval_function).window, eval_function, id),
                            eval_out);
            }
            return emit(coefflab::eval_report(coefflab::parse_window(eval_coeffs), eval_coeffs, id), eval_out);
        }
        if (*bounds) {
            const std::vector<std::string> only = bounds_all ? std::vector<std::string>{} : bounds_theorems;
            return emit(coefflab::bounds_report(only, bounds_stated), bounds_out);
        }
        if (*search) {
            coefflab::Objective obj;
            obj.det = coefflab::parse_determinant_id(search_objective);
            obj.a2_mode = search_a2zero ? coefflab::A2Mode::Zero : coefflab::A2Mode::Free;
            obj.region = search_region == "schwarz" ? coefflab::SearchRegion::Schwarz : coefflab::SearchRegion::Ledger;
            cfg.eval_cap = eval_cap_from_env();
            return emit(coefflab::search_report(obj, cfg), search_out);
        }
        if (*member) {
            return emit(coefflab::membership_report(member_function, member_radii, member_samples), member_out);
        }
        if (*report) {
            return emit(coefflab::full_report(report_all, report_restarts), report_out);
        }
    } catch (const coefflab::WindowTooShort& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEvaluation;
    } catch (const coefflab::EvaluationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEvaluation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const coefflab::Error& e) {
        // Unknown names, theorems or ids, and budget violations are input errors.
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
