#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coefflab/bounds.hpp"
#include "coefflab/class_u.hpp"
#include "coefflab/functionals.hpp"
#include "coefflab/search.hpp"

namespace coefflab {

using ordered_json = nlohmann::ordered_json;

std::string tool_version();

// A discrepancy with a stated value. Findings, never failures.
struct ConcernFlag {
    std::string kind;  // "mismatch", "label", "supremum", "witness"
    std::string id;
    std::string message;
    ordered_json details = ordered_json::object();
};

// Every command's output. results["items"] is a list of flat records; CSV
// emits one row per item.
struct ReportDocument {
    std::string tool_version;
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::object();
    std::vector<ConcernFlag> flags_of_concern;
};

enum class OutputFormat { Json, Csv, Text };

// Throws std::invalid_argument.
OutputFormat parse_format(std::string_view text);

ordered_json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const ordered_json& j);
std::string serialize(const ReportDocument& doc, OutputFormat format);

ordered_json complex_json(cplx z);
ordered_json point_json(const UParamPoint& pt);
ordered_json window_json(const CoefficientWindow& w);

// "2i", "-3", "1.5-0.25i", "i". Throws std::invalid_argument.
cplx parse_complex(std::string_view text);
// Comma-separated a_1, a_2, ... with a_1 == 1. Throws std::invalid_argument / InvalidWindow.
CoefficientWindow parse_window(std::string_view text);

ReportDocument eval_report(const CoefficientWindow& w, const std::string& source, const DeterminantId& id);

ReportDocument bounds_report(const std::vector<std::string>& theorems, bool use_stated);

ReportDocument search_report(const Objective& obj, const SearchConfig& cfg);

ReportDocument membership_report(const std::string& function, const std::vector<double>& radii, int samples);

// Documented campaign seeds of the full sweep.
struct CampaignPlan {
    std::string label;
    Objective objective;
    std::uint64_t seed;
    double threshold_low;
    std::optional<double> threshold_high;
};
const std::vector<CampaignPlan>& sweep_campaigns();

// Acceptance sweep in one document. Campaigns run only when include_campaigns.
ReportDocument full_report(bool include_campaigns, int restarts = 200);

} // namespace coefflab
