#include <catch2/catch.hpp>

#include <sstream>

#include "coefflab/error.hpp"
#include "coefflab/report.hpp"

using namespace coefflab;
using namespace std::complex_literals;

TEST_CASE("complex literals", "[report]")
{
    CHECK(parse_complex("2i") == 2i);
    CHECK(parse_complex("-3") == cplx(-3.0));
    CHECK(parse_complex("1.5-0.25i") == cplx(1.5, -0.25));
    CHECK(parse_complex("i") == 1i);
    CHECK(parse_complex("-i") == -1i);
    CHECK(parse_complex("+4") == cplx(4.0));
    CHECK(parse_complex("1e-3+2e2i") == cplx(1e-3, 2e2));
    CHECK(parse_complex("0") == cplx(0.0));
    CHECK(parse_complex(" 1 + 2i ") == cplx(1.0, 2.0));
    for (const char* bad : {"", "x", "2j", "1+", "1+2", "i2", "--1", "2ii", "1 2"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
    }
}

TEST_CASE("coefficient lists", "[report]")
{
    const CoefficientWindow w = parse_window("1,2i,-3,-4i,5");
    CHECK(w.values() == std::vector<cplx>{1.0, 2i, -3.0, -4i, 5.0});
    CHECK(parse_window(" 1 , 2 ").values() == std::vector<cplx>{1.0, 2.0});
    CHECK_THROWS_AS(parse_window("2,1"), InvalidWindow);
    CHECK_THROWS_AS(parse_window("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_window(""), std::invalid_argument);
}

TEST_CASE("output formats", "[report]")
{
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("text") == OutputFormat::Text);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("eval report", "[report]")
{
    const ReportDocument doc = eval_report(catalog("f1").window, "f1", parse_determinant_id("T3,3"));
    const ordered_json j = to_json(doc);
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"tool_version", "command", "inputs", "results", "flags_of_concern"});
    CHECK(j["command"] == "eval");
    const auto& item = j["results"]["items"][0];
    CHECK(item["value"][0].get<double>() == Approx(-208.0));
    CHECK(item["value"][1].get<double>() == Approx(0.0).margin(1e-12));
    CHECK(item["modulus"].get<double>() == Approx(208.0));
    CHECK(item["cross_check_delta"].get<double>() <= 1e-9);

    // Ids without a closed form still evaluate, without the cross-check.
    const ordered_json t41 = to_json(eval_report(catalog("koebe").window, "koebe", parse_determinant_id("T4,1")));
    CHECK_FALSE(t41["results"]["items"][0].contains("cross_check_delta"));
    CHECK_THROWS_AS(eval_report(catalog("f1").window, "f1", parse_determinant_id("T4,3")), WindowTooShort);
}

TEST_CASE("bounds report flags", "[report]")
{
    const ReportDocument all = bounds_report({}, false);
    std::vector<std::string> mismatch_ids;
    bool label3 = false, label4 = false;
    for (const auto& f : all.flags_of_concern) {
        if (f.kind == "mismatch") mismatch_ids.push_back(f.id);
        if (f.kind == "label" && f.id == "thm3_ii") label3 = true;
        if (f.kind == "label" && f.id == "thm4_ii") label4 = true;
    }
    std::sort(mismatch_ids.begin(), mismatch_ids.end());
    CHECK(mismatch_ids == std::vector<std::string>{"thm1_v", "thm2_iv"});
    CHECK(label3);
    CHECK(label4);

    const ReportDocument stated = bounds_report({}, true);
    CHECK(to_json(stated)["results"]["mismatches"].empty());

    const ordered_json one = to_json(bounds_report({"thm3_i"}, false));
    REQUIRE(one["results"]["items"].size() == 1);
    CHECK(one["results"]["items"][0]["computed"].get<double>() == Approx(86.1684));
    CHECK(one["results"]["items"][0]["match"].get<bool>());
}

TEST_CASE("membership report verdicts", "[report]")
{
    const ordered_json f1 = to_json(membership_report("f1", {0.99}, 256));
    CHECK(f1["results"]["verdict"] == "evidence-member");
    CHECK(f1["results"]["max_defect"].get<double>() == Approx(0.9801).margin(1e-6));
    const ordered_json odd = to_json(membership_report("z+2z3", {0.7}, 256));
    CHECK(odd["results"]["verdict"] == "non-member-witness");
    CHECK_THROWS_AS(membership_report("nope", {0.5}, 64), UnknownName);
}

TEST_CASE("search report carries context and the a2 = 0 flag", "[report]")
{
    SearchConfig cfg;
    cfg.seed = 7;
    cfg.restarts = 200;
    const Objective obj{parse_determinant_id("T3,2"), A2Mode::Zero, SearchRegion::Ledger};
    const ReportDocument doc = search_report(obj, cfg);
    const ordered_json j = to_json(doc);
    CHECK(j["results"]["best_value"].get<double>() == Approx(0.25).margin(1e-4));
    CHECK(j["results"]["items"].size() == 200);
    bool flagged = false;
    for (const auto& f : doc.flags_of_concern) flagged = flagged || f.id == "thm2_iv";
    CHECK(flagged);
}

TEST_CASE("json round trip", "[report]")
{
    for (const ReportDocument& doc :
         {eval_report(catalog("f1").window, "f1", parse_determinant_id("T3,2")), bounds_report({}, false),
          membership_report("koebe", {0.9, 0.99}, 64), full_report(false)}) {
        const std::string text = serialize(doc, OutputFormat::Json);
        const ReportDocument back = report_from_json(ordered_json::parse(text));
        CHECK(serialize(back, OutputFormat::Json) == text);
        CHECK(back.flags_of_concern.size() == doc.flags_of_concern.size());
    }
    CHECK_THROWS(report_from_json(ordered_json::parse("{\"command\": 3}")));
}

TEST_CASE("csv and text output", "[report]")
{
    const ReportDocument doc = bounds_report({}, false);
    const std::string csv = serialize(doc, OutputFormat::Csv);
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    CHECK(header.rfind("command,", 0) == 0);
    int rows = 0;
    while (std::getline(in, line)) rows += !line.empty();
    CHECK(rows == 14);
    const std::string text = serialize(doc, OutputFormat::Text);
    CHECK(text.rfind("coefflab " + tool_version() + " : bounds\n", 0) == 0);
}

TEST_CASE("report without campaigns passes its criteria", "[report]")
{
    const ordered_json j = to_json(full_report(false));
    const auto& criteria = j["results"]["criteria"];
    REQUIRE(criteria.size() == 6);
    for (const auto& c : criteria) {
        INFO(c["name"].get<std::string>());
        CHECK(c["passed"].get<bool>());
    }
    CHECK(serialize(full_report(false), OutputFormat::Json) == j.dump(2) + "\n");
}
