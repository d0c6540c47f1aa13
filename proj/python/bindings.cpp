// Python bindings. Numeric helpers return plain values; report builders return
// the same JSON text the CLI emits, decoded on the Python side.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coefflab/bounds.hpp"
#include "coefflab/class_u.hpp"
#include "coefflab/error.hpp"
#include "coefflab/functionals.hpp"
#include "coefflab/report.hpp"
#include "coefflab/search.hpp"

namespace py = pybind11;
using namespace coefflab;

namespace {

CoefficientWindow window_of(const std::vector<cplx>& coeffs) { return CoefficientWindow(coeffs); }

UParamPoint point_of(cplx a2, cplx c1, cplx c2, cplx c3) { return {a2, {c1, c2, c3}}; }

std::string json_text(const ReportDocument& doc) { return serialize(doc, OutputFormat::Json); }

Objective objective_of(const std::string& det, bool a2zero, const std::string& region)
{
    if (region != "ledger" && region != "schwarz") throw std::invalid_argument("region must be ledger or schwarz");
    return {parse_determinant_id(det), a2zero ? A2Mode::Zero : A2Mode::Free,
            region == "schwarz" ? SearchRegion::Schwarz : SearchRegion::Ledger};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "coefflab core: coefficient determinants and bound checks for the class U";
    m.attr("__version__") = tool_version();

    auto base = py::register_exception<Error>(m, "CoefflabError", PyExc_RuntimeError);
    py::register_exception<ZeroConstantTerm>(m, "ZeroConstantTerm", base.ptr());
    py::register_exception<WindowTooShort>(m, "WindowTooShort", base.ptr());
    py::register_exception<InvalidWindow>(m, "InvalidWindow", base.ptr());
    py::register_exception<UnsupportedId>(m, "UnsupportedId", base.ptr());
    py::register_exception<UnknownName>(m, "UnknownName", base.ptr());
    py::register_exception<EvaluationFailure>(m, "EvaluationFailure", base.ptr());
    py::register_exception<CoefficientMapMismatch>(m, "CoefficientMapMismatch", base.ptr());
    py::register_exception<UnknownConstant>(m, "UnknownConstant", base.ptr());
    py::register_exception<UnknownTheorem>(m, "UnknownTheorem", base.ptr());
    py::register_exception<InfeasibleStart>(m, "InfeasibleStart", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    m.def(
        "determinant",
        [](const std::vector<cplx>& coeffs, const std::string& det) {
            return determinant(window_of(coeffs), parse_determinant_id(det));
        },
        py::arg("coeffs"), py::arg("det"), "Toeplitz or Hankel determinant of a_1..a_m, e.g. det='T3,2'.");
    m.def(
        "closed_form",
        [](const std::vector<cplx>& coeffs, const std::string& det) {
            return closed_form(window_of(coeffs), parse_determinant_id(det));
        },
        py::arg("coeffs"), py::arg("det"));
    m.def("closed_form_ids", [] {
        std::vector<std::string> ids;
        for (const auto& id : kClosedFormIds) ids.push_back(to_string(id));
        return ids;
    });

    m.def(
        "schwarz_feasible",
        [](cplx c1, cplx c2, cplx c3) {
            const Feasibility f = schwarz_feasible({c1, c2, c3});
            return py::make_tuple(f.feasible, f.margins);
        },
        py::arg("c1"), py::arg("c2"), py::arg("c3"), "(feasible, margins) for the c1, c2, c3 constraints.");
    m.def(
        "project_feasible",
        [](cplx c1, cplx c2, cplx c3) {
            const SchwarzParams p = project_feasible({c1, c2, c3});
            return py::make_tuple(p.c1, p.c2, p.c3);
        },
        py::arg("c1"), py::arg("c2"), py::arg("c3"));
    m.def(
        "u_coefficients",
        [](cplx a2, cplx c1, cplx c2, cplx c3, std::size_t m) {
            return u_coefficients(point_of(a2, c1, c2, c3), m).values();
        },
        py::arg("a2"), py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("m") = 5,
        "a_1..a_m of f with z/f = 1 - a2 z - c1 z^2 - c2 z^3 - c3 z^4.");

    m.def("catalog_names", &catalog_names);
    m.def(
        "catalog_window", [](const std::string& name) { return catalog(name).window.values(); }, py::arg("name"));
    m.def(
        "catalog_evaluate", [](const std::string& name, cplx z) { return catalog(name).evaluator(z); },
        py::arg("name"), py::arg("z"));
    m.def(
        "membership_max_defect",
        [](const std::function<cplx(cplx)>& f, const std::vector<double>& radii, int samples) {
            const MembershipResult r = membership_max_defect(f, radii, samples);
            return py::make_tuple(r.max_defect, r.argmax);
        },
        py::arg("f"), py::arg("radii"), py::arg("samples") = 256, "(max_defect, argmax) for any callable f.");

    m.def(
        "constant", [](const std::string& id) { return constant(id).value; }, py::arg("id"));
    m.def("theorem_ids", &theorem_ids);

    m.def(
        "eval_json",
        [](const std::string& function, const std::string& coeffs, const std::string& det) {
            const DeterminantId id = parse_determinant_id(det);
            if (!function.empty()) return json_text(eval_report(catalog(function).window, function, id));
            return json_text(eval_report(parse_window(coeffs), coeffs, id));
        },
        py::arg("function"), py::arg("coeffs"), py::arg("det"));
    m.def(
        "bounds_json",
        [](const std::vector<std::string>& theorems, bool use_stated) {
            return json_text(bounds_report(theorems, use_stated));
        },
        py::arg("theorems"), py::arg("use_stated"));
    m.def(
        "search_json",
        [](const std::string& det, bool a2zero, const std::string& region, std::uint64_t seed, int restarts,
           std::int64_t budget, double step_init, double step_min, unsigned threads) {
            SearchConfig cfg;
            cfg.seed = seed;
            cfg.restarts = restarts;
            cfg.refine_budget = budget;
            cfg.step_init = step_init;
            cfg.step_min = step_min;
            cfg.threads = threads;
            const Objective obj = objective_of(det, a2zero, region);
            py::gil_scoped_release release;
            return json_text(search_report(obj, cfg));
        },
        py::arg("det"), py::arg("a2zero"), py::arg("region"), py::arg("seed"), py::arg("restarts"),
        py::arg("budget"), py::arg("step_init"), py::arg("step_min"), py::arg("threads"));
    m.def(
        "membership_json",
        [](const std::string& function, const std::vector<double>& radii, int samples) {
            return json_text(membership_report(function, radii, samples));
        },
        py::arg("function"), py::arg("radii"), py::arg("samples"));
    m.def(
        "report_json",
        [](bool include_campaigns, int restarts) {
            py::gil_scoped_release release;
            return json_text(full_report(include_campaigns, restarts));
        },
        py::arg("include_campaigns"), py::arg("restarts"));
}
