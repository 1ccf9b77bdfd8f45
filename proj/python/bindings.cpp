// Thin JSON-string bridge; the Python package decodes and re-encodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casekit/aggregation.hpp"
#include "casekit/assessment.hpp"
#include "casekit/case_io.hpp"
#include "casekit/evidence_scoring.hpp"
#include "casekit/lifecycle.hpp"
#include "casekit/linting.hpp"
#include "casekit/radar.hpp"
#include "casekit/report.hpp"

namespace py = pybind11;
using namespace casekit;
using nlohmann::json;

namespace {

AssessmentSet assessments_of(const SafetyCase& sc, const std::string& records) {
    AssessmentLog log;
    if (records.empty()) return {};
    json doc = parse_json_text(records);
    if (!doc.is_array()) doc = json::array({doc});
    for (const auto& rec : doc) record_assessment(sc, log, assessment_from_json(rec));
    return log.current();
}

RollupOptions options_of(const std::string& strategy, int threshold, const std::string& weights,
                         const std::string& overrides) {
    RollupOptions o;
    o.strategy = parse_strategy(strategy);
    o.threshold = threshold;
    if (!weights.empty()) o.weights = weights_from_json(parse_json_text(weights));
    if (!overrides.empty()) o.overrides = overrides_from_json(parse_json_text(overrides));
    return o;
}

Dimension dimension_of(const std::string& s) {
    auto d = dimension_from(s);
    if (!d) throw Error("UNKNOWN_DIMENSION", s, "dimension must be procedural or implementation");
    return *d;
}

}  // namespace

PYBIND11_MODULE(_casekit, m) {
    m.doc() = "casekit core";

    static py::exception<Error> error(m, "CasekitError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(std::string(e.code()) + ": " + e.what());
            exc.attr("code") = std::string(e.code());
            exc.attr("location") = std::string(e.location());
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("canonicalize", [](const std::string& text) { return serialize_case(parse_case(text)); });
    m.def("case_digest", [](const std::string& text) { return canonical_hash(parse_case(text)); });

    m.def("validate", [](const std::string& text) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        try {
            for (const auto& v : validate_case(case_from_json(parse_json_text(text))).violations) {
                out.emplace_back(v.code, v.location, v.message);
            }
        } catch (const ParseError& e) {
            for (const auto& v : e.violations()) out.emplace_back(v.code, v.location, v.message);
            if (out.empty()) out.emplace_back(e.code(), e.location(), e.what());
        } catch (const Error& e) {
            out.emplace_back(e.code(), e.location(), e.what());
        }
        return out;
    });

    m.def("score_evidence", [](const std::string& text, const std::string& as_of) {
        return canonical_dump(to_json(score_library(parse_case(text), Date::parse(as_of))));
    });

    m.def(
        "rollup",
        [](const std::string& text, const std::string& records, const std::string& strategy, int threshold,
           const std::string& weights, const std::string& overrides) {
            const SafetyCase sc = parse_case(text);
            return canonical_dump(
                to_json(rollup(sc, assessments_of(sc, records), options_of(strategy, threshold, weights, overrides))));
        },
        py::arg("case_json"), py::arg("assessments_json") = "", py::arg("strategy") = "conservative_min",
        py::arg("threshold") = 2, py::arg("weights_json") = "", py::arg("overrides_json") = "");

    m.def(
        "lint",
        [](const std::string& text, const std::string& records) {
            const SafetyCase sc = parse_case(text);
            const AssessmentSet set = assessments_of(sc, records);
            return render_findings_jsonl(lint_case(sc, records.empty() ? nullptr : &set));
        },
        py::arg("case_json"), py::arg("assessments_json") = "");

    m.def("rubric_text", [](const std::string& dimension, int level) {
        RubricCell c = rubric_text(dimension_of(dimension), level);
        return std::make_pair(c.title, c.guidance);
    });

    m.def(
        "report_markdown",
        [](const std::string& text, const std::string& records, const std::string& as_of, const std::string& actions) {
            const SafetyCase sc = parse_case(text);
            const AssessmentSet set = assessments_of(sc, records);
            const auto acts = actions.empty() ? std::vector<SuggestedAction>{} : actions_from_json(parse_json_text(actions));
            return render_markdown(build_report(sc, rollup(sc, set), score_library(sc, Date::parse(as_of)),
                                                lint_report(sc, &set), pending_reassessment(sc, set), acts));
        },
        py::arg("case_json"), py::arg("assessments_json"), py::arg("as_of"), py::arg("actions_json") = "");

    m.def(
        "radar_svg",
        [](const std::string& text, const std::string& records, const std::string& strategy) {
            const SafetyCase sc = parse_case(text);
            RollupOptions o;
            o.strategy = parse_strategy(strategy);
            return render_radar_svg(spoke_values(sc, rollup(sc, assessments_of(sc, records), o)));
        },
        py::arg("case_json"), py::arg("assessments_json") = "", py::arg("strategy") = "conservative_min");
}
