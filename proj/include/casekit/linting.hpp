#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casekit/assessment.hpp"
#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

enum class Severity { error, warning, info };

std::string_view to_string(Severity s);

struct LintFinding {
    std::string rule;
    Severity severity;
    std::string location;  // claim or evidence id
    std::string message;

    friend bool operator==(const LintFinding&, const LintFinding&) = default;
};

struct LintRule {
    std::string_view id;
    Severity severity;
    std::string_view summary;
};

/// Registered rules, in id order.
const std::vector<LintRule>& lint_rules();

/// Findings sorted by (location, rule, message). Lints never block anything.
/// L-KIND-GAP consults `assessments` when given; without them every claim
/// with single-kind evidence is reported.
std::vector<LintFinding> lint_case(const SafetyCase& sc, const AssessmentSet* assessments = nullptr);

/// Lowercased word tokens. Letters, digits, '-', '_' and '\'' stay inside a
/// token, so "all-weather" is one token.
std::vector<std::string> word_tokens(std::string_view text);

/// Returns the first overstatement token ("all", "any", "every") found, or "".
std::string find_overstatement(std::string_view text);

struct LintReport {
    std::int64_t case_version = 0;
    std::vector<LintFinding> findings;

    std::size_t count(Severity s) const;
};

LintReport lint_report(const SafetyCase& sc, const AssessmentSet* assessments = nullptr);

std::string render_findings_text(const std::vector<LintFinding>& findings);
std::string render_findings_jsonl(const std::vector<LintFinding>& findings);
nlohmann::json to_json(const LintFinding& f);

}  // namespace casekit
