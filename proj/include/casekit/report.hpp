#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "casekit/aggregation.hpp"
#include "casekit/evidence_scoring.hpp"
#include "casekit/lifecycle.hpp"
#include "casekit/linting.hpp"
#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

/// Authored follow-up passed through to the report verbatim.
struct SuggestedAction {
    std::string location;
    std::string text;

    friend bool operator==(const SuggestedAction&, const SuggestedAction&) = default;
};

std::vector<SuggestedAction> actions_from_json(const nlohmann::json& j);

struct ReportFinding {
    std::string claim_id;
    Dimension dimension;
    int score;
    std::string excerpt;
};

struct RollupRow {
    std::string claim_id;
    int depth;
    std::string family;
    std::optional<Rational> procedural;
    std::optional<Rational> implementation;
    Source procedural_source;
    Source implementation_source;
};

struct AssessmentReport {
    // identity
    std::string system;
    std::int64_t case_version = 0;
    std::string case_digest;
    Date as_of;
    Strategy strategy = Strategy::conservative_min;
    int threshold = 2;

    // sections
    std::vector<ReportFinding> findings;        // 1
    std::vector<LowScore> low_score_register;   // 2
    std::vector<RollupRow> rollup;              // 3 (tree order)
    std::vector<std::string> rollup_warnings;
    EvidenceHygieneReport hygiene;              // 4
    std::vector<LintFinding> lints;             // 5
    std::vector<WorkItem> worklist;             // 6
    std::vector<SuggestedAction> suggested_actions;  // 7
};

inline constexpr std::array<const char*, 7> kReportSections = {
    "Findings", "Low-score register", "Roll-up by branch", "Evidence hygiene",
    "Argument lint findings", "Re-assessment worklist", "Suggested actions",
};

/// Assembles the report. Every input must have been computed from `sc`'s
/// version; otherwise throws Error(VERSION_MISMATCH).
AssessmentReport build_report(const SafetyCase& sc, const RollupResult& rollup, const EvidenceHygieneReport& hygiene,
                              const LintReport& lints, const StaleResult& worklist,
                              std::vector<SuggestedAction> actions = {});

std::string render_markdown(const AssessmentReport& report);
nlohmann::json to_json(const AssessmentReport& report);

/// Claim text cut to at most `max_bytes` on a UTF-8 boundary, "..." appended
/// when cut. Newlines collapse to spaces.
std::string excerpt(std::string_view text, std::size_t max_bytes = 80);

}  // namespace casekit
