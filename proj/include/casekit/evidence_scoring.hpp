#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

// Rule ids, in evaluation order. First match wins.
inline constexpr std::string_view kRuleMissing = "R0";         // -> 0
inline constexpr std::string_view kRuleMajorRevision = "R1a";  // -> 1
inline constexpr std::string_view kRuleStale = "R1b";          // -> 1
inline constexpr std::string_view kRuleOwnership = "R1c";      // -> 1
inline constexpr std::string_view kRuleExceeds = "R3";         // -> 3
inline constexpr std::string_view kRuleMeets = "R2";           // -> 2
inline constexpr std::string_view kRuleFallback = "R_fallback";  // -> 1

/// Informational trace entry preceding the terminal rule when no review date
/// is recorded and age is measured from creation instead.
inline constexpr std::string_view kTraceAgeFromCreated = "AGE_FROM_CREATED";

struct EvidenceStatusScore {
    std::string evidence_id;
    int score = 0;
    std::vector<std::string> rule_trace;  // terminal rule last
    Date as_of;

    const std::string& terminal_rule() const { return rule_trace.back(); }
    friend bool operator==(const EvidenceStatusScore&, const EvidenceStatusScore&) = default;
};

/// Evidence status (0-3) from recency, ownership and document control.
/// Takes no claim-assessment input. Throws Error(INVALID_AS_OF) when an
/// existing record is scored before its creation or last review date.
EvidenceStatusScore score_evidence(const Evidence& ev, const Date& as_of);

/// Age in whole months the rules use: from last_review, else from created.
int evidence_age_months(const Evidence& ev, const Date& as_of);

inline constexpr int kHygieneThreshold = 2;

struct EvidenceHygieneReport {
    std::int64_t case_version = 0;
    Date as_of;
    std::array<int, 4> counts{};           // index = score
    std::vector<EvidenceStatusScore> scores;  // by evidence id
    std::vector<std::string> below_threshold;  // ids scoring < 2

    friend bool operator==(const EvidenceHygieneReport&, const EvidenceHygieneReport&) = default;
};

/// Scores every library record once, linked or not.
EvidenceHygieneReport score_library(const SafetyCase& sc, const Date& as_of);

nlohmann::json to_json(const EvidenceStatusScore& s);
nlohmann::json to_json(const EvidenceHygieneReport& r);

}  // namespace casekit
