#include "casekit/evidence_scoring.hpp"

#include "casekit/errors.hpp"

namespace casekit {

int evidence_age_months(const Evidence& ev, const Date& as_of) {
    return whole_months_between(ev.last_review.value_or(ev.created), as_of);
}

EvidenceStatusScore score_evidence(const Evidence& ev, const Date& as_of) {
    EvidenceStatusScore out{ev.id, 0, {}, as_of};
    auto finish = [&](std::string_view rule, int score) {
        out.rule_trace.emplace_back(rule);
        out.score = score;
        return out;
    };

    if (!ev.exists) return finish(kRuleMissing, 0);

    if (as_of < ev.created) {
        throw Error("INVALID_AS_OF", ev.id, "as_of " + as_of.str() + " precedes creation " + ev.created.str());
    }
    if (ev.last_review && as_of < *ev.last_review) {
        throw Error("INVALID_AS_OF", ev.id, "as_of " + as_of.str() + " precedes last review " + ev.last_review->str());
    }

    const bool reviewed = ev.last_review.has_value();
    if (!reviewed) out.rule_trace.emplace_back(kTraceAgeFromCreated);
    const int age = evidence_age_months(ev, as_of);
    const bool active = reviewed && ev.active_confirmed;
    const bool owned = ev.owner.has_value() && ev.owner_affiliated;

    if (ev.flagged_major_revision) return finish(kRuleMajorRevision, 1);
    if (age >= 12 && !active) return finish(kRuleStale, 1);
    if (!owned) return finish(kRuleOwnership, 1);
    if (age < 6 && ev.revision_history_documented && ev.approvals_documented && ev.controlled_environment) {
        return finish(kRuleExceeds, 3);
    }
    // partially_outdated_flagged does not block R2.
    if (age < 12 && (active || reviewed)) return finish(kRuleMeets, 2);
    return finish(kRuleFallback, 1);
}

EvidenceHygieneReport score_library(const SafetyCase& sc, const Date& as_of) {
    EvidenceHygieneReport report;
    report.case_version = sc.version;
    report.as_of = as_of;
    for (const auto& [id, ev] : sc.evidence) {
        auto s = score_evidence(ev, as_of);
        ++report.counts[s.score];
        if (s.score < kHygieneThreshold) report.below_threshold.push_back(id);
        report.scores.push_back(std::move(s));
    }
    return report;
}

nlohmann::json to_json(const EvidenceStatusScore& s) {
    return {{"evidence_id", s.evidence_id}, {"score", s.score}, {"rule_trace", s.rule_trace}, {"as_of", s.as_of.str()}};
}

nlohmann::json to_json(const EvidenceHygieneReport& r) {
    nlohmann::json scores = nlohmann::json::array();
    for (const auto& s : r.scores) scores.push_back(to_json(s));
    return {
        {"case_version", r.case_version},
        {"as_of", r.as_of.str()},
        {"counts", {{"0", r.counts[0]}, {"1", r.counts[1]}, {"2", r.counts[2]}, {"3", r.counts[3]}}},
        {"scores", scores},
        {"below_threshold", r.below_threshold},
    };
}

}  // namespace casekit
