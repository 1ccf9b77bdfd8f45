#include "casekit/linting.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace casekit {

std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::error: return "error";
        case Severity::warning: return "warning";
        case Severity::info: return "info";
    }
    return "info";
}

const std::vector<LintRule>& lint_rules() {
    static const std::vector<LintRule> rules = {
        {"L-DUP-LINK", Severity::warning, "evidence linked to both a claim and one of its ancestors"},
        {"L-KIND-GAP", Severity::info, "single-kind evidence without the matching N/A flag"},
        {"L-NO-NARRATIVE", Severity::warning, "parent claim without a justification narrative"},
        {"L-NO-POC", Severity::warning, "claim without a point of contact"},
        {"L-NO-REJECTION", Severity::error, "counter-argument without a rejection"},
        {"L-ORPHAN-EVIDENCE", Severity::info, "evidence not linked to any claim"},
        {"L-OVERSTATE", Severity::warning, "claim text uses an overstatement (all, any, every)"},
        {"L-UNDEVELOPED", Severity::error, "leaf claim without linked evidence"},
    };
    return rules;
}

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto word_char = [](unsigned char c) {
        return std::isalnum(c) || c == '-' || c == '_' || c == '\'' || c >= 0x80;
    };
    for (unsigned char c : text) {
        if (word_char(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string find_overstatement(std::string_view text) {
    for (const auto& t : word_tokens(text)) {
        if (t == "all" || t == "any" || t == "every") return t;
    }
    return {};
}

std::vector<LintFinding> lint_case(const SafetyCase& sc, const AssessmentSet* assessments) {
    std::vector<LintFinding> out;
    auto add = [&](std::string_view rule, Severity sev, const std::string& loc, std::string msg) {
        out.push_back({std::string(rule), sev, loc, std::move(msg)});
    };

    std::map<std::string, std::set<std::string>> links_by_claim;
    std::set<std::string> linked_evidence;
    for (const auto& l : sc.links) {
        links_by_claim[l.claim_id].insert(l.evidence_id);
        linked_evidence.insert(l.evidence_id);
    }

    for (const auto& [id, c] : sc.claims) {
        if (auto word = find_overstatement(c.text); !word.empty()) {
            add("L-OVERSTATE", Severity::warning, id, "claim text uses the overstatement \"" + word + "\"");
        }
        const auto& own = links_by_claim[id];
        if (c.children.empty() && own.empty()) {
            add("L-UNDEVELOPED", Severity::error, id, "claim has neither sub-claims nor linked evidence");
        }
        for (std::size_t i = 0; i < c.counter_arguments.size(); ++i) {
            if (c.counter_arguments[i].rejection.find_first_not_of(" \t\r\n") == std::string::npos) {
                add("L-NO-REJECTION", Severity::error, id,
                    "counter-argument #" + std::to_string(i + 1) + " has no rejection");
            }
        }
        if (!c.children.empty() && c.justification_narrative.find_first_not_of(" \t\r\n") == std::string::npos) {
            add("L-NO-NARRATIVE", Severity::warning, id, "claim has sub-claims but no justification narrative");
        }
        for (const auto& anc : sc.ancestors(id)) {
            const auto it = links_by_claim.find(anc);
            if (it == links_by_claim.end()) continue;
            for (const auto& ev : own) {
                if (it->second.count(ev)) {
                    add("L-DUP-LINK", Severity::warning, id,
                        "evidence '" + ev + "' is also linked to ancestor '" + anc + "'");
                }
            }
        }
        if (!c.poc || c.poc->name.empty()) add("L-NO-POC", Severity::warning, id, "claim has no point of contact");

        if (!own.empty()) {
            bool any_proc = false, any_impl = false;
            for (const auto& ev : own) {
                if (const Evidence* e = sc.find_evidence(ev)) {
                    (e->kind == EvidenceKind::procedural ? any_proc : any_impl) = true;
                }
            }
            const ClaimAssessment* a = nullptr;
            if (assessments) {
                if (auto it = assessments->find(id); it != assessments->end()) a = &it->second;
            }
            if (any_proc && !any_impl && !(a && a->implementation_na)) {
                add("L-KIND-GAP", Severity::info, id,
                    "only procedural evidence is linked and implementation is not marked N/A");
            } else if (any_impl && !any_proc && !(a && a->procedural_na)) {
                add("L-KIND-GAP", Severity::info, id,
                    "only implementation evidence is linked and procedural is not marked N/A");
            }
        }
    }

    for (const auto& [id, e] : sc.evidence) {
        if (!linked_evidence.count(id)) {
            add("L-ORPHAN-EVIDENCE", Severity::info, id, "evidence is in the library but linked to no claim");
        }
    }

    std::sort(out.begin(), out.end(), [](const LintFinding& a, const LintFinding& b) {
        return std::tie(a.location, a.rule, a.message) < std::tie(b.location, b.rule, b.message);
    });
    return out;
}

std::size_t LintReport::count(Severity s) const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [&](const LintFinding& f) { return f.severity == s; }));
}

LintReport lint_report(const SafetyCase& sc, const AssessmentSet* assessments) {
    return {sc.version, lint_case(sc, assessments)};
}

std::string render_findings_text(const std::vector<LintFinding>& findings) {
    std::string out;
    for (const auto& f : findings) {
        out += std::string(to_string(f.severity)) + " " + f.rule + " " + f.location + ": " + f.message + "\n";
    }
    return out;
}

nlohmann::json to_json(const LintFinding& f) {
    return {{"rule", f.rule}, {"severity", std::string(to_string(f.severity))}, {"location", f.location},
            {"message", f.message}};
}

std::string render_findings_jsonl(const std::vector<LintFinding>& findings) {
    std::string out;
    for (const auto& f : findings) out += to_json(f).dump() + "\n";
    return out;
}

}  // namespace casekit
