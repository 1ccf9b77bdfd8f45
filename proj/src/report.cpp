#include "casekit/report.hpp"

#include <sstream>

#include "casekit/case_io.hpp"
#include "casekit/errors.hpp"

namespace casekit {

using nlohmann::json;

std::vector<SuggestedAction> actions_from_json(const json& j) {
    if (!j.is_array()) throw Error("SCHEMA_ERROR", "actions", "actions: expected an array");
    std::vector<SuggestedAction> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& a = j[i];
        if (!a.is_object() || !a.contains("location") || !a.contains("text") || !a["location"].is_string() ||
            !a["text"].is_string()) {
            throw Error("SCHEMA_ERROR", "actions[" + std::to_string(i) + "]",
                        "actions[" + std::to_string(i) + "]: expected {\"location\", \"text\"} strings");
        }
        out.push_back({a["location"].get<std::string>(), a["text"].get<std::string>()});
    }
    return out;
}

std::string excerpt(std::string_view text, std::size_t max_bytes) {
    std::string flat;
    for (char c : text) flat.push_back(c == '\n' || c == '\r' || c == '\t' ? ' ' : c);
    if (flat.size() <= max_bytes) return flat;
    std::size_t cut = max_bytes;
    while (cut > 0 && (static_cast<unsigned char>(flat[cut]) & 0xC0) == 0x80) --cut;
    while (cut > 0 && flat[cut - 1] == ' ') --cut;
    return flat.substr(0, cut) + "...";
}

AssessmentReport build_report(const SafetyCase& sc, const RollupResult& rollup, const EvidenceHygieneReport& hygiene,
                              const LintReport& lints, const StaleResult& worklist,
                              std::vector<SuggestedAction> actions) {
    auto check = [&](std::int64_t v, const char* what) {
        if (v != sc.version) {
            throw Error("VERSION_MISMATCH", what,
                        std::string(what) + " computed for case version " + std::to_string(v) + ", case is at " +
                            std::to_string(sc.version));
        }
    };
    check(rollup.case_version, "rollup");
    check(hygiene.case_version, "hygiene");
    check(lints.case_version, "lints");
    check(worklist.case_version, "worklist");

    AssessmentReport r;
    r.system = sc.scope.system_description;
    r.case_version = sc.version;
    r.case_digest = canonical_hash(sc).substr(0, 16);
    r.as_of = hygiene.as_of;
    r.strategy = rollup.strategy;
    r.threshold = rollup.threshold;
    r.low_score_register = rollup.low_score_register;
    for (const auto& l : rollup.low_score_register) {
        r.findings.push_back({l.claim_id, l.dimension, l.score, excerpt(sc.claims.at(l.claim_id).text)});
    }
    const auto pre = traverse(sc, TraversalOrder::pre);
    for (const auto& id : pre) {
        const Claim& c = sc.claims.at(id);
        const auto& node = rollup.nodes.at(id);
        r.rollup.push_back({id, static_cast<int>(sc.ancestors(id).size()), c.family.value_or(""),
                            node.procedural.effective, node.implementation.effective, node.procedural.source,
                            node.implementation.source});
    }
    r.rollup_warnings = rollup.warnings;
    r.hygiene = hygiene;
    r.lints = lints.findings;
    r.worklist = worklist.worklist;
    r.suggested_actions = std::move(actions);
    return r;
}

namespace {

std::string cell(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else if (c == '\n' || c == '\r') {
            out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string value_cell(const std::optional<Rational>& v) { return v ? to_string(*v) : "-"; }

std::string anchor(const std::string& claim_id) { return "claim-" + claim_id; }

const char* rule_for(const EvidenceStatusScore& s) { return s.terminal_rule().c_str(); }

}  // namespace

std::string render_markdown(const AssessmentReport& r) {
    std::ostringstream md;
    md << "# Safety Case Assessment Report\n\n";
    md << "- System: " << cell(r.system) << "\n";
    md << "- Case version: " << r.case_version << "\n";
    md << "- Case digest: `" << r.case_digest << "`\n";
    md << "- As of: " << r.as_of.str() << "\n";
    md << "- Roll-up strategy: `" << to_string(r.strategy) << "`\n";
    md << "- Reporting threshold: scores below " << r.threshold << "\n\n";

    md << "## 1. " << kReportSections[0] << "\n\n";
    if (r.findings.empty()) {
        md << "No findings: every current direct assessment meets the threshold.\n\n";
    } else {
        md << "| Claim | Dimension | Score | Claim text |\n|---|---|---|---|\n";
        for (const auto& f : r.findings) {
            md << "| [" << f.claim_id << "](#" << anchor(f.claim_id) << ") | " << to_string(f.dimension) << " | "
               << f.score << " | " << cell(f.excerpt) << " |\n";
        }
        md << "\n";
    }

    md << "## 2. " << kReportSections[1] << "\n\n";
    if (r.low_score_register.empty()) {
        md << "The register is empty.\n\n";
    } else {
        md << "Direct assessments only; overrides and weights do not remove entries.\n\n";
        md << "| Claim | Dimension | Score |\n|---|---|---|\n";
        for (const auto& l : r.low_score_register) {
            md << "| " << l.claim_id << " | " << to_string(l.dimension) << " | " << l.score << " |\n";
        }
        md << "\n";
    }

    md << "## 3. " << kReportSections[2] << "\n\n";
    md << "| Claim | Depth | Family | Procedural | Implementation | Source (P/I) |\n|---|---|---|---|---|---|\n";
    for (const auto& row : r.rollup) {
        md << "| <a id=\"" << anchor(row.claim_id) << "\"></a>" << row.claim_id << " | " << row.depth << " | "
           << cell(row.family) << " | " << value_cell(row.procedural) << " | " << value_cell(row.implementation)
           << " | " << to_string(row.procedural_source) << "/" << to_string(row.implementation_source) << " |\n";
    }
    md << "\n";
    if (!r.rollup_warnings.empty()) {
        md << "Notes:\n\n";
        for (const auto& w : r.rollup_warnings) md << "- " << cell(w) << "\n";
        md << "\n";
    }

    md << "## 4. " << kReportSections[3] << "\n\n";
    md << "| Evidence score | Count |\n|---|---|\n";
    static constexpr const char* kLevel[] = {"0 - missing", "1 - does not meet expectations",
                                             "2 - meets expectations", "3 - exceeds expectations"};
    for (int s = 0; s < 4; ++s) md << "| " << kLevel[s] << " | " << r.hygiene.counts[s] << " |\n";
    md << "\n";
    if (r.hygiene.below_threshold.empty()) {
        md << "No evidence scores below 2.\n\n";
    } else {
        md << "| Evidence | Score | Rule |\n|---|---|---|\n";
        for (const auto& s : r.hygiene.scores) {
            if (s.score >= kHygieneThreshold) continue;
            md << "| " << s.evidence_id << " | " << s.score << " | " << rule_for(s) << " |\n";
        }
        md << "\n";
    }

    md << "## 5. " << kReportSections[4] << "\n\n";
    if (r.lints.empty()) {
        md << "No lint findings.\n\n";
    } else {
        md << "| Severity | Rule | Location | Message |\n|---|---|---|---|\n";
        for (const auto& f : r.lints) {
            md << "| " << to_string(f.severity) << " | " << f.rule << " | " << cell(f.location) << " | "
               << cell(f.message) << " |\n";
        }
        md << "\n";
    }

    md << "## 6. " << kReportSections[5] << "\n\n";
    if (r.worklist.empty()) {
        md << "Nothing pending.\n\n";
    } else {
        int n = 0;
        for (const auto& w : r.worklist) {
            md << ++n << ". "
               << (w.kind == WorkItem::Kind::reassess_claim ? "Re-assess claim " : "Re-score evidence ") << w.id
               << "\n";
        }
        md << "\n";
    }
    md << "Substantial vs. minor changes are classified mechanically from content digests; confirm the "
          "classification before relying on it.\n\n";

    md << "## 7. " << kReportSections[6] << "\n\n";
    if (r.suggested_actions.empty()) {
        md << "None recorded.\n";
    } else {
        md << "| Location | Action |\n|---|---|\n";
        for (const auto& a : r.suggested_actions) md << "| " << cell(a.location) << " | " << cell(a.text) << " |\n";
    }
    return md.str();
}

json to_json(const AssessmentReport& r) {
    json findings = json::array();
    for (const auto& f : r.findings) {
        findings.push_back({{"claim_id", f.claim_id},
                            {"dimension", std::string(to_string(f.dimension))},
                            {"score", f.score},
                            {"excerpt", f.excerpt}});
    }
    json reg = json::array();
    for (const auto& l : r.low_score_register) {
        reg.push_back({{"claim_id", l.claim_id}, {"dimension", std::string(to_string(l.dimension))}, {"score", l.score}});
    }
    auto rat = [](const std::optional<Rational>& v) { return v ? json(to_string(*v)) : json(nullptr); };
    json rows = json::array();
    for (const auto& row : r.rollup) {
        rows.push_back({{"claim_id", row.claim_id},
                        {"depth", row.depth},
                        {"family", row.family},
                        {"procedural", rat(row.procedural)},
                        {"implementation", rat(row.implementation)},
                        {"procedural_source", std::string(to_string(row.procedural_source))},
                        {"implementation_source", std::string(to_string(row.implementation_source))}});
    }
    json lints = json::array();
    for (const auto& f : r.lints) lints.push_back(to_json(f));
    json work = json::array();
    for (const auto& w : r.worklist) work.push_back({{"kind", std::string(to_string(w.kind))}, {"id", w.id}});
    json actions = json::array();
    for (const auto& a : r.suggested_actions) actions.push_back({{"location", a.location}, {"text", a.text}});
    return {
        {"case", {{"system", r.system}, {"version", r.case_version}, {"digest", r.case_digest}}},
        {"as_of", r.as_of.str()},
        {"strategy", std::string(to_string(r.strategy))},
        {"threshold", r.threshold},
        {"findings", findings},
        {"low_score_register", reg},
        {"rollup", {{"rows", rows}, {"warnings", r.rollup_warnings}}},
        {"evidence_hygiene", to_json(r.hygiene)},
        {"lint_findings", lints},
        {"worklist", work},
        {"suggested_actions", actions},
    };
}

}  // namespace casekit
