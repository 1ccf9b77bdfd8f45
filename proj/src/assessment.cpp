#include "casekit/assessment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "casekit/case_io.hpp"

namespace casekit {

using nlohmann::json;

std::string_view to_string(Dimension d) { return d == Dimension::procedural ? "procedural" : "implementation"; }

std::optional<Dimension> dimension_from(std::string_view s) {
    if (s == "procedural") return Dimension::procedural;
    if (s == "implementation") return Dimension::implementation;
    return std::nullopt;
}

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
    throw AssessmentError("INVARIANT_VIOLATION", field, field + ": " + what);
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const ClaimAssessment& a) {
    return {
        {"claim_id", a.claim_id},
        {"procedural", opt_int(a.procedural)},
        {"implementation", opt_int(a.implementation)},
        {"procedural_na", a.procedural_na},
        {"implementation_na", a.implementation_na},
        {"na_justification", a.na_justification},
        {"summary", a.summary},
        {"assessors", a.assessors},
        {"assessed_at", a.assessed_at.str()},
        {"case_version", a.case_version},
        {"stale", a.stale},
    };
}

ClaimAssessment assessment_from_json(const json& j) {
    if (!j.is_object()) invalid("record", "expected an object");
    ClaimAssessment a;
    auto str = [&](const char* key, bool required) -> std::string {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) {
            if (required) invalid(key, "missing required field");
            return {};
        }
        if (!it->is_string()) invalid(key, "expected a string");
        return it->get<std::string>();
    };
    auto score = [&](const char* key) -> std::optional<int> {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        if (!it->is_number_integer()) invalid(key, "expected an integer 0..3");
        return it->get<int>();
    };
    auto flag = [&](const char* key) {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return false;
        if (!it->is_boolean()) invalid(key, "expected a boolean");
        return it->get<bool>();
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::vector<std::string> known = {
            "claim_id", "procedural", "implementation", "procedural_na", "implementation_na", "na_justification",
            "summary",  "assessors",  "assessor",       "assessed_at",   "case_version",      "stale"};
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) invalid(it.key(), "unknown field");
    }
    a.claim_id = str("claim_id", true);
    a.procedural = score("procedural");
    a.implementation = score("implementation");
    a.procedural_na = flag("procedural_na");
    a.implementation_na = flag("implementation_na");
    a.na_justification = str("na_justification", false);
    a.summary = str("summary", false);
    if (auto it = j.find("assessors"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) invalid("assessors", "expected an array of names");
        for (const auto& n : *it) {
            if (!n.is_string()) invalid("assessors", "expected an array of names");
            a.assessors.push_back(n.get<std::string>());
        }
    }
    if (auto single = str("assessor", false); !single.empty()) a.assessors.push_back(single);
    try {
        a.assessed_at = Date::parse(str("assessed_at", true));
    } catch (const std::invalid_argument& e) {
        invalid("assessed_at", e.what());
    }
    auto cv = j.find("case_version");
    if (cv == j.end() || !cv->is_number_integer()) invalid("case_version", "expected an integer");
    a.case_version = cv->get<std::int64_t>();
    a.stale = flag("stale");
    return a;
}

void check_assessment(const SafetyCase& sc, const ClaimAssessment& rec) {
    const Claim* claim = sc.find_claim(rec.claim_id);
    if (!claim) throw AssessmentError("UNKNOWN_CLAIM", rec.claim_id, "unknown claim '" + rec.claim_id + "'");

    for (auto d : {Dimension::procedural, Dimension::implementation}) {
        const std::string field(to_string(d));
        auto s = rec.score(d);
        if (s && (*s < 0 || *s > 3)) invalid(field, "score must be within 0..3");
        if (s.has_value() == rec.na(d)) invalid(field, "exactly one of a score or the N/A flag is required");
    }
    if ((rec.procedural_na || rec.implementation_na) && blank(rec.na_justification)) {
        invalid("na_justification", "an N/A dimension requires a justification");
    }
    if (blank(rec.summary)) invalid("summary", "a summary of the scoring rationale is required");
    if (rec.assessors.empty() ||
        std::any_of(rec.assessors.begin(), rec.assessors.end(), [](const auto& n) { return blank(n); })) {
        invalid("assessors", "at least one named assessor is required");
    }
    if (claim->poc && std::find(rec.assessors.begin(), rec.assessors.end(), claim->poc->name) != rec.assessors.end()) {
        throw AssessmentError("SELF_ASSESSMENT", rec.claim_id,
                              "assessor '" + claim->poc->name + "' is the claim's point of contact");
    }
    if (rec.case_version != sc.version) {
        throw AssessmentError("STALE_VERSION", rec.claim_id,
                              "record judges case version " + std::to_string(rec.case_version) +
                                  " but the case is at version " + std::to_string(sc.version));
    }
}

const ClaimAssessment& record_assessment(const SafetyCase& sc, AssessmentLog& log, ClaimAssessment rec) {
    check_assessment(sc, rec);
    rec.stale = false;
    return log.append(std::move(rec));
}

const ClaimAssessment& AssessmentLog::append(ClaimAssessment rec) {
    entries_.push_back({head() + 1, std::move(rec)});
    return std::get<ClaimAssessment>(entries_.back().body);
}

void AssessmentLog::append_stale_mark(StaleMark mark) { entries_.push_back({head() + 1, std::move(mark)}); }

AssessmentSet AssessmentLog::current() const {
    AssessmentSet out;
    for (const auto& e : entries_) {
        if (const auto* a = std::get_if<ClaimAssessment>(&e.body)) {
            out[a->claim_id] = *a;
            out[a->claim_id].stale = false;
        } else {
            const auto& m = std::get<StaleMark>(e.body);
            if (auto it = out.find(m.claim_id); it != out.end()) it->second.stale = true;
        }
    }
    return out;
}

std::vector<ClaimAssessment> AssessmentLog::history(std::string_view claim_id) const {
    std::vector<ClaimAssessment> out;
    for (const auto& e : entries_) {
        if (const auto* a = std::get_if<ClaimAssessment>(&e.body); a && a->claim_id == claim_id) out.push_back(*a);
    }
    return out;
}

std::string AssessmentLog::entry_line(const LogEntry& e) {
    json j;
    j["seq"] = e.seq;
    if (const auto* a = std::get_if<ClaimAssessment>(&e.body)) {
        j["type"] = "assessment";
        j["record"] = to_json(*a);
    } else {
        const auto& m = std::get<StaleMark>(e.body);
        j["type"] = "stale_mark";
        j["record"] = {{"claim_id", m.claim_id}, {"reason", m.reason}, {"case_version", m.case_version}};
    }
    return j.dump() + "\n";
}

std::string AssessmentLog::to_jsonl() const {
    std::string out;
    for (const auto& e : entries_) out += entry_line(e);
    return out;
}

AssessmentLog AssessmentLog::from_jsonl(std::string_view text) {
    AssessmentLog log;
    std::size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const std::string where = "line " + std::to_string(line_no);
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error&) {
            throw Error("LOG_SYNTAX", where, "malformed assessment log entry at " + where);
        }
        try {
            const auto type = j.value("type", "");
            const auto& rec = j.at("record");
            if (type == "assessment") {
                log.entries_.push_back({log.head() + 1, assessment_from_json(rec)});
            } else if (type == "stale_mark") {
                log.entries_.push_back({log.head() + 1, StaleMark{rec.at("claim_id").get<std::string>(),
                                                                 rec.value("reason", ""),
                                                                 rec.value("case_version", std::int64_t{0})}});
            } else {
                throw Error("LOG_SYNTAX", where, "unknown entry type '" + type + "' at " + where);
            }
        } catch (const json::exception& e) {
            throw Error("LOG_SYNTAX", where, "malformed assessment log entry at " + where + ": " + e.what());
        }
        if (j.value("seq", std::int64_t{0}) != log.head()) {
            throw Error("LOG_SEQUENCE", where, "entry sequence number out of order at " + where);
        }
    }
    return log;
}

AssessmentLog AssessmentLog::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::stringstream ss;
    ss << in.rdbuf();
    return from_jsonl(ss.str());
}

void AssessmentLog::append_to_file(const std::filesystem::path& path, std::int64_t from) const {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw Error("IO_ERROR", path.string(), "cannot open '" + path.string() + "' for append");
    for (auto i = static_cast<std::size_t>(std::max<std::int64_t>(from, 0)); i < entries_.size(); ++i) {
        out << entry_line(entries_[i]);
    }
    if (!out) throw Error("IO_ERROR", path.string(), "write to '" + path.string() + "' failed");
}

std::vector<Prompt> assessment_prompts(const SafetyCase& sc, std::string_view claim_id) {
    const Claim* c = sc.find_claim(claim_id);
    if (!c) throw AssessmentError("UNKNOWN_CLAIM", std::string(claim_id), "unknown claim '" + std::string(claim_id) + "'");
    std::vector<Prompt> out;
    out.push_back({"narrative",
                   "Start from the justification narrative: which evidence and sub-claims does it lean on, and why?"});
    out.push_back({"coverage",
                   "Coverage: which aspects of the claim (none, some, the core ones, or the whole claim) are addressed "
                   "by the linked evidence and sub-claims?"});
    out.push_back({"relevance", "Relevance: does each linked item apply to this claim as it is actually worded?"});
    out.push_back({"governance",
                   "Governance: what oversight applies to the processes behind the evidence, and is it tied to "
                   "company-level objectives?"});
    if (sc.linked_evidence(claim_id).size() >= 2) {
        out.push_back({"consistency",
                       "Consistency: do the linked evidence items agree with each other? Record any discrepancy or "
                       "contradiction that weakens the argument."});
    }
    if (!c->children.empty()) {
        out.push_back({"conservativeness",
                       "Child claims: how much does this claim rest on each child? Weigh weak children "
                       "conservatively rather than averaging them away."});
    }
    if (!c->counter_arguments.empty()) {
        out.push_back({"counter_arguments",
                       "Counter-arguments: is each one answered by a rejection with a stated rationale or evidence?"});
    }
    out.push_back({"weaknesses", "Does the argument acknowledge and address its own potential weaknesses?"});
    out.push_back({"not_applicable",
                   "If a dimension does not apply to this claim, mark it N/A and record the justification."});
    return out;
}

}  // namespace casekit
