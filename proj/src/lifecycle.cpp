#include "casekit/lifecycle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "casekit/errors.hpp"

namespace casekit {

using nlohmann::json;

std::string_view to_string(ChangeKind k) {
    switch (k) {
        case ChangeKind::claim_text: return "claim_text";
        case ChangeKind::tree_structure: return "tree_structure";
        case ChangeKind::evidence_set: return "evidence_set";
        case ChangeKind::evidence_version: return "evidence_version";
        case ChangeKind::scope: return "scope";
        case ChangeKind::narrative: return "narrative";
    }
    return "claim_text";
}

std::string_view to_string(ChangeClass c) { return c == ChangeClass::substantial ? "substantial" : "minor"; }

std::string_view to_string(TriggerKind k) {
    switch (k) {
        case TriggerKind::hardware: return "hardware";
        case TriggerKind::software: return "software";
        case TriggerKind::odd: return "odd";
        case TriggerKind::use_case: return "use_case";
    }
    return "odd";
}

std::optional<TriggerKind> trigger_kind_from(std::string_view s) {
    for (auto k : {TriggerKind::hardware, TriggerKind::software, TriggerKind::odd, TriggerKind::use_case}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::string_view to_string(WorkItem::Kind k) {
    return k == WorkItem::Kind::rescore_evidence ? "rescore_evidence" : "reassess_claim";
}

namespace {

std::string normalize_ws(std::string_view s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

/// Text-bearing fields that count as claim_text; narrative is tracked apart.
std::string claim_text_payload(const Claim& c, bool normalized) {
    auto n = [&](std::string_view s) { return normalized ? normalize_ws(s) : std::string(s); };
    json cas = json::array();
    for (const auto& ca : c.counter_arguments) {
        cas.push_back({n(ca.text), n(ca.rejection), ca.rejection_evidence});
    }
    json lims = json::array();
    for (const auto& l : c.limitations) lims.push_back(n(l));
    // Order-insensitive for the same lists content_hash sorts.
    std::vector<std::string> ca_s, lim_s;
    for (const auto& x : cas) ca_s.push_back(x.dump());
    for (const auto& x : lims) lim_s.push_back(x.dump());
    std::sort(ca_s.begin(), ca_s.end());
    std::sort(lim_s.begin(), lim_s.end());
    return json{{"text", n(c.text)}, {"counter_arguments", ca_s}, {"limitations", lim_s}}.dump();
}

std::string structure_payload(const Claim& c) {
    return json{{"parent", c.parent ? json(*c.parent) : json(nullptr)}, {"children", c.children}}.dump();
}

std::string scope_payload(const CaseScope& s) {
    return json{{"system_description", s.system_description},
                {"application", s.application},
                {"environment", s.environment},
                {"assumptions", s.assumptions}}
        .dump();
}

std::string link_payload(const SafetyCase& sc, const std::string& claim_id) {
    return json(sc.linked_evidence(claim_id)).dump();
}

}  // namespace

ChangeSet diff_cases(const SafetyCase& old_case, const SafetyCase& new_case) {
    ChangeSet cs;
    auto add = [&](ChangeKind kind, const std::string& loc, std::string old_h, std::string new_h) -> ChangeItem& {
        cs.items.push_back({kind, loc, std::move(old_h), std::move(new_h), std::nullopt, std::nullopt});
        return cs.items.back();
    };

    if (!(old_case.scope == new_case.scope)) {
        add(ChangeKind::scope, "scope", sha256_hex(scope_payload(old_case.scope)),
            sha256_hex(scope_payload(new_case.scope)));
    }

    std::set<std::string> ids;
    for (const auto& [id, _] : old_case.claims) ids.insert(id);
    for (const auto& [id, _] : new_case.claims) ids.insert(id);

    for (const auto& id : ids) {
        const Claim* o = old_case.find_claim(id);
        const Claim* n = new_case.find_claim(id);
        if (!o || !n) {
            add(ChangeKind::tree_structure, id, o ? content_hash(*o) : "", n ? content_hash(*n) : "");
            continue;
        }
        if (o->parent != n->parent) {
            add(ChangeKind::tree_structure, id, sha256_hex(structure_payload(*o)), sha256_hex(structure_payload(*n)));
        } else if (o->children != n->children) {
            // Membership changes surface as add/remove/reparent on the child;
            // only a pure reorder is reported here.
            auto a = o->children, b = n->children;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b) {
                add(ChangeKind::tree_structure, id, sha256_hex(structure_payload(*o)),
                    sha256_hex(structure_payload(*n)));
            }
        }
        const auto ot = claim_text_payload(*o, false), nt = claim_text_payload(*n, false);
        if (ot != nt) {
            auto& item = add(ChangeKind::claim_text, id, sha256_hex(ot), sha256_hex(nt));
            item.old_normalized = sha256_hex(claim_text_payload(*o, true));
            item.new_normalized = sha256_hex(claim_text_payload(*n, true));
        }
        if (o->justification_narrative != n->justification_narrative) {
            auto& item = add(ChangeKind::narrative, id, sha256_hex(o->justification_narrative),
                             sha256_hex(n->justification_narrative));
            item.old_normalized = sha256_hex(normalize_ws(o->justification_narrative));
            item.new_normalized = sha256_hex(normalize_ws(n->justification_narrative));
        }
        const auto ol = link_payload(old_case, id), nl = link_payload(new_case, id);
        if (ol != nl) add(ChangeKind::evidence_set, id, sha256_hex(ol), sha256_hex(nl));
    }

    std::set<std::string> evs;
    for (const auto& [id, _] : old_case.evidence) evs.insert(id);
    for (const auto& [id, _] : new_case.evidence) evs.insert(id);
    for (const auto& id : evs) {
        const Evidence* o = old_case.find_evidence(id);
        const Evidence* n = new_case.find_evidence(id);
        const std::string oh = o ? record_hash(*o) : "";
        const std::string nh = n ? record_hash(*n) : "";
        if (oh != nh) add(ChangeKind::evidence_version, id, oh, nh);
    }
    return cs;
}

ChangeClass classify(const ChangeItem& change) {
    switch (change.kind) {
        case ChangeKind::evidence_version: return ChangeClass::minor;
        case ChangeKind::claim_text:
        case ChangeKind::narrative:
            if (change.old_normalized && change.new_normalized && *change.old_normalized == *change.new_normalized) {
                return ChangeClass::minor;
            }
            return ChangeClass::substantial;
        case ChangeKind::tree_structure:
        case ChangeKind::evidence_set:
        case ChangeKind::scope: return ChangeClass::substantial;
    }
    return ChangeClass::substantial;
}

json to_json(const TriggerEvent& t) {
    return {{"id", t.id},
            {"kind", std::string(to_string(t.kind))},
            {"description", t.description},
            {"affected_claims", t.affected},
            {"raised_at", t.raised_at.str()}};
}

TriggerEvent trigger_from_json(const json& j) {
    try {
        TriggerEvent t;
        t.id = j.value("id", "");
        auto kind = trigger_kind_from(j.at("kind").get<std::string>());
        if (!kind) throw Error("SCHEMA_ERROR", "kind", "kind: expected hardware, software, odd or use_case");
        t.kind = *kind;
        t.description = j.value("description", "");
        t.affected = j.at("affected_claims").get<std::vector<std::string>>();
        t.raised_at = Date::parse(j.at("raised_at").get<std::string>());
        return t;
    } catch (const json::exception& e) {
        throw Error("SCHEMA_ERROR", "trigger", std::string("trigger: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error("SCHEMA_ERROR", "raised_at", std::string("raised_at: ") + e.what());
    }
}

const TriggerEvent& TriggerLog::append(TriggerEvent t) {
    if (t.affected.empty()) throw Error("EMPTY_TRIGGER", t.id, "trigger affects no claims");
    if (t.id.empty()) t.id = next_id();
    events_.push_back(std::move(t));
    return events_.back();
}

std::string TriggerLog::next_id() const { return "T-" + std::to_string(events_.size() + 1); }

TriggerLog TriggerLog::from_jsonl(std::string_view text) {
    TriggerLog log;
    std::istringstream in{std::string(text)};
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            log.events_.push_back(trigger_from_json(json::parse(line)));
        } catch (const json::parse_error&) {
            throw Error("LOG_SYNTAX", "line " + std::to_string(n), "malformed trigger log line " + std::to_string(n));
        }
    }
    return log;
}

std::string TriggerLog::to_jsonl() const {
    std::string out;
    for (const auto& t : events_) out += to_json(t).dump() + "\n";
    return out;
}

TriggerLog TriggerLog::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::stringstream ss;
    ss << in.rdbuf();
    return from_jsonl(ss.str());
}

void TriggerLog::append_to_file(const std::filesystem::path& path, std::size_t from) const {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw Error("IO_ERROR", path.string(), "cannot open '" + path.string() + "' for append");
    for (std::size_t i = from; i < events_.size(); ++i) out << to_json(events_[i]).dump() << "\n";
}

std::vector<std::string> resolve_trigger(const SafetyCase& sc, const TriggerEvent& t) {
    if (t.affected.empty()) throw Error("EMPTY_TRIGGER", t.id, "trigger affects no claims");
    std::set<std::string> out;
    for (const auto& ref : t.affected) {
        if (sc.find_claim(ref)) {
            out.insert(ref);
            continue;
        }
        bool family = false;
        for (const auto& [id, c] : sc.claims) {
            if (c.family == ref) {
                out.insert(id);
                family = true;
            }
        }
        if (!family) throw Error("UNKNOWN_CLAIM", ref, "trigger references unknown claim or family '" + ref + "'");
    }
    return {out.begin(), out.end()};
}

std::vector<std::string> affected_claims(const ChangeItem& change, const SafetyCase& old_case,
                                         const SafetyCase& new_case) {
    if (classify(change) == ChangeClass::minor) return {};
    std::set<std::string> out;
    if (change.kind == ChangeKind::scope) {
        for (const auto& [id, _] : old_case.claims) out.insert(id);
        for (const auto& [id, _] : new_case.claims) out.insert(id);
        return {out.begin(), out.end()};
    }
    for (const SafetyCase* sc : {&old_case, &new_case}) {
        if (!sc->find_claim(change.location)) continue;
        out.insert(change.location);
        for (auto& a : sc->ancestors(change.location)) out.insert(std::move(a));
    }
    return {out.begin(), out.end()};
}

StaleResult mark_stale(AssessmentLog& log, const SafetyCase& old_case, const SafetyCase& new_case,
                       const ChangeSet& changes, const std::vector<TriggerEvent>& triggers) {
    StaleResult result;
    result.case_version = new_case.version;

    std::map<std::string, std::string> reasons;  // claim -> first reason
    std::set<std::string> rescore;
    for (const auto& item : changes.items) {
        if (item.kind == ChangeKind::evidence_version) {
            if (new_case.find_evidence(item.location)) rescore.insert(item.location);
            continue;
        }
        for (const auto& id : affected_claims(item, old_case, new_case)) {
            reasons.emplace(id, std::string(to_string(item.kind)) + " change at " + item.location);
        }
    }
    for (const auto& t : triggers) {
        for (const auto& id : resolve_trigger(new_case, t)) {
            const std::string why = std::string(to_string(t.kind)) + " trigger " + t.id;
            reasons.emplace(id, why);
            for (const auto& a : new_case.ancestors(id)) reasons.emplace(a, why);
        }
    }

    const auto current = log.current();
    for (const auto& [id, why] : reasons) {
        auto it = current.find(id);
        if (it == current.end() || it->second.stale) continue;
        log.append_stale_mark({id, why, new_case.version});
        result.stale_claims.push_back(id);
    }

    for (const auto& ev : rescore) result.worklist.push_back({WorkItem::Kind::rescore_evidence, ev});
    for (const auto& id : traverse(new_case, TraversalOrder::post)) {
        if (reasons.count(id)) result.worklist.push_back({WorkItem::Kind::reassess_claim, id});
    }
    return result;
}

StaleResult pending_reassessment(const SafetyCase& sc, const AssessmentSet& assessments) {
    StaleResult result;
    result.case_version = sc.version;
    for (const auto& id : traverse(sc, TraversalOrder::post)) {
        auto it = assessments.find(id);
        if (it != assessments.end() && it->second.stale) {
            result.worklist.push_back({WorkItem::Kind::reassess_claim, id});
        }
    }
    return result;
}

json to_json(const ChangeItem& c) {
    return {{"kind", std::string(to_string(c.kind))},
            {"location", c.location},
            {"old_hash", c.old_hash},
            {"new_hash", c.new_hash},
            {"class", std::string(to_string(classify(c)))}};
}

json to_json(const StaleResult& r) {
    json work = json::array();
    for (const auto& w : r.worklist) work.push_back({{"kind", std::string(to_string(w.kind))}, {"id", w.id}});
    return {{"case_version", r.case_version}, {"stale_claims", r.stale_claims}, {"worklist", work}};
}

}  // namespace casekit
