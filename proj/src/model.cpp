#include "casekit/model.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <set>

#include "casekit/errors.hpp"
#include "json.hpp"

namespace casekit {

using nlohmann::json;

std::string_view to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::drafted: return "drafted";
        case ClaimStatus::evidence_collected: return "evidence_collected";
        case ClaimStatus::narrated: return "narrated";
        case ClaimStatus::assessed: return "assessed";
    }
    return "drafted";
}

std::string_view to_string(EvidenceKind k) {
    return k == EvidenceKind::procedural ? "procedural" : "implementation";
}

std::optional<ClaimStatus> claim_status_from(std::string_view s) {
    for (auto v : {ClaimStatus::drafted, ClaimStatus::evidence_collected, ClaimStatus::narrated,
                   ClaimStatus::assessed}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

std::optional<EvidenceKind> evidence_kind_from(std::string_view s) {
    if (s == "procedural") return EvidenceKind::procedural;
    if (s == "implementation") return EvidenceKind::implementation;
    return std::nullopt;
}

const Claim* SafetyCase::find_claim(std::string_view id) const {
    auto it = claims.find(std::string(id));
    return it == claims.end() ? nullptr : &it->second;
}

const Evidence* SafetyCase::find_evidence(std::string_view id) const {
    auto it = evidence.find(std::string(id));
    return it == evidence.end() ? nullptr : &it->second;
}

std::optional<std::string> SafetyCase::root_id() const {
    std::optional<std::string> root;
    for (const auto& [id, c] : claims) {
        if (!c.parent) {
            if (root) return std::nullopt;
            root = id;
        }
    }
    return root;
}

std::vector<std::string> SafetyCase::linked_evidence(std::string_view claim_id) const {
    std::set<std::string> ids;
    for (const auto& l : links) {
        if (l.claim_id == claim_id) ids.insert(l.evidence_id);
    }
    return {ids.begin(), ids.end()};
}

std::vector<std::string> SafetyCase::ancestors(std::string_view claim_id) const {
    std::vector<std::string> out;
    const Claim* c = find_claim(claim_id);
    std::set<std::string> seen{std::string(claim_id)};
    while (c && c->parent) {
        if (!seen.insert(*c->parent).second) break;  // cycle guard
        out.push_back(*c->parent);
        c = find_claim(*c->parent);
    }
    return out;
}

std::vector<EvidenceLink> SafetyCase::sorted_links() const {
    auto out = links;
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const SafetyCase& a, const SafetyCase& b) {
    return a.version == b.version && a.scope == b.scope && a.claims == b.claims &&
           a.evidence == b.evidence && a.sorted_links() == b.sorted_links();
}

SafetyCase amend(const SafetyCase& base, const std::function<void(SafetyCase&)>& edit) {
    SafetyCase next = base;
    edit(next);
    next.version = base.version + 1;
    return next;
}

bool ValidationReport::has(std::string_view code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
}

namespace {

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

}  // namespace

ValidationReport validate_case(const SafetyCase& sc) {
    ValidationReport report;
    auto add = [&](std::string code, std::string location, std::string message) {
        report.violations.push_back({std::move(code), std::move(location), std::move(message)});
    };

    if (sc.version < 1) add("INVALID_VERSION", "version", "version must be >= 1");
    if (blank(sc.scope.system_description))
        add("EMPTY_SCOPE_FIELD", "scope.system_description", "system description is empty");
    if (blank(sc.scope.application)) add("EMPTY_SCOPE_FIELD", "scope.application", "application is empty");
    if (blank(sc.scope.environment)) add("EMPTY_SCOPE_FIELD", "scope.environment", "environment is empty");

    std::vector<std::string> roots;
    for (const auto& [key, c] : sc.claims) {
        if (c.id != key) add("ID_MISMATCH", key, "claim keyed as '" + key + "' carries id '" + c.id + "'");
        if (c.id.empty()) add("EMPTY_ID", key, "claim id is empty");
        if (blank(c.text)) add("EMPTY_CLAIM_TEXT", key, "claim text is empty");
        if (!c.parent) {
            roots.push_back(key);
        } else if (const Claim* p = sc.find_claim(*c.parent); !p) {
            add("UNKNOWN_PARENT", key, "parent '" + *c.parent + "' does not exist");
        } else if (std::count(p->children.begin(), p->children.end(), key) != 1) {
            add("PARENT_CHILD_MISMATCH", key, "parent '" + *c.parent + "' does not list this claim exactly once");
        }
        std::set<std::string> seen;
        for (const auto& child : c.children) {
            if (!seen.insert(child).second) {
                add("DUPLICATE_CHILD", key, "child '" + child + "' listed twice");
                continue;
            }
            const Claim* ch = sc.find_claim(child);
            if (!ch) {
                add("UNKNOWN_CHILD", key, "child '" + child + "' does not exist");
            } else if (ch->parent != key) {
                add("PARENT_CHILD_MISMATCH", child, "listed as child of '" + key + "' but parent differs");
            }
        }
        for (std::size_t i = 0; i < c.counter_arguments.size(); ++i) {
            const auto& ca = c.counter_arguments[i];
            const std::string loc = key + ".counter_arguments[" + std::to_string(i) + "]";
            if (ca.text.empty()) add("EMPTY_COUNTER_ARGUMENT", loc, "counter-argument text is empty");
            if (c.status == ClaimStatus::assessed && ca.rejection.empty())
                add("UNREJECTED_COUNTER_ARGUMENT", loc, "finalized claim retains a counter-argument without rejection");
            for (const auto& ev : ca.rejection_evidence) {
                if (!sc.find_evidence(ev))
                    add("DANGLING_REJECTION_EVIDENCE", loc, "rejection evidence '" + ev + "' does not exist");
            }
        }
    }

    if (roots.empty() && !sc.claims.empty()) add("NO_ROOT", "claims", "no parentless root claim");
    if (sc.claims.empty()) add("NO_ROOT", "claims", "case has no claims");
    if (roots.size() > 1) {
        for (const auto& r : roots) add("MULTIPLE_ROOTS", r, "more than one parentless claim");
    }

    // Parent chains that never reach a root. Reported once per cycle, at its smallest id.
    std::set<std::string> on_cycle;
    for (const auto& [key, c] : sc.claims) {
        std::vector<std::string> chain{key};
        std::set<std::string> seen{key};
        const Claim* at = &c;
        while (at->parent) {
            const Claim* up = sc.find_claim(*at->parent);
            if (!up) break;
            if (!seen.insert(*at->parent).second) {
                auto start = std::find(chain.begin(), chain.end(), *at->parent);
                auto smallest = *std::min_element(start, chain.end());
                if (on_cycle.insert(smallest).second) add("CYCLE", smallest, "parent chain loops back on itself");
                break;
            }
            chain.push_back(*at->parent);
            at = up;
        }
    }

    // Reachability from the root catches cycles detached from it.
    if (roots.size() == 1) {
        std::set<std::string> visited;
        std::vector<std::string> stack{roots.front()};
        while (!stack.empty()) {
            auto id = stack.back();
            stack.pop_back();
            if (!visited.insert(id).second) {
                add("CYCLE", id, "claim reached twice while walking the tree");
                continue;
            }
            if (const Claim* c = sc.find_claim(id)) {
                for (const auto& ch : c->children) {
                    if (sc.find_claim(ch)) stack.push_back(ch);
                }
            }
        }
        for (const auto& [key, c] : sc.claims) {
            if (!visited.count(key)) add("UNREACHABLE", key, "claim is not reachable from the root");
        }
    }

    for (const auto& [key, e] : sc.evidence) {
        if (e.id != key) add("ID_MISMATCH", key, "evidence keyed as '" + key + "' carries id '" + e.id + "'");
        if (!e.exists) {
            if (e.last_review || e.active_confirmed || e.flagged_major_revision || e.partially_outdated_flagged ||
                e.revision_history_documented || e.approvals_documented || e.controlled_environment ||
                e.owner_affiliated) {
                add("MISSING_EVIDENCE_HAS_STATUS", key, "missing evidence carries review or control status");
            }
        }
        if (e.last_review && *e.last_review < e.created)
            add("REVIEW_BEFORE_CREATED", key, "last_review precedes created");
    }

    std::set<std::pair<std::string, std::string>> link_keys;
    for (const auto& l : sc.sorted_links()) {
        const std::string loc = l.claim_id + "->" + l.evidence_id;
        if (!sc.find_claim(l.claim_id)) add("DANGLING_LINK", loc, "link references unknown claim '" + l.claim_id + "'");
        if (!sc.find_evidence(l.evidence_id))
            add("DANGLING_LINK", loc, "link references unknown evidence '" + l.evidence_id + "'");
        if (!link_keys.insert({l.claim_id, l.evidence_id}).second) add("DUPLICATE_LINK", loc, "link listed twice");
    }
    return report;
}

std::vector<std::string> traverse(const SafetyCase& sc, TraversalOrder order) {
    auto root = sc.root_id();
    if (!root) throw Error("INVALID_TREE", "claims", "case does not have exactly one root claim");

    std::vector<std::string> out;
    std::set<std::string> visited;
    // Explicit stack: (claim, next child index).
    std::vector<std::pair<const Claim*, std::size_t>> stack;
    auto enter = [&](const std::string& id) {
        const Claim* c = sc.find_claim(id);
        if (!c) throw Error("INVALID_TREE", id, "unknown claim '" + id + "' in child list");
        if (!visited.insert(id).second) throw Error("INVALID_TREE", id, "cycle or shared child at '" + id + "'");
        if (order == TraversalOrder::pre) out.push_back(id);
        stack.emplace_back(c, 0);
    };
    enter(*root);
    while (!stack.empty()) {
        auto& [c, next] = stack.back();
        if (next < c->children.size()) {
            const std::string& child = c->children[next++];
            enter(child);
        } else {
            if (order == TraversalOrder::post) out.push_back(c->id);
            stack.pop_back();
        }
    }
    if (out.size() != sc.claims.size())
        throw Error("INVALID_TREE", "claims", "claims unreachable from the root");
    return out;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xf]);
    }
    return out;
}

namespace {

std::vector<std::string> sorted_by_digest(std::vector<std::pair<std::string, std::string>> items) {
    // (digest, payload); ties broken by payload for total order.
    std::sort(items.begin(), items.end());
    std::vector<std::string> out;
    out.reserve(items.size());
    for (auto& [d, _] : items) out.push_back(std::move(d));
    return out;
}

}  // namespace

std::string content_hash(const Claim& claim) {
    std::vector<std::pair<std::string, std::string>> cas;
    for (const auto& ca : claim.counter_arguments) {
        json j = {{"text", ca.text}, {"rejection", ca.rejection}, {"rejection_evidence", ca.rejection_evidence}};
        auto s = j.dump();
        cas.emplace_back(sha256_hex(s), s);
    }
    std::vector<std::pair<std::string, std::string>> lims;
    for (const auto& l : claim.limitations) lims.emplace_back(sha256_hex(l), l);

    json j = {
        {"text", claim.text},
        {"children", claim.children},
        {"counter_arguments", sorted_by_digest(std::move(cas))},
        {"limitations", sorted_by_digest(std::move(lims))},
        {"justification_narrative", claim.justification_narrative},
    };
    return sha256_hex("claim\n" + j.dump());
}

std::string content_hash(const Evidence& ev) {
    json j = {{"title", ev.title}, {"kind", std::string(to_string(ev.kind))}, {"uri", ev.uri}};
    return sha256_hex("evidence\n" + j.dump());
}

std::string record_hash(const Evidence& ev) {
    json j = {
        {"id", ev.id},
        {"title", ev.title},
        {"kind", std::string(to_string(ev.kind))},
        {"uri", ev.uri},
        {"owner", ev.owner ? json{{"name", ev.owner->name}, {"active", ev.owner->active}} : json(nullptr)},
        {"owner_affiliated", ev.owner_affiliated},
        {"created", ev.created.str()},
        {"last_review", ev.last_review ? json(ev.last_review->str()) : json(nullptr)},
        {"active_confirmed", ev.active_confirmed},
        {"flagged_major_revision", ev.flagged_major_revision},
        {"partially_outdated_flagged", ev.partially_outdated_flagged},
        {"revision_history_documented", ev.revision_history_documented},
        {"approvals_documented", ev.approvals_documented},
        {"controlled_environment", ev.controlled_environment},
        {"exists", ev.exists},
    };
    return sha256_hex("evidence-record\n" + j.dump());
}

}  // namespace casekit
