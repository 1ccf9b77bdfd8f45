#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casekit/date.hpp"

namespace casekit {

/// Opaque person reference. No org-chart modeling.
struct Person {
    std::string name;
    bool active = true;

    friend bool operator==(const Person&, const Person&) = default;
};

enum class ClaimStatus { drafted, evidence_collected, narrated, assessed };
enum class EvidenceKind { procedural, implementation };

std::string_view to_string(ClaimStatus s);
std::string_view to_string(EvidenceKind k);
std::optional<ClaimStatus> claim_status_from(std::string_view s);
std::optional<EvidenceKind> evidence_kind_from(std::string_view s);

/// System, use-case and operating environment the case is bounded by.
struct CaseScope {
    std::string system_description;
    std::string application;
    std::string environment;
    std::vector<std::string> assumptions;

    friend bool operator==(const CaseScope&, const CaseScope&) = default;
};

/// A defeater raised against a claim and the rejection that answers it.
/// An empty rejection means the counter-argument is still open.
struct CounterArgument {
    std::string text;
    std::string rejection;
    std::vector<std::string> rejection_evidence;

    friend bool operator==(const CounterArgument&, const CounterArgument&) = default;
};

struct Claim {
    std::string id;
    std::string text;
    std::optional<std::string> parent;
    std::vector<std::string> children;  // ordered; order is part of the argument
    std::optional<std::string> family;  // radar spoke grouping
    std::optional<Person> poc;
    std::vector<CounterArgument> counter_arguments;
    std::vector<std::string> limitations;
    std::string justification_narrative;
    ClaimStatus status = ClaimStatus::drafted;

    friend bool operator==(const Claim&, const Claim&) = default;
};

struct Evidence {
    std::string id;
    std::string title;
    EvidenceKind kind = EvidenceKind::procedural;
    std::string uri;
    std::optional<Person> owner;
    bool owner_affiliated = false;
    Date created;
    std::optional<Date> last_review;
    bool active_confirmed = false;
    bool flagged_major_revision = false;
    bool partially_outdated_flagged = false;
    bool revision_history_documented = false;
    bool approvals_documented = false;
    bool controlled_environment = false;
    bool exists = true;  // false: confirmed-missing placeholder

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct EvidenceLink {
    std::string claim_id;
    std::string evidence_id;
    std::string note;

    friend bool operator==(const EvidenceLink&, const EvidenceLink&) = default;
    friend auto operator<=>(const EvidenceLink& a, const EvidenceLink& b) {
        if (auto c = a.claim_id <=> b.claim_id; c != 0) return c;
        if (auto c = a.evidence_id <=> b.evidence_id; c != 0) return c;
        return a.note <=> b.note;
    }
};

/// A safety case snapshot. Claims and evidence are keyed by id; links are kept
/// in insertion order but compared and serialized in sorted order.
struct SafetyCase {
    CaseScope scope;
    std::map<std::string, Claim> claims;
    std::map<std::string, Evidence> evidence;
    std::vector<EvidenceLink> links;
    std::int64_t version = 1;

    const Claim* find_claim(std::string_view id) const;
    const Evidence* find_evidence(std::string_view id) const;

    /// Id of the unique parentless claim, if exactly one exists.
    std::optional<std::string> root_id() const;

    /// Evidence ids linked to `claim_id`, sorted, without duplicates.
    std::vector<std::string> linked_evidence(std::string_view claim_id) const;

    /// Claim ids from `claim_id`'s parent up to the root (nearest first).
    std::vector<std::string> ancestors(std::string_view claim_id) const;

    std::vector<EvidenceLink> sorted_links() const;

    friend bool operator==(const SafetyCase& a, const SafetyCase& b);
};

/// Copy-on-write mutation: the result carries version + 1.
SafetyCase amend(const SafetyCase& base, const std::function<void(SafetyCase&)>& edit);

struct Violation {
    std::string code;
    std::string location;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(std::string_view code) const;
};

/// Checks every structural invariant. Violations are data, never thrown.
ValidationReport validate_case(const SafetyCase& sc);

enum class TraversalOrder { pre, post };

/// Depth-first walk from the root following child order. Throws Error
/// (INVALID_TREE) when the claims do not form a single rooted tree.
std::vector<std::string> traverse(const SafetyCase& sc, TraversalOrder order);

/// SHA-256 (hex) over the semantic content only: text, child ids,
/// counter-arguments, limitations and narrative. Counter-argument and
/// limitation lists are sorted by their own digest first, so reordering them
/// does not change the hash. Status, POC and family are excluded.
std::string content_hash(const Claim& claim);

/// SHA-256 (hex) over title, kind and uri. Review and control metadata excluded.
std::string content_hash(const Evidence& ev);

/// SHA-256 (hex) over every field of the record, including review metadata.
std::string record_hash(const Evidence& ev);

std::string sha256_hex(std::string_view data);

}  // namespace casekit
