#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casekit/assessment.hpp"
#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

enum class ChangeKind { claim_text, tree_structure, evidence_set, evidence_version, scope, narrative };
enum class ChangeClass { substantial, minor };

std::string_view to_string(ChangeKind k);
std::string_view to_string(ChangeClass c);

struct ChangeItem {
    ChangeKind kind;
    std::string location;  // claim id, evidence id, or "scope"
    std::string old_hash;  // empty when the item did not exist
    std::string new_hash;
    /// For text edits: digests after whitespace normalization. Equal digests
    /// mean the edit only touched whitespace.
    std::optional<std::string> old_normalized;
    std::optional<std::string> new_normalized;

    friend bool operator==(const ChangeItem&, const ChangeItem&) = default;
};

struct ChangeSet {
    std::vector<ChangeItem> items;

    bool empty() const { return items.empty(); }
};

/// Compares two case versions by content digest. Claims added, removed,
/// reparented or with reordered children give tree_structure; text, limitation
/// and counter-argument edits give claim_text; narrative edits give narrative;
/// link changes give evidence_set (at the claim); any change to a library
/// record gives evidence_version (at the evidence id); scope edits give scope.
ChangeSet diff_cases(const SafetyCase& old_case, const SafetyCase& new_case);

/// Mechanical proxy for "does this change the argument": whitespace-only text
/// edits and evidence record updates are minor, everything else substantial.
ChangeClass classify(const ChangeItem& change);

enum class TriggerKind { hardware, software, odd, use_case };

std::string_view to_string(TriggerKind k);
std::optional<TriggerKind> trigger_kind_from(std::string_view s);

/// A user-declared external change. `affected` entries are claim ids or
/// family tags.
struct TriggerEvent {
    std::string id;
    TriggerKind kind = TriggerKind::odd;
    std::string description;
    std::vector<std::string> affected;
    Date raised_at;

    friend bool operator==(const TriggerEvent&, const TriggerEvent&) = default;
};

nlohmann::json to_json(const TriggerEvent& t);
TriggerEvent trigger_from_json(const nlohmann::json& j);

/// Append-only JSON-lines trigger log.
class TriggerLog {
public:
    const std::vector<TriggerEvent>& events() const { return events_; }
    const TriggerEvent& append(TriggerEvent t);
    std::string next_id() const;

    static TriggerLog from_jsonl(std::string_view text);
    std::string to_jsonl() const;
    static TriggerLog load(const std::filesystem::path& path);
    void append_to_file(const std::filesystem::path& path, std::size_t from) const;

private:
    std::vector<TriggerEvent> events_;
};

/// Resolves claim ids and family tags. Throws Error(UNKNOWN_CLAIM) for an
/// entry that is neither, and Error(EMPTY_TRIGGER) for an empty list.
std::vector<std::string> resolve_trigger(const SafetyCase& sc, const TriggerEvent& t);

struct WorkItem {
    enum class Kind { rescore_evidence, reassess_claim };
    Kind kind;
    std::string id;

    friend bool operator==(const WorkItem&, const WorkItem&) = default;
};

std::string_view to_string(WorkItem::Kind k);

struct StaleResult {
    std::int64_t case_version = 0;
    std::vector<std::string> stale_claims;  // assessments newly marked stale, sorted
    /// Evidence re-scoring first, then claims to re-assess in post-order
    /// (root last). No duplicates.
    std::vector<WorkItem> worklist;

    friend bool operator==(const StaleResult&, const StaleResult&) = default;
};

/// Claims whose assessments a change invalidates: the changed claim and its
/// ancestors, in both the old and the new tree. Scope changes reach every
/// claim. Empty for minor changes.
std::vector<std::string> affected_claims(const ChangeItem& change, const SafetyCase& old_case,
                                         const SafetyCase& new_case);

/// Appends stale marks to `log` for every current, non-stale assessment
/// touched by a substantial change or a trigger, and builds the worklist.
/// Minor evidence changes only enqueue re-scoring. Must be serialized with
/// record_assessment.
StaleResult mark_stale(AssessmentLog& log, const SafetyCase& old_case, const SafetyCase& new_case,
                       const ChangeSet& changes, const std::vector<TriggerEvent>& triggers);

/// Worklist for assessments already marked stale in `assessments`, in
/// post-order. Used when no diff is being applied.
StaleResult pending_reassessment(const SafetyCase& sc, const AssessmentSet& assessments);

nlohmann::json to_json(const ChangeItem& c);
nlohmann::json to_json(const StaleResult& r);

}  // namespace casekit
