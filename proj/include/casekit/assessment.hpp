#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casekit/errors.hpp"
#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

enum class Dimension { procedural = 0, implementation = 1 };

std::string_view to_string(Dimension d);
std::optional<Dimension> dimension_from(std::string_view s);

/// A human judgment of how well one claim is supported, on both rubric
/// dimensions. Each dimension holds either a 0..3 score or an N/A flag.
struct ClaimAssessment {
    std::string claim_id;
    std::optional<int> procedural;
    std::optional<int> implementation;
    bool procedural_na = false;
    bool implementation_na = false;
    std::string na_justification;
    std::string summary;
    std::vector<std::string> assessors;  // more than one for a group consensus record
    Date assessed_at;
    std::int64_t case_version = 0;
    bool stale = false;

    std::optional<int> score(Dimension d) const { return d == Dimension::procedural ? procedural : implementation; }
    bool na(Dimension d) const { return d == Dimension::procedural ? procedural_na : implementation_na; }

    friend bool operator==(const ClaimAssessment&, const ClaimAssessment&) = default;
};

/// Latest assessment per claim id.
using AssessmentSet = std::map<std::string, ClaimAssessment>;

/// Raised by record_assessment. code() is one of UNKNOWN_CLAIM, STALE_VERSION,
/// INVARIANT_VIOLATION, SELF_ASSESSMENT; location() is the claim id or, for
/// invariant violations, the offending field path.
class AssessmentError : public Error {
public:
    using Error::Error;
};

struct StaleMark {
    std::string claim_id;
    std::string reason;
    std::int64_t case_version = 0;

    friend bool operator==(const StaleMark&, const StaleMark&) = default;
};

struct LogEntry {
    std::int64_t seq = 0;
    std::variant<ClaimAssessment, StaleMark> body;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// Append-only assessment log. Records are never edited: a newer assessment
/// supersedes an older one, and staleness is a separate mark entry.
/// Persisted as JSON lines, one entry per line.
class AssessmentLog {
public:
    const std::vector<LogEntry>& entries() const { return entries_; }

    /// Number of entries; used as the optimistic-concurrency version.
    std::int64_t head() const { return static_cast<std::int64_t>(entries_.size()); }

    const ClaimAssessment& append(ClaimAssessment rec);
    void append_stale_mark(StaleMark mark);

    AssessmentSet current() const;
    std::vector<ClaimAssessment> history(std::string_view claim_id) const;

    static AssessmentLog from_jsonl(std::string_view text);
    std::string to_jsonl() const;
    static std::string entry_line(const LogEntry& e);

    /// Missing file loads as an empty log.
    static AssessmentLog load(const std::filesystem::path& path);
    /// Appends entries with index >= from to the file.
    void append_to_file(const std::filesystem::path& path, std::int64_t from) const;

private:
    std::vector<LogEntry> entries_;
};

nlohmann::json to_json(const ClaimAssessment& a);
/// Field errors are reported as AssessmentError(INVARIANT_VIOLATION, path).
ClaimAssessment assessment_from_json(const nlohmann::json& j);

/// Checks a record against the case without storing it.
void check_assessment(const SafetyCase& sc, const ClaimAssessment& rec);

/// Validates and appends. The stored record has stale = false.
const ClaimAssessment& record_assessment(const SafetyCase& sc, AssessmentLog& log, ClaimAssessment rec);

struct RubricCell {
    Dimension dimension;
    int level;
    std::string title;
    std::string guidance;
};

RubricCell rubric_text(Dimension dimension, int level);

struct Prompt {
    std::string id;
    std::string text;
};

/// Checklist shown to an assessor before scoring a claim.
std::vector<Prompt> assessment_prompts(const SafetyCase& sc, std::string_view claim_id);

}  // namespace casekit
