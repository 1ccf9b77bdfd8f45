#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casekit/errors.hpp"
#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

/// Parse failure. `kind` is one of "syntax", "schema", "semantic".
/// Syntax errors carry 1-based line/column; schema errors carry the field
/// path (e.g. "scope.environment"); semantic errors carry the validator's
/// violations.
class ParseError : public Error {
public:
    ParseError(std::string kind, std::string location, const std::string& message, int line = 0, int column = 0,
               std::vector<Violation> violations = {})
        : Error(kind == "syntax" ? "SYNTAX_ERROR" : kind == "schema" ? "SCHEMA_ERROR" : "SEMANTIC_ERROR",
                std::move(location), message),
          kind_(std::move(kind)),
          line_(line),
          column_(column),
          violations_(std::move(violations)) {}

    const std::string& kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::string kind_;
    int line_;
    int column_;
    std::vector<Violation> violations_;
};

// ---- canonical document (.case.json) ----

/// Parses a canonical case document and validates it.
SafetyCase parse_case(std::string_view text);

/// Canonical bytes: sorted keys, claims/evidence sorted by id, links sorted,
/// two-space indentation, ISO dates, trailing newline.
std::string serialize_case(const SafetyCase& sc);

/// Digest of the canonical serialization.
std::string canonical_hash(const SafetyCase& sc);

nlohmann::json case_to_json(const SafetyCase& sc);
SafetyCase case_from_json(const nlohmann::json& doc);  // schema only, no validation

/// Canonical text for any json value: sorted keys, 2-space indent, newline.
std::string canonical_dump(const nlohmann::json& j);

/// Throws ParseError("syntax") with line/column on malformed JSON.
nlohmann::json parse_json_text(std::string_view text);

// ---- tabular format (.case.csv) ----

inline constexpr std::array<std::string_view, 7> kTabularHeader = {
    "Context",
    "Claim ID",
    "Claim",
    "Evidence",
    "Limitations/Scope",
    "Counter Argument + Rejection",
    "Justification Narrative",
};

struct TabularRow {
    std::string context;
    std::string claim_id;
    std::string claim;
    std::string evidence;
    std::string limitations;
    std::string counter_argument;
    std::string narrative;

    friend bool operator==(const TabularRow&, const TabularRow&) = default;
};

struct TabularImportOptions {
    /// `created` date stamped onto evidence stubs.
    Date stub_created{1970, 1, 1};
};

/// One claim per row; hierarchy from dotted ids ("2.1.3" is a child of "2.1").
/// Evidence cells hold one item per line, `ID [kind]: title`. Counter-argument
/// cells hold blocks separated by a `---` line; each block is the defeater,
/// optionally followed by `Rejection:` and a `Rejection evidence:` id list.
/// Errors: DUPLICATE_CLAIM_ID, NON_CONTIGUOUS_HIERARCHY,
/// MALFORMED_COUNTER_ARGUMENT, MALFORMED_EVIDENCE_CELL, plus ParseError on
/// an invalid resulting case.
SafetyCase import_tabular(std::span<const TabularRow> rows, const TabularImportOptions& options = {});

/// Rows in pre-order. Ids are kept when they already form a dotted hierarchy
/// and regenerated positionally otherwise.
std::vector<TabularRow> export_tabular(const SafetyCase& sc);

/// Single-cell scope summary replicated into every exported row.
std::string scope_summary(const CaseScope& scope);

// RFC-4180 CSV helpers. Writer emits CRLF records; reader accepts CRLF or LF.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);
std::string write_csv(const std::vector<std::vector<std::string>>& records);

/// Header row is mandatory and must match kTabularHeader verbatim.
std::vector<TabularRow> read_tabular_csv(std::string_view text);
std::string write_tabular_csv(std::span<const TabularRow> rows);

}  // namespace casekit
