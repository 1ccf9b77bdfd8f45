#include "casekit/case_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace casekit {

using nlohmann::json;

namespace {

/// Walks a json object, recording which keys were consumed so unknown keys can
/// be reported, and throwing schema errors that name the full field path.
class Fields {
public:
    Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected an object");
    }

    [[noreturn]] static void fail(const std::string& path, const std::string& what) {
        throw ParseError("schema", path, path + ": " + what);
    }

    std::string at(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const json* get(std::string_view key) {
        used_.insert(std::string(key));
        auto it = j_.find(std::string(key));
        if (it == j_.end() || it->is_null()) return nullptr;
        return &*it;
    }

    const json& need(std::string_view key) {
        const json* v = get(key);
        if (!v) fail(at(key), "missing required field");
        return *v;
    }

    std::string str(std::string_view key) {
        const json& v = need(key);
        if (!v.is_string()) fail(at(key), "expected a string");
        return v.get<std::string>();
    }

    std::string str_or(std::string_view key, std::string fallback = {}) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_string()) fail(at(key), "expected a string");
        return v->get<std::string>();
    }

    std::optional<std::string> opt_str(std::string_view key) {
        const json* v = get(key);
        if (!v) return std::nullopt;
        if (!v->is_string()) fail(at(key), "expected a string");
        return v->get<std::string>();
    }

    bool flag(std::string_view key, bool fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_boolean()) fail(at(key), "expected a boolean");
        return v->get<bool>();
    }

    std::int64_t integer(std::string_view key) {
        const json& v = need(key);
        if (!v.is_number_integer()) fail(at(key), "expected an integer");
        return v.get<std::int64_t>();
    }

    Date date(std::string_view key) {
        auto s = str(key);
        try {
            return Date::parse(s);
        } catch (const std::invalid_argument& e) {
            fail(at(key), e.what());
        }
    }

    std::optional<Date> opt_date(std::string_view key) {
        auto s = opt_str(key);
        if (!s) return std::nullopt;
        try {
            return Date::parse(*s);
        } catch (const std::invalid_argument& e) {
            fail(at(key), e.what());
        }
    }

    std::vector<std::string> strings(std::string_view key) {
        std::vector<std::string> out;
        const json* v = get(key);
        if (!v) return out;
        if (!v->is_array()) fail(at(key), "expected an array of strings");
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (!(*v)[i].is_string()) fail(at(key) + "[" + std::to_string(i) + "]", "expected a string");
            out.push_back((*v)[i].get<std::string>());
        }
        return out;
    }

    const json* array(std::string_view key, bool required) {
        const json* v = required ? &need(key) : get(key);
        if (v && !v->is_array()) fail(at(key), "expected an array");
        return v;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!used_.count(it.key())) fail(at(it.key()), "unknown field");
        }
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

json person_json(const std::optional<Person>& p) {
    if (!p) return nullptr;
    return json{{"name", p->name}, {"active", p->active}};
}

std::optional<Person> person_from(Fields& f, std::string_view key) {
    const json* v = f.get(key);
    if (!v) return std::nullopt;
    Fields pf(*v, f.at(key));
    Person p{pf.str("name"), pf.flag("active", true)};
    pf.finish();
    return p;
}

json optional_str(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::pair<int, int> line_col(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string canonical_dump(const json& j) {
    return j.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based position of the offending character.
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("syntax", "line " + std::to_string(line) + ", column " + std::to_string(col),
                         "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), line,
                         col);
    }
}

json case_to_json(const SafetyCase& sc) {
    json claims = json::array();
    for (const auto& [id, c] : sc.claims) {
        json cas = json::array();
        for (const auto& ca : c.counter_arguments) {
            cas.push_back({{"text", ca.text}, {"rejection", ca.rejection}, {"rejection_evidence", ca.rejection_evidence}});
        }
        claims.push_back({
            {"id", c.id},
            {"text", c.text},
            {"parent", optional_str(c.parent)},
            {"children", c.children},
            {"family", optional_str(c.family)},
            {"poc", person_json(c.poc)},
            {"counter_arguments", cas},
            {"limitations", c.limitations},
            {"justification_narrative", c.justification_narrative},
            {"status", std::string(to_string(c.status))},
        });
    }
    json evidence = json::array();
    for (const auto& [id, e] : sc.evidence) {
        evidence.push_back({
            {"id", e.id},
            {"title", e.title},
            {"kind", std::string(to_string(e.kind))},
            {"uri", e.uri},
            {"owner", person_json(e.owner)},
            {"owner_affiliated", e.owner_affiliated},
            {"created", e.created.str()},
            {"last_review", e.last_review ? json(e.last_review->str()) : json(nullptr)},
            {"active_confirmed", e.active_confirmed},
            {"flagged_major_revision", e.flagged_major_revision},
            {"partially_outdated_flagged", e.partially_outdated_flagged},
            {"revision_history_documented", e.revision_history_documented},
            {"approvals_documented", e.approvals_documented},
            {"controlled_environment", e.controlled_environment},
            {"exists", e.exists},
        });
    }
    json links = json::array();
    for (const auto& l : sc.sorted_links()) {
        links.push_back({{"claim_id", l.claim_id}, {"evidence_id", l.evidence_id}, {"note", l.note}});
    }
    return {
        {"scope",
         {{"system_description", sc.scope.system_description},
          {"application", sc.scope.application},
          {"environment", sc.scope.environment},
          {"assumptions", sc.scope.assumptions}}},
        {"claims", claims},
        {"evidence", evidence},
        {"links", links},
        {"version", sc.version},
    };
}

SafetyCase case_from_json(const json& doc) {
    SafetyCase sc;
    Fields top(doc, "");

    {
        Fields s(top.need("scope"), "scope");
        sc.scope.system_description = s.str("system_description");
        sc.scope.application = s.str("application");
        sc.scope.environment = s.str("environment");
        sc.scope.assumptions = s.strings("assumptions");
        s.finish();
    }

    const json& claims = *top.array("claims", true);
    for (std::size_t i = 0; i < claims.size(); ++i) {
        const std::string path = "claims[" + std::to_string(i) + "]";
        Fields f(claims[i], path);
        Claim c;
        c.id = f.str("id");
        c.text = f.str("text");
        c.parent = f.opt_str("parent");
        c.children = f.strings("children");
        c.family = f.opt_str("family");
        c.poc = person_from(f, "poc");
        if (const json* cas = f.array("counter_arguments", false)) {
            for (std::size_t k = 0; k < cas->size(); ++k) {
                Fields cf((*cas)[k], f.at("counter_arguments") + "[" + std::to_string(k) + "]");
                CounterArgument ca;
                ca.text = cf.str("text");
                ca.rejection = cf.str_or("rejection");
                ca.rejection_evidence = cf.strings("rejection_evidence");
                cf.finish();
                c.counter_arguments.push_back(std::move(ca));
            }
        }
        c.limitations = f.strings("limitations");
        c.justification_narrative = f.str_or("justification_narrative");
        if (auto st = f.opt_str("status")) {
            auto parsed = claim_status_from(*st);
            if (!parsed) Fields::fail(f.at("status"), "unknown status '" + *st + "'");
            c.status = *parsed;
        }
        f.finish();
        if (sc.claims.count(c.id)) {
            throw ParseError("semantic", path, "duplicate claim id '" + c.id + "'", 0, 0,
                             {{"DUPLICATE_ID", c.id, "duplicate claim id"}});
        }
        sc.claims.emplace(c.id, std::move(c));
    }

    if (const json* evs = top.array("evidence", false)) {
        for (std::size_t i = 0; i < evs->size(); ++i) {
            const std::string path = "evidence[" + std::to_string(i) + "]";
            Fields f((*evs)[i], path);
            Evidence e;
            e.id = f.str("id");
            e.title = f.str("title");
            auto kind = f.str("kind");
            auto parsed = evidence_kind_from(kind);
            if (!parsed) Fields::fail(f.at("kind"), "unknown evidence kind '" + kind + "'");
            e.kind = *parsed;
            e.uri = f.str_or("uri");
            e.owner = person_from(f, "owner");
            e.owner_affiliated = f.flag("owner_affiliated", false);
            e.created = f.date("created");
            e.last_review = f.opt_date("last_review");
            e.active_confirmed = f.flag("active_confirmed", false);
            e.flagged_major_revision = f.flag("flagged_major_revision", false);
            e.partially_outdated_flagged = f.flag("partially_outdated_flagged", false);
            e.revision_history_documented = f.flag("revision_history_documented", false);
            e.approvals_documented = f.flag("approvals_documented", false);
            e.controlled_environment = f.flag("controlled_environment", false);
            e.exists = f.flag("exists", true);
            f.finish();
            if (sc.evidence.count(e.id)) {
                throw ParseError("semantic", path, "duplicate evidence id '" + e.id + "'", 0, 0,
                                 {{"DUPLICATE_ID", e.id, "duplicate evidence id"}});
            }
            sc.evidence.emplace(e.id, std::move(e));
        }
    }

    if (const json* links = top.array("links", false)) {
        for (std::size_t i = 0; i < links->size(); ++i) {
            Fields f((*links)[i], "links[" + std::to_string(i) + "]");
            EvidenceLink l{f.str("claim_id"), f.str("evidence_id"), f.str_or("note")};
            f.finish();
            sc.links.push_back(std::move(l));
        }
    }

    sc.version = top.integer("version");
    top.finish();
    return sc;
}

SafetyCase parse_case(std::string_view text) {
    SafetyCase sc = case_from_json(parse_json_text(text));
    auto report = validate_case(sc);
    if (!report.ok()) {
        const auto& first = report.violations.front();
        throw ParseError("semantic", first.location, first.code + " at " + first.location + ": " + first.message, 0,
                         0, report.violations);
    }
    return sc;
}

std::string serialize_case(const SafetyCase& sc) { return canonical_dump(case_to_json(sc)); }

std::string canonical_hash(const SafetyCase& sc) { return sha256_hex(serialize_case(sc)); }

// ---------------------------------------------------------------- CSV

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t i = 0;
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };
    while (i < text.size()) {
        char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            field.push_back(ch);
            ++i;
            continue;
        }
        if (ch == '"' && !field_started) {
            quoted = true;
            field_started = true;
            ++i;
        } else if (ch == ',') {
            end_field();
            ++i;
        } else if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            end_record();
            i += 2;
        } else if (ch == '\n') {
            end_record();
            ++i;
        } else {
            field.push_back(ch);
            field_started = true;
            ++i;
        }
    }
    if (quoted) throw Error("CSV_SYNTAX", "end of input", "unterminated quoted field");
    if (field_started || !record.empty()) end_record();
    return records;
}

std::string write_csv(const std::vector<std::vector<std::string>>& records) {
    std::string out;
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < rec.size(); ++i) {
            if (i) out.push_back(',');
            const auto& f = rec[i];
            if (f.find_first_of(",\"\r\n") == std::string::npos) {
                out += f;
            } else {
                out.push_back('"');
                for (char c : f) {
                    if (c == '"') out.push_back('"');
                    out.push_back(c);
                }
                out.push_back('"');
            }
        }
        out += "\r\n";
    }
    return out;
}

std::vector<TabularRow> read_tabular_csv(std::string_view text) {
    auto records = parse_csv(text);
    if (records.empty()) throw Error("HEADER_MISMATCH", "row 1", "missing header row");
    const auto& header = records.front();
    bool match = header.size() == kTabularHeader.size();
    for (std::size_t i = 0; match && i < header.size(); ++i) match = header[i] == kTabularHeader[i];
    if (!match) throw Error("HEADER_MISMATCH", "row 1", "header row does not match the seven tabular column names");
    std::vector<TabularRow> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() == 1 && rec[0].empty()) continue;  // blank line
        if (rec.size() != kTabularHeader.size()) {
            throw Error("COLUMN_COUNT", "row " + std::to_string(r + 1),
                        "expected 7 columns, found " + std::to_string(rec.size()));
        }
        rows.push_back({rec[0], rec[1], rec[2], rec[3], rec[4], rec[5], rec[6]});
    }
    return rows;
}

std::string write_tabular_csv(std::span<const TabularRow> rows) {
    std::vector<std::vector<std::string>> records;
    records.emplace_back(kTabularHeader.begin(), kTabularHeader.end());
    for (const auto& r : rows) {
        records.push_back({r.context, r.claim_id, r.claim, r.evidence, r.limitations, r.counter_argument, r.narrative});
    }
    return write_csv(records);
}

// ---------------------------------------------------------------- tabular

namespace {

constexpr std::string_view kRejection = "Rejection:";
constexpr std::string_view kRejectionEvidence = "Rejection evidence:";
constexpr std::string_view kBlockSeparator = "---";

std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto nl = s.find('\n', start);
        if (nl == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    for (auto& l : out) {
        if (!l.empty() && l.back() == '\r') l.pop_back();
    }
    return out;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::optional<std::string> parent_path(const std::string& id) {
    auto dot = id.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    return id.substr(0, dot);
}

CaseScope parse_scope_summary(std::string_view cell) {
    CaseScope scope;
    for (const auto& line : split_lines(cell)) {
        auto take = [&](std::string_view prefix, std::string& dst) {
            if (line.rfind(prefix, 0) == 0) {
                dst = trim(std::string_view(line).substr(prefix.size()));
                return true;
            }
            return false;
        };
        std::string assumption;
        if (take("System: ", scope.system_description) || take("Application: ", scope.application) ||
            take("Environment: ", scope.environment)) {
            continue;
        }
        if (take("Assumption: ", assumption)) scope.assumptions.push_back(assumption);
    }
    return scope;
}

std::vector<CounterArgument> parse_counter_cell(const std::string& cell, const std::string& claim_id) {
    std::vector<CounterArgument> out;
    if (trim(cell).empty()) return out;
    std::vector<std::vector<std::string>> blocks(1);
    for (auto& line : split_lines(cell)) {
        if (trim(line) == kBlockSeparator) {
            blocks.emplace_back();
        } else {
            blocks.back().push_back(std::move(line));
        }
    }
    for (const auto& block : blocks) {
        std::vector<std::string> defeater, rejection;
        std::vector<std::string> rej_evidence;
        bool in_rejection = false;
        bool saw_marker = false;
        for (const auto& line : block) {
            if (line.rfind(kRejectionEvidence, 0) == 0) {
                if (!saw_marker) {
                    throw Error("MALFORMED_COUNTER_ARGUMENT", claim_id,
                                "rejection evidence listed before a Rejection: marker");
                }
                std::string list = std::string(line.substr(kRejectionEvidence.size()));
                std::stringstream ss(list);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto t = trim(item);
                    if (!t.empty()) rej_evidence.push_back(t);
                }
                continue;
            }
            if (!in_rejection) {
                auto pos = line.find(kRejection);
                if (pos != std::string::npos) {
                    in_rejection = true;
                    saw_marker = true;
                    auto before = line.substr(0, pos);
                    if (!trim(before).empty()) defeater.push_back(trim(before));
                    auto after = trim(std::string_view(line).substr(pos + kRejection.size()));
                    if (!after.empty()) rejection.push_back(after);
                    continue;
                }
                defeater.push_back(line);
            } else {
                rejection.push_back(line);
            }
        }
        CounterArgument ca;
        ca.text = trim(join(defeater, "\n"));
        ca.rejection = trim(join(rejection, "\n"));
        ca.rejection_evidence = std::move(rej_evidence);
        if (ca.text.empty()) {
            throw Error("MALFORMED_COUNTER_ARGUMENT", claim_id, "counter-argument block has no defeater text");
        }
        out.push_back(std::move(ca));
    }
    return out;
}

std::string format_counter_cell(const std::vector<CounterArgument>& cas) {
    std::vector<std::string> blocks;
    for (const auto& ca : cas) {
        std::string b = ca.text;
        if (!ca.rejection.empty() || !ca.rejection_evidence.empty()) {
            b += "\n" + std::string(kRejection) + " " + ca.rejection;
        }
        if (!ca.rejection_evidence.empty()) {
            b += "\n" + std::string(kRejectionEvidence) + " " + join(ca.rejection_evidence, ", ");
        }
        blocks.push_back(std::move(b));
    }
    return join(blocks, "\n" + std::string(kBlockSeparator) + "\n");
}

struct EvidenceStub {
    std::string id;
    EvidenceKind kind;
    std::string title;
};

EvidenceStub parse_evidence_line(const std::string& line, const std::string& claim_id) {
    auto colon = line.find(':');
    if (colon == std::string::npos) {
        throw Error("MALFORMED_EVIDENCE_CELL", claim_id, "evidence line '" + line + "' is not 'ID [kind]: title'");
    }
    std::string head = trim(std::string_view(line).substr(0, colon));
    EvidenceStub stub{head, EvidenceKind::procedural, trim(std::string_view(line).substr(colon + 1))};
    auto lb = head.find('[');
    if (lb != std::string::npos) {
        auto rb = head.find(']', lb);
        if (rb == std::string::npos) {
            throw Error("MALFORMED_EVIDENCE_CELL", claim_id, "unterminated kind in '" + line + "'");
        }
        auto kind = evidence_kind_from(trim(std::string_view(head).substr(lb + 1, rb - lb - 1)));
        if (!kind) throw Error("MALFORMED_EVIDENCE_CELL", claim_id, "unknown evidence kind in '" + line + "'");
        stub.kind = *kind;
        stub.id = trim(std::string_view(head).substr(0, lb));
    }
    if (stub.id.empty()) throw Error("MALFORMED_EVIDENCE_CELL", claim_id, "evidence line '" + line + "' has no id");
    return stub;
}

/// True when every child id is its parent's id plus one dotted segment and
/// the root id has no dot.
bool ids_form_dotted_hierarchy(const SafetyCase& sc) {
    for (const auto& [id, c] : sc.claims) {
        if (parent_path(id) != c.parent) return false;
    }
    return true;
}

}  // namespace

std::string scope_summary(const CaseScope& scope) {
    std::string out = "System: " + scope.system_description + "\nApplication: " + scope.application +
                      "\nEnvironment: " + scope.environment;
    for (const auto& a : scope.assumptions) out += "\nAssumption: " + a;
    return out;
}

SafetyCase import_tabular(std::span<const TabularRow> rows, const TabularImportOptions& options) {
    SafetyCase sc;
    if (!rows.empty()) sc.scope = parse_scope_summary(rows.front().context);

    std::vector<std::string> order;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string id = trim(row.claim_id);
        if (sc.claims.count(id)) throw Error("DUPLICATE_CLAIM_ID", id, "claim id '" + id + "' appears twice");
        Claim c;
        c.id = id;
        c.text = row.claim;
        c.parent = parent_path(id);
        c.justification_narrative = row.narrative;
        for (auto& line : split_lines(row.limitations)) {
            if (!trim(line).empty()) c.limitations.push_back(line);
        }
        c.counter_arguments = parse_counter_cell(row.counter_argument, id);
        for (const auto& line : split_lines(row.evidence)) {
            if (trim(line).empty()) continue;
            auto stub = parse_evidence_line(line, id);
            if (!sc.evidence.count(stub.id)) {
                Evidence e;
                e.id = stub.id;
                e.title = stub.title;
                e.kind = stub.kind;
                e.created = options.stub_created;
                e.exists = true;
                sc.evidence.emplace(e.id, std::move(e));
            }
            sc.links.push_back({id, stub.id, ""});
        }
        for (const auto& ca : c.counter_arguments) {
            for (const auto& ev : ca.rejection_evidence) {
                if (!sc.evidence.count(ev)) {
                    Evidence e;
                    e.id = ev;
                    e.title = ev;
                    e.created = options.stub_created;
                    sc.evidence.emplace(ev, std::move(e));
                }
            }
        }
        sc.claims.emplace(id, std::move(c));
        order.push_back(id);
    }
    for (const auto& id : order) {
        const auto& parent = sc.claims.at(id).parent;
        if (!parent) continue;
        auto it = sc.claims.find(*parent);
        if (it == sc.claims.end()) {
            throw Error("NON_CONTIGUOUS_HIERARCHY", id, "claim '" + id + "' has no parent row '" + *parent + "'");
        }
        it->second.children.push_back(id);
    }
    auto report = validate_case(sc);
    if (!report.ok()) {
        const auto& first = report.violations.front();
        throw ParseError("semantic", first.location, first.code + " at " + first.location + ": " + first.message, 0,
                         0, report.violations);
    }
    return sc;
}

std::vector<TabularRow> export_tabular(const SafetyCase& sc) {
    const auto pre = traverse(sc, TraversalOrder::pre);
    std::map<std::string, std::string> ids;
    if (ids_form_dotted_hierarchy(sc)) {
        for (const auto& id : pre) ids[id] = id;
    } else {
        ids[pre.front()] = "1";
        for (const auto& id : pre) {
            const Claim& c = sc.claims.at(id);
            for (std::size_t i = 0; i < c.children.size(); ++i) {
                ids[c.children[i]] = ids[id] + "." + std::to_string(i + 1);
            }
        }
    }
    const std::string context = scope_summary(sc.scope);
    std::vector<TabularRow> rows;
    for (const auto& id : pre) {
        const Claim& c = sc.claims.at(id);
        std::vector<std::string> ev_lines;
        for (const auto& ev_id : sc.linked_evidence(id)) {
            const Evidence& e = sc.evidence.at(ev_id);
            ev_lines.push_back(e.id + " [" + std::string(to_string(e.kind)) + "]: " + e.title);
        }
        rows.push_back({context, ids[id], c.text, join(ev_lines, "\n"), join(c.limitations, "\n"),
                        format_counter_cell(c.counter_arguments), c.justification_narrative});
    }
    return rows;
}

}  // namespace casekit
