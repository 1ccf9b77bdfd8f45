// casekit command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 validation or lint errors (lint only
// with --strict), 3 I/O failure.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "casekit/aggregation.hpp"
#include "casekit/assessment.hpp"
#include "casekit/case_io.hpp"
#include "casekit/evidence_scoring.hpp"
#include "casekit/lifecycle.hpp"
#include "casekit/linting.hpp"
#include "casekit/radar.hpp"
#include "casekit/report.hpp"
#include "casekit/service.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace casekit;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kIo = 3 };

struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw Failure{code, message}; }

struct Globals {
    std::string case_path;
    std::string as_of;
    std::string format;
    std::string log_path;
    std::string trigger_log_path;
};

struct RollupArgs {
    std::string strategy = "conservative_min";
    int threshold = 2;
    std::string weights;
    std::string overrides;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(kIo, "cannot read '" + p.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, std::string_view data) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) fail(kIo, "cannot write '" + p.string() + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) fail(kIo, "write to '" + p.string() + "' failed");
}

void emit(const std::string& out_path, std::string_view data) {
    if (out_path.empty()) {
        std::cout << data;
    } else {
        write_file(out_path, data);
    }
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

/// "x.case.json" -> "x" + suffix, next to the case file.
fs::path sibling(const std::string& case_path, const std::string& suffix) {
    std::string base = case_path;
    for (std::string_view ext : {".case.json", ".case.csv", ".json", ".csv"}) {
        if (ends_with(base, ext)) {
            base.resize(base.size() - ext.size());
            break;
        }
    }
    return base + suffix;
}

Date as_of(const Globals& g) {
    if (g.as_of.empty()) return Date::today();
    try {
        return Date::parse(g.as_of);
    } catch (const std::invalid_argument&) {
        fail(kUsage, "--as-of expects YYYY-MM-DD, got '" + g.as_of + "'");
    }
}

std::string require_case(const Globals& g) {
    if (g.case_path.empty()) fail(kUsage, "--case <path> is required");
    return g.case_path;
}

fs::path log_path(const Globals& g) {
    return g.log_path.empty() ? sibling(require_case(g), ".assessments.jsonl") : fs::path(g.log_path);
}

fs::path trigger_log_path(const Globals& g) {
    return g.trigger_log_path.empty() ? sibling(require_case(g), ".triggers.jsonl") : fs::path(g.trigger_log_path);
}

void print_parse_error(const ParseError& e) {
    if (e.kind() == "semantic" && !e.violations().empty()) {
        for (const auto& v : e.violations()) std::cerr << "error " << v.code << " " << v.location << ": " << v.message << "\n";
    } else {
        std::cerr << "error " << e.code() << " " << e.location() << ": " << e.what() << "\n";
    }
}

SafetyCase load_case_file(const std::string& path, const Date& stub_date) {
    const std::string text = read_file(path);
    try {
        if (ends_with(path, ".csv")) {
            auto rows = read_tabular_csv(text);
            return import_tabular(rows, {stub_date});
        }
        return parse_case(text);
    } catch (const ParseError& e) {
        print_parse_error(e);
        fail(kInvalid, "'" + path + "' is not a valid case");
    } catch (const Error& e) {
        std::cerr << "error " << e.code() << " " << e.location() << ": " << e.what() << "\n";
        fail(kInvalid, "'" + path + "' is not a valid case");
    }
}

SafetyCase load_case(const Globals& g) { return load_case_file(require_case(g), as_of(g)); }

AssessmentLog load_log(const fs::path& p) {
    try {
        return AssessmentLog::load(p);
    } catch (const Error& e) {
        fail(kIo, p.string() + ": " + e.what());
    }
}

TriggerLog load_triggers(const fs::path& p) {
    try {
        return TriggerLog::load(p);
    } catch (const Error& e) {
        fail(kIo, p.string() + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    try {
        return parse_json_text(read_file(path));
    } catch (const ParseError& e) {
        fail(kUsage, path + ": " + e.what());
    }
}

RollupOptions rollup_options(const RollupArgs& a) {
    RollupOptions o;
    try {
        o.strategy = parse_strategy(a.strategy);
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    o.threshold = a.threshold;
    try {
        if (!a.weights.empty()) o.weights = weights_from_json(load_json_file(a.weights));
        if (!a.overrides.empty()) o.overrides = overrides_from_json(load_json_file(a.overrides));
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    return o;
}

RollupResult run_rollup(const SafetyCase& sc, const AssessmentSet& current, const RollupArgs& a) {
    const RollupOptions options = rollup_options(a);
    try {
        return rollup(sc, current, options);
    } catch (const Error& e) {
        fail(kUsage, std::string(e.code()) + ": " + e.what());
    }
}

void add_rollup_flags(CLI::App* cmd, RollupArgs& a) {
    cmd->add_option("--strategy", a.strategy, "conservative_min or weighted_mean")
        ->check(CLI::IsMember({"conservative_min", "weighted_mean"}));
    cmd->add_option("--threshold", a.threshold, "Low-score threshold (0-3)")->check(CLI::Range(0, 3));
    cmd->add_option("--weights", a.weights, "Weighting file (JSON)");
    cmd->add_option("--overrides", a.overrides, "Override file (JSON)");
}

std::string format_or(const Globals& g, std::string def, std::initializer_list<std::string_view> allowed) {
    std::string f = g.format.empty() ? def : g.format;
    for (auto a : allowed) {
        if (f == a) return f;
    }
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    fail(kUsage, "--format must be one of: " + list);
}

// ------------------------------------------------------------------ commands

int cmd_validate(const Globals& g) {
    const std::string path = require_case(g);
    const std::string fmt = format_or(g, "text", {"text", "json"});
    const std::string text = read_file(path);
    std::vector<Violation> violations;
    SafetyCase sc;
    try {
        if (ends_with(path, ".csv")) {
            sc = import_tabular(read_tabular_csv(text), {as_of(g)});
        } else {
            sc = case_from_json(parse_json_text(text));
        }
        violations = validate_case(sc).violations;
    } catch (const ParseError& e) {
        violations = e.violations();
        if (violations.empty()) violations.push_back({e.code(), e.location(), e.what()});
    } catch (const Error& e) {
        violations.push_back({e.code(), e.location(), e.what()});
    }
    if (fmt == "json") {
        json v = json::array();
        for (const auto& x : violations) v.push_back({{"code", x.code}, {"location", x.location}, {"message", x.message}});
        json out = {{"ok", violations.empty()}, {"violations", v}};
        if (violations.empty()) {
            out["version"] = sc.version;
            out["digest"] = canonical_hash(sc);
        }
        std::cout << canonical_dump(out);
    } else if (violations.empty()) {
        std::cout << "valid: " << sc.claims.size() << " claims, " << sc.evidence.size() << " evidence, version "
                  << sc.version << ", digest " << canonical_hash(sc).substr(0, 16) << "\n";
    } else {
        for (const auto& v : violations) std::cout << "error " << v.code << " " << v.location << ": " << v.message << "\n";
    }
    return violations.empty() ? kOk : kInvalid;
}

int cmd_lint(const Globals& g, bool strict) {
    const std::string fmt = format_or(g, "text", {"text", "jsonl"});
    const SafetyCase sc = load_case(g);
    const AssessmentSet current = load_log(log_path(g)).current();
    const auto findings = lint_case(sc, &current);
    std::cout << (fmt == "jsonl" ? render_findings_jsonl(findings) : render_findings_text(findings));
    const bool errors = std::any_of(findings.begin(), findings.end(),
                                    [](const LintFinding& f) { return f.severity == Severity::error; });
    return strict && errors ? kInvalid : kOk;
}

int cmd_score_evidence(const Globals& g) {
    const std::string fmt = format_or(g, "text", {"text", "json"});
    const SafetyCase sc = load_case(g);
    EvidenceHygieneReport r;
    try {
        r = score_library(sc, as_of(g));
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    if (fmt == "json") {
        std::cout << canonical_dump(to_json(r));
        return kOk;
    }
    for (const auto& s : r.scores) {
        std::string trace;
        for (const auto& t : s.rule_trace) trace += (trace.empty() ? "" : " > ") + t;
        std::cout << s.evidence_id << "  " << s.score << "  " << trace << "\n";
    }
    std::cout << "counts: 0=" << r.counts[0] << " 1=" << r.counts[1] << " 2=" << r.counts[2] << " 3=" << r.counts[3]
              << "; below 2: " << r.below_threshold.size() << "\n";
    return kOk;
}

std::string prompt_line(const std::string& question) {
    std::cout << question << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) fail(kUsage, "input ended before the assessment was complete");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return line;
}

ClaimAssessment interactive_assessment(const SafetyCase& sc, const std::string& claim_id, const Date& today) {
    const Claim* c = sc.find_claim(claim_id);
    if (!c) fail(kUsage, "unknown claim '" + claim_id + "'");
    std::cout << "Claim " << c->id << ": " << c->text << "\n";
    if (!c->justification_narrative.empty()) std::cout << "Narrative: " << c->justification_narrative << "\n";
    for (const auto& id : sc.linked_evidence(claim_id)) {
        const Evidence& e = sc.evidence.at(id);
        const auto s = score_evidence(e, today);
        std::cout << "  evidence " << id << " [" << to_string(e.kind) << ", status " << s.score << "] " << e.title << "\n";
    }
    std::cout << "\nBefore scoring, consider:\n";
    for (const auto& p : assessment_prompts(sc, claim_id)) std::cout << "  - " << p.text << "\n";

    ClaimAssessment a;
    a.claim_id = claim_id;
    a.assessed_at = today;
    a.case_version = sc.version;
    for (auto d : {Dimension::procedural, Dimension::implementation}) {
        std::cout << "\n" << to_string(d) << " rubric:\n";
        for (int level = 0; level <= 3; ++level) {
            std::cout << "  " << level << " - " << rubric_text(d, level).title << "\n";
        }
        for (;;) {
            auto ans = prompt_line(std::string(to_string(d)) + " score (0-3, or na): ");
            if (ans == "na" || ans == "NA" || ans == "n/a") {
                (d == Dimension::procedural ? a.procedural_na : a.implementation_na) = true;
                break;
            }
            if (ans.size() == 1 && ans[0] >= '0' && ans[0] <= '3') {
                (d == Dimension::procedural ? a.procedural : a.implementation) = ans[0] - '0';
                break;
            }
            std::cout << "enter 0, 1, 2, 3 or na\n";
        }
    }
    if (a.procedural_na || a.implementation_na) a.na_justification = prompt_line("N/A justification: ");
    a.summary = prompt_line("Summary of the assessment: ");
    std::string who = prompt_line("Assessor name(s), comma separated: ");
    std::stringstream ss(who);
    for (std::string name; std::getline(ss, name, ',');) {
        auto b = name.find_first_not_of(' '), e = name.find_last_not_of(' ');
        if (b != std::string::npos) a.assessors.push_back(name.substr(b, e - b + 1));
    }
    return a;
}

int cmd_assess(const Globals& g, const std::string& from_file, const std::string& claim_id) {
    const SafetyCase sc = load_case(g);
    const fs::path lp = log_path(g);
    AssessmentLog log = load_log(lp);
    const auto start = log.head();

    std::vector<ClaimAssessment> records;
    if (!from_file.empty()) {
        json doc = load_json_file(from_file);
        if (doc.is_object()) doc = json::array({doc});
        if (!doc.is_array()) fail(kUsage, from_file + ": expected an assessment object or an array of them");
        for (std::size_t i = 0; i < doc.size(); ++i) {
            try {
                records.push_back(assessment_from_json(doc[i]));
            } catch (const Error& e) {
                std::cerr << "error " << e.code() << " [" << i << "]." << e.location() << ": " << e.what() << "\n";
                return kInvalid;
            }
        }
    } else {
        if (claim_id.empty()) fail(kUsage, "assess needs --from-file <path> or --claim <id>");
        records.push_back(interactive_assessment(sc, claim_id, as_of(g)));
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        try {
            record_assessment(sc, log, std::move(records[i]));
        } catch (const AssessmentError& e) {
            std::cerr << "error " << e.code() << " " << e.location() << " (record " << i << "): " << e.what() << "\n";
            return kInvalid;
        }
    }
    try {
        log.append_to_file(lp, start);
    } catch (const Error& e) {
        fail(kIo, e.what());
    }
    std::cout << "recorded " << (log.head() - start) << " assessment(s); log version " << log.head() << "\n";
    return kOk;
}

int cmd_rollup(const Globals& g, const RollupArgs& args) {
    const std::string fmt = format_or(g, "text", {"text", "json"});
    const SafetyCase sc = load_case(g);
    const RollupResult r = run_rollup(sc, load_log(log_path(g)).current(), args);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    if (fmt == "json") {
        std::cout << canonical_dump(to_json(r));
        return kOk;
    }
    auto value = [](const DimensionRollup& d) {
        return (d.effective ? to_string(*d.effective) : std::string("-")) + " (" + std::string(to_string(d.source)) + ")";
    };
    for (const auto& id : traverse(sc, TraversalOrder::pre)) {
        const auto& n = r.nodes.at(id);
        std::cout << std::string(2 * sc.ancestors(id).size(), ' ') << id << "  procedural " << value(n.procedural)
                  << "  implementation " << value(n.implementation) << "\n";
    }
    if (!r.low_score_register.empty()) {
        std::cout << "below " << r.threshold << ":";
        for (const auto& l : r.low_score_register) {
            std::cout << " " << l.claim_id << "/" << to_string(l.dimension) << "=" << l.score;
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_report(const Globals& g, const RollupArgs& args, const std::string& out, const std::string& actions_path) {
    const std::string fmt = format_or(g, "markdown", {"markdown", "json"});
    const SafetyCase sc = load_case(g);
    const AssessmentSet current = load_log(log_path(g)).current();
    std::vector<SuggestedAction> actions;
    if (!actions_path.empty()) {
        try {
            actions = actions_from_json(load_json_file(actions_path));
        } catch (const Error& e) {
            fail(kUsage, e.what());
        }
    }
    EvidenceHygieneReport hygiene;
    try {
        hygiene = score_library(sc, as_of(g));
    } catch (const Error& e) {
        fail(kUsage, e.what());
    }
    const AssessmentReport report = build_report(sc, run_rollup(sc, current, args), hygiene, lint_report(sc, &current),
                                                 pending_reassessment(sc, current), std::move(actions));
    emit(out, fmt == "json" ? canonical_dump(to_json(report)) : render_markdown(report));
    return kOk;
}

int cmd_radar(const Globals& g, const RollupArgs& args, const std::string& out) {
    const SafetyCase sc = load_case(g);
    const RollupResult r = run_rollup(sc, load_log(log_path(g)).current(), args);
    try {
        emit(out, render_radar_svg(spoke_values(sc, r)));
    } catch (const Error& e) {
        fail(kInvalid, e.what());
    }
    return kOk;
}

int cmd_diff(const Globals& g, const std::string& old_path, const std::string& new_path, bool apply) {
    const std::string fmt = format_or(g, "text", {"text", "json"});
    const Date day = as_of(g);
    const SafetyCase a = load_case_file(old_path, day);
    const SafetyCase b = load_case_file(new_path, day);
    const ChangeSet changes = diff_cases(a, b);

    json out = {{"changes", json::array()}};
    for (const auto& c : changes.items) out["changes"].push_back(to_json(c));
    if (fmt == "text") {
        if (changes.empty()) std::cout << "no changes\n";
        for (const auto& c : changes.items) {
            std::cout << to_string(classify(c)) << "  " << to_string(c.kind) << "  " << c.location << "\n";
        }
    }
    if (apply) {
        const fs::path lp = g.log_path.empty() ? sibling(new_path, ".assessments.jsonl") : fs::path(g.log_path);
        AssessmentLog log = load_log(lp);
        const auto start = log.head();
        const StaleResult r = mark_stale(log, a, b, changes, {});
        try {
            log.append_to_file(lp, start);
        } catch (const Error& e) {
            fail(kIo, e.what());
        }
        out["stale"] = to_json(r);
        if (fmt == "text") {
            std::cout << "marked stale: " << r.stale_claims.size() << "\n";
            for (const auto& w : r.worklist) std::cout << "  " << to_string(w.kind) << " " << w.id << "\n";
        }
    }
    if (fmt == "json") std::cout << canonical_dump(out);
    return kOk;
}

int cmd_trigger(const Globals& g, const std::string& kind, const std::vector<std::string>& claims,
                const std::string& description) {
    const std::string fmt = format_or(g, "text", {"text", "json"});
    const SafetyCase sc = load_case(g);
    auto k = trigger_kind_from(kind);
    if (!k) fail(kUsage, "--kind must be hardware, software, odd or use_case");

    const fs::path tp = trigger_log_path(g);
    const fs::path lp = log_path(g);
    TriggerLog triggers = load_triggers(tp);
    AssessmentLog log = load_log(lp);
    const auto t_start = triggers.events().size();
    const auto l_start = log.head();

    StaleResult r;
    try {
        const TriggerEvent& t = triggers.append({"", *k, description, claims, as_of(g)});
        r = mark_stale(log, sc, sc, {}, {t});
    } catch (const Error& e) {
        std::cerr << "error " << e.code() << " " << e.location() << ": " << e.what() << "\n";
        return kInvalid;
    }
    try {
        triggers.append_to_file(tp, t_start);
        log.append_to_file(lp, l_start);
    } catch (const Error& e) {
        fail(kIo, e.what());
    }
    const TriggerEvent& t = triggers.events().back();
    if (fmt == "json") {
        std::cout << canonical_dump({{"trigger", to_json(t)}, {"stale", to_json(r)}});
    } else {
        std::cout << "trigger " << t.id << " (" << to_string(t.kind) << ") marked " << r.stale_claims.size()
                  << " assessment(s) stale\n";
        for (const auto& w : r.worklist) std::cout << "  " << to_string(w.kind) << " " << w.id << "\n";
    }
    return kOk;
}

HttpServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

int cmd_serve(const Globals& g, const RollupArgs& args, const std::string& host, int port,
              const std::string& actions_path) {
    WorkbenchConfig cfg;
    cfg.as_of = as_of(g);
    cfg.rollup = rollup_options(args);
    if (!actions_path.empty()) cfg.actions = actions_from_json(load_json_file(actions_path));
    cfg.assessment_log_path = log_path(g);
    cfg.trigger_log_path = trigger_log_path(g);
    std::unique_ptr<Workbench> wb;
    try {
        wb = Workbench::open(require_case(g), cfg);
    } catch (const ParseError& e) {
        print_parse_error(e);
        return kInvalid;
    } catch (const Error& e) {
        fail(e.code() == "IO_ERROR" ? kIo : kInvalid, e.what());
    }
    HttpServer server(*wb);
    const int bound = server.bind(host, port);
    if (bound < 0) fail(kIo, "cannot bind " + host + ":" + std::to_string(port));
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cout << "serving " << require_case(g) << " on http://" << host << ":" << bound << "\n" << std::flush;
    server.listen();
    g_server = nullptr;
    return kOk;
}

int cmd_convert(const Globals& g, const std::string& out) {
    const SafetyCase sc = load_case(g);
    if (ends_with(out, ".csv")) {
        write_file(out, write_tabular_csv(export_tabular(sc)));
    } else {
        emit(out, serialize_case(sc));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Safety case assessment toolkit", "casekit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "casekit 0.1.0");

    Globals g;
    app.add_option("--case", g.case_path, "Case file (.case.json or .case.csv)");
    app.add_option("--as-of", g.as_of, "Evaluation date, YYYY-MM-DD (default: today)");
    app.add_option("--format", g.format, "Output format (per command)");
    app.add_option("--log", g.log_path, "Assessment log (default: <case>.assessments.jsonl)");
    app.add_option("--trigger-log", g.trigger_log_path, "Trigger log (default: <case>.triggers.jsonl)");

    auto* validate = app.add_subcommand("validate", "Check a case file against every structural invariant");

    bool strict = false;
    auto* lint = app.add_subcommand("lint", "Report argument-quality findings (--format text|jsonl)");
    lint->add_flag("--strict", strict, "Exit 2 when error-severity findings are present");

    auto* score = app.add_subcommand("score-evidence", "Score every evidence record's status (0-3)");

    std::string from_file, claim_id;
    auto* assess = app.add_subcommand("assess", "Record claim assessments");
    assess->add_option("--from-file", from_file, "JSON assessment record or array of records");
    assess->add_option("--claim", claim_id, "Claim to assess interactively");

    RollupArgs rargs;
    auto* roll = app.add_subcommand("rollup", "Aggregate assessments up the claim tree");
    add_rollup_flags(roll, rargs);

    std::string out, actions;
    auto* report = app.add_subcommand("report", "Write the assessment report (--format markdown|json)");
    add_rollup_flags(report, rargs);
    report->add_option("-o,--output", out, "Output file (default: stdout)");
    report->add_option("--actions", actions, "Suggested actions file (JSON)");

    auto* radar = app.add_subcommand("radar", "Write the family radar chart as SVG");
    add_rollup_flags(radar, rargs);
    radar->add_option("-o,--output", out, "Output file (default: stdout)");

    std::string old_path, new_path;
    bool apply = false;
    auto* diff = app.add_subcommand("diff", "Compare two case versions");
    diff->add_option("old", old_path, "Previous case file")->required();
    diff->add_option("new", new_path, "Updated case file")->required();
    diff->add_flag("--apply", apply, "Mark affected assessments stale in the new case's log");

    std::string kind, description;
    std::vector<std::string> claims;
    auto* trigger = app.add_subcommand("trigger", "Record an external change and mark affected assessments stale");
    trigger->add_option("--kind", kind, "hardware, software, odd or use_case")->required();
    trigger->add_option("--claims", claims, "Claim ids or family tags")->required()->delimiter(',');
    trigger->add_option("--description", description, "What changed");

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "Serve the workbench HTTP API");
    serve->add_option("--host", host, "Bind address (default: 127.0.0.1)");
    serve->add_option("--port", port, "Port (default: 8080)")->check(CLI::Range(0, 65535));
    serve->add_option("--actions", actions, "Suggested actions file (JSON)");
    add_rollup_flags(serve, rargs);

    std::string convert_out;
    auto* convert = app.add_subcommand("convert", "Write the case canonically, or as tabular CSV for a .csv output");
    convert->add_option("-o,--output", convert_out, "Output file (.case.json or .case.csv; default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        as_of(g);
        if (*validate) return cmd_validate(g);
        if (*lint) return cmd_lint(g, strict);
        if (*score) return cmd_score_evidence(g);
        if (*assess) return cmd_assess(g, from_file, claim_id);
        if (*roll) return cmd_rollup(g, rargs);
        if (*report) return cmd_report(g, rargs, out, actions);
        if (*radar) return cmd_radar(g, rargs, out);
        if (*diff) return cmd_diff(g, old_path, new_path, apply);
        if (*trigger) return cmd_trigger(g, kind, claims, description);
        if (*serve) return cmd_serve(g, rargs, host, port, actions);
        if (*convert) return cmd_convert(g, convert_out);
    } catch (const Failure& f) {
        std::cerr << "casekit: " << f.message << "\n";
        return f.code;
    } catch (const Error& e) {
        std::cerr << "casekit: " << e.code() << ": " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "casekit: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
