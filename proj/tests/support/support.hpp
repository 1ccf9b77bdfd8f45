#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "casekit/assessment.hpp"
#include "casekit/case_io.hpp"
#include "casekit/model.hpp"

namespace testing {

using namespace casekit;

inline std::filesystem::path source_dir() { return CASEKIT_SOURCE_DIR; }
inline std::filesystem::path fixture(const std::string& name) { return source_dir() / "fixtures" / name; }
inline std::filesystem::path golden(const std::string& name) { return source_dir() / "tests" / "golden" / name; }

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << s;
}

inline const Date kDemoDate{2025, 6, 30};

inline SafetyCase fixture_case() { return parse_case(read_text(fixture("acceptance_criterion.case.json"))); }

/// The demo assessments recorded through the normal validation path.
inline AssessmentLog demo_log(const SafetyCase& sc) {
    AssessmentLog log;
    auto doc = nlohmann::json::parse(read_text(fixture("demo.assessments.json")));
    for (const auto& rec : doc) record_assessment(sc, log, assessment_from_json(rec));
    return log;
}

/// Minimal valid scaffolding for hand-built cases.
inline SafetyCase empty_case() {
    SafetyCase sc;
    sc.scope = {"Test system", "Test application", "Test environment", {}};
    return sc;
}

inline Claim& add_claim(SafetyCase& sc, const std::string& id, std::optional<std::string> parent,
                        const std::string& text = "", const std::string& poc = "Claim Owner") {
    Claim c;
    c.id = id;
    c.text = text.empty() ? "Claim " + id + " holds." : text;
    c.parent = parent;
    c.poc = Person{poc, true};
    c.justification_narrative = "Narrative for " + id + ".";
    if (parent) sc.claims.at(*parent).children.push_back(id);
    return sc.claims.emplace(id, std::move(c)).first->second;
}

inline Evidence& add_evidence(SafetyCase& sc, const std::string& id, EvidenceKind kind = EvidenceKind::procedural) {
    Evidence e;
    e.id = id;
    e.title = "Evidence " + id;
    e.kind = kind;
    e.uri = "docs://" + id;
    e.owner = Person{"Evidence Owner", true};
    e.owner_affiliated = true;
    e.created = Date{2024, 1, 1};
    e.last_review = Date{2025, 1, 1};
    e.active_confirmed = true;
    return sc.evidence.emplace(id, std::move(e)).first->second;
}

inline void link(SafetyCase& sc, const std::string& claim, const std::string& ev) {
    sc.links.push_back({claim, ev, ""});
}

/// Parent plus two children: the smallest decomposition.
inline SafetyCase two_leaf_case() {
    SafetyCase sc = empty_case();
    add_claim(sc, "1", std::nullopt);
    add_claim(sc, "1.1", "1");
    add_claim(sc, "1.2", "1");
    add_evidence(sc, "E1", EvidenceKind::procedural);
    add_evidence(sc, "E2", EvidenceKind::implementation);
    link(sc, "1.1", "E1");
    link(sc, "1.1", "E2");
    link(sc, "1.2", "E1");
    link(sc, "1.2", "E2");
    return sc;
}

inline ClaimAssessment scored(const std::string& id, std::optional<int> p, std::optional<int> i,
                              std::int64_t version = 1) {
    ClaimAssessment a;
    a.claim_id = id;
    a.procedural = p;
    a.implementation = i;
    a.procedural_na = !p;
    a.implementation_na = !i;
    if (!p || !i) a.na_justification = "Dimension not applicable in this test.";
    a.summary = "Assessment of " + id + ".";
    a.assessors = {"Independent Assessor"};
    a.assessed_at = Date{2025, 6, 30};
    a.case_version = version;
    return a;
}

// ------------------------------------------------------------ generators

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))]; }
};

/// Random valid tree of n claims (ids "C0".."Cn-1", C0 root), each non-root
/// attached to an earlier claim, so shapes range from chains to stars.
/// Families are drawn from a small pool; every leaf gets one evidence link.
inline SafetyCase random_case(Rng& rng, int n) {
    SafetyCase sc = empty_case();
    static const std::vector<std::string> families = {"Alpha", "Beta", "Gamma", "Delta"};
    for (int i = 0; i < n; ++i) {
        std::optional<std::string> parent;
        if (i > 0) parent = "C" + std::to_string(rng.uniform(0, i - 1));
        Claim& c = add_claim(sc, "C" + std::to_string(i), parent);
        if (rng.coin(0.7)) c.family = rng.pick(families);
        if (rng.coin(0.2)) c.limitations.push_back("Limitation " + std::to_string(rng.uniform(0, 99)));
    }
    const int n_ev = std::max(1, n / 2);
    for (int e = 0; e < n_ev; ++e) {
        add_evidence(sc, "E" + std::to_string(e), rng.coin() ? EvidenceKind::procedural : EvidenceKind::implementation);
    }
    for (const auto& [id, c] : sc.claims) {
        if (c.children.empty()) link(sc, id, "E" + std::to_string(rng.uniform(0, n_ev - 1)));
    }
    return sc;
}

/// Random assessments: each claim unassessed, or scored with each dimension
/// independently N/A or 0..3.
inline AssessmentSet random_assessments(Rng& rng, const SafetyCase& sc, double p_assessed = 0.75) {
    AssessmentSet out;
    for (const auto& [id, c] : sc.claims) {
        if (!rng.coin(p_assessed)) continue;
        std::optional<int> p, i;
        if (!rng.coin(0.15)) p = rng.uniform(0, 3);
        if (!rng.coin(0.15)) i = rng.uniform(0, 3);
        out.emplace(id, scored(id, p, i, sc.version));
    }
    return out;
}

}  // namespace testing
