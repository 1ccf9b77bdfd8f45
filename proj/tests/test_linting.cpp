#include <algorithm>

#include "casekit/linting.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace casekit;
using namespace testing;

namespace {

std::vector<std::string> rules_at(const std::vector<LintFinding>& fs, const std::string& loc) {
    std::vector<std::string> out;
    for (const auto& f : fs) {
        if (f.location == loc) out.push_back(f.rule);
    }
    return out;
}

bool fires(const std::vector<LintFinding>& fs, const std::string& rule, const std::string& loc) {
    return std::any_of(fs.begin(), fs.end(), [&](const LintFinding& f) { return f.rule == rule && f.location == loc; });
}

}  // namespace

TEST_CASE("overstatement tokens") {
    CHECK(find_overstatement("The ADS handles all scenarios safely") == "all");
    CHECK(find_overstatement("Any hazard is mitigated.") == "any");
    CHECK(find_overstatement("EVERY release is reviewed") == "every");
    CHECK(find_overstatement("covers (all) cases") == "all");
    CHECK(find_overstatement("The suite covers all-weather sensors") == "");
    CHECK(find_overstatement("Anything, everyone, allocation, many, rally") == "");
    CHECK(find_overstatement("the team's all_hands review") == "");
    CHECK(word_tokens("All-weather, ANY.") == std::vector<std::string>{"all-weather", "any"});

    SafetyCase sc = two_leaf_case();
    sc.claims.at("1.1").text = "The ADS handles all scenarios safely";
    sc.claims.at("1.2").text = "The suite covers all-weather sensors.";
    auto fs = lint_case(sc);
    CHECK(fires(fs, "L-OVERSTATE", "1.1"));
    CHECK_FALSE(fires(fs, "L-OVERSTATE", "1.2"));
}

TEST_CASE("clean decomposition has no findings") {
    SafetyCase sc = two_leaf_case();
    CHECK(lint_case(sc).empty());
}

TEST_CASE("each rule fires on its pattern") {
    SafetyCase sc = two_leaf_case();
    add_claim(sc, "1.3", "1");
    CHECK(rules_at(lint_case(sc), "1.3") == std::vector<std::string>{"L-UNDEVELOPED"});

    sc = two_leaf_case();
    sc.claims.at("1.1").counter_arguments.push_back({"The opposite holds.", "", {}});
    auto fs = lint_case(sc);
    CHECK(fires(fs, "L-NO-REJECTION", "1.1"));
    CHECK(std::find_if(fs.begin(), fs.end(), [](const LintFinding& f) { return f.rule == "L-NO-REJECTION"; })->severity ==
          Severity::error);

    sc = two_leaf_case();
    sc.claims.at("1").justification_narrative.clear();
    CHECK(rules_at(lint_case(sc), "1") == std::vector<std::string>{"L-NO-NARRATIVE"});

    sc = two_leaf_case();
    link(sc, "1", "E1");
    fs = lint_case(sc);
    CHECK(fires(fs, "L-DUP-LINK", "1.1"));
    CHECK(fires(fs, "L-DUP-LINK", "1.2"));

    sc = two_leaf_case();
    sc.claims.at("1.2").poc.reset();
    CHECK(rules_at(lint_case(sc), "1.2") == std::vector<std::string>{"L-NO-POC"});

    sc = two_leaf_case();
    add_evidence(sc, "E9");
    CHECK(rules_at(lint_case(sc), "E9") == std::vector<std::string>{"L-ORPHAN-EVIDENCE"});
}

TEST_CASE("kind gap respects N/A flags") {
    SafetyCase sc = two_leaf_case();
    sc.links = {{"1.1", "E1", ""}, {"1.2", "E1", ""}, {"1.2", "E2", ""}};
    CHECK(fires(lint_case(sc), "L-KIND-GAP", "1.1"));

    AssessmentSet set;
    set.emplace("1.1", scored("1.1", 2, std::nullopt));
    CHECK_FALSE(fires(lint_case(sc, &set), "L-KIND-GAP", "1.1"));
    set["1.1"] = scored("1.1", std::nullopt, 2);
    CHECK(fires(lint_case(sc, &set), "L-KIND-GAP", "1.1"));
}

TEST_CASE("undeveloped never fires on developed claims") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        SafetyCase sc = random_case(rng, rng.uniform(1, 30));
        if (rng.coin()) {
            sc.links.erase(sc.links.begin() + rng.uniform(0, static_cast<int>(sc.links.size()) - 1));
        }
        for (const auto& f : lint_case(sc)) {
            if (f.rule != "L-UNDEVELOPED") continue;
            CHECK(sc.claims.at(f.location).children.empty());
            CHECK(sc.linked_evidence(f.location).empty());
        }
    }
}

TEST_CASE("adding a rejection repairs exactly one finding") {
    SafetyCase sc = two_leaf_case();
    sc.claims.at("1.1").counter_arguments = {{"First defeater.", "", {}}, {"Second defeater.", "", {}}};
    sc.claims.at("1.2").counter_arguments = {{"Third defeater.", "", {}}};
    auto before = lint_case(sc);
    CHECK(std::count_if(before.begin(), before.end(), [](const auto& f) { return f.rule == "L-NO-REJECTION"; }) == 3);

    sc.claims.at("1.1").counter_arguments[0].rejection = "Rejected on the basis of E1.";
    auto after = lint_case(sc);
    CHECK(after.size() + 1 == before.size());
    for (const auto& f : after) CHECK(std::find(before.begin(), before.end(), f) != before.end());
}

TEST_CASE("findings are ordered and deterministic") {
    SafetyCase sc = fixture_case();
    auto a = lint_case(sc);
    auto b = lint_case(sc);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(), [](const LintFinding& x, const LintFinding& y) {
        return std::tie(x.location, x.rule) < std::tie(y.location, y.rule);
    }));
    // Unassessed fixture: three single-kind claims.
    CHECK(a.size() == 3);
    for (const auto& f : a) CHECK(f.rule == "L-KIND-GAP");

    auto log = demo_log(sc);
    auto set = log.current();
    CHECK(lint_case(sc, &set).size() == 2);
}

TEST_CASE("registry and renderers") {
    const auto& rules = lint_rules();
    CHECK(rules.size() == 8);
    CHECK(std::is_sorted(rules.begin(), rules.end(), [](const LintRule& a, const LintRule& b) { return a.id < b.id; }));

    SafetyCase sc = two_leaf_case();
    add_claim(sc, "1.3", "1", "Every hazard is handled.");
    auto fs = lint_case(sc);
    auto jsonl = render_findings_jsonl(fs);
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == static_cast<long>(fs.size()));
    auto first = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
    CHECK(first["rule"] == fs[0].rule);
    CHECK(render_findings_text(fs).find("L-OVERSTATE") != std::string::npos);

    auto report = lint_report(sc);
    CHECK(report.count(Severity::error) == 1);
    CHECK(report.count(Severity::warning) == 1);
}
