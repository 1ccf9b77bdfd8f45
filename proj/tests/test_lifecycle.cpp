#include "casekit/lifecycle.hpp"
#include "doctest.h"
#include "support/properties.hpp"

using namespace casekit;
using namespace testing;

namespace {

std::vector<ChangeKind> kinds(const ChangeSet& cs) {
    std::vector<ChangeKind> out;
    for (const auto& i : cs.items) out.push_back(i.kind);
    return out;
}

AssessmentLog two_leaf_log(const SafetyCase& sc) {
    AssessmentLog log;
    for (const auto& id : {"1", "1.1", "1.2"}) record_assessment(sc, log, scored(id, 2, 2, sc.version));
    return log;
}

}  // namespace

TEST_CASE("diff examples") {
    const SafetyCase base = two_leaf_case();
    CHECK(diff_cases(base, base).empty());

    SafetyCase edited = amend(base, [](SafetyCase& s) { s.claims.at("1.1").text = "Reworded claim."; });
    auto cs = diff_cases(base, edited);
    REQUIRE(cs.items.size() == 1);
    CHECK(cs.items[0].kind == ChangeKind::claim_text);
    CHECK(cs.items[0].location == "1.1");
    CHECK(classify(cs.items[0]) == ChangeClass::substantial);

    SafetyCase reviewed = amend(base, [](SafetyCase& s) { s.evidence.at("E1").last_review = Date(2025, 6, 1); });
    cs = diff_cases(base, reviewed);
    REQUIRE(cs.items.size() == 1);
    CHECK(cs.items[0].kind == ChangeKind::evidence_version);
    CHECK(cs.items[0].location == "E1");
    CHECK(classify(cs.items[0]) == ChangeClass::minor);
}

TEST_CASE("diff kinds") {
    const SafetyCase base = two_leaf_case();
    CHECK(kinds(diff_cases(base, amend(base, [](SafetyCase& s) { s.scope.environment = "Night only"; }))) ==
          std::vector<ChangeKind>{ChangeKind::scope});
    CHECK(kinds(diff_cases(base, amend(base, [](SafetyCase& s) { s.claims.at("1").justification_narrative = "New."; }))) ==
          std::vector<ChangeKind>{ChangeKind::narrative});
    CHECK(kinds(diff_cases(base, amend(base, [](SafetyCase& s) { std::erase(s.links, s.links.front()); }))) ==
          std::vector<ChangeKind>{ChangeKind::evidence_set});
    CHECK(kinds(diff_cases(base, amend(base, [](SafetyCase& s) {
              std::swap(s.claims.at("1").children[0], s.claims.at("1").children[1]);
          }))) == std::vector<ChangeKind>{ChangeKind::tree_structure});
    auto grown = diff_cases(base, amend(base, [](SafetyCase& s) { add_claim(s, "1.3", "1"); }));
    CHECK(kinds(grown) == std::vector<ChangeKind>{ChangeKind::tree_structure});
    CHECK(grown.items[0].location == "1.3");
    CHECK(grown.items[0].old_hash.empty());
    // Limitation order is not an edit.
    SafetyCase two = amend(base, [](SafetyCase& s) { s.claims.at("1.1").limitations = {"a", "b"}; });
    CHECK(diff_cases(two, amend(two, [](SafetyCase& s) { s.claims.at("1.1").limitations = {"b", "a"}; })).empty());
}

TEST_CASE("classification") {
    const SafetyCase base = two_leaf_case();
    auto ws = diff_cases(base, amend(base, [](SafetyCase& s) { s.claims.at("1.1").text = "Claim  1.1\nholds. "; }));
    REQUIRE(ws.items.size() == 1);
    CHECK(classify(ws.items[0]) == ChangeClass::minor);

    auto typo = diff_cases(base, amend(base, [](SafetyCase& s) {
        s.claims.at("1").justification_narrative = "Narrative  for 1.";
    }));
    CHECK(classify(typo.items.at(0)) == ChangeClass::minor);

    ChangeItem tree{ChangeKind::tree_structure, "1", "a", "b", std::nullopt, std::nullopt};
    CHECK(classify(tree) == ChangeClass::substantial);
    tree.kind = ChangeKind::evidence_set;
    CHECK(classify(tree) == ChangeClass::substantial);
    tree.kind = ChangeKind::scope;
    CHECK(classify(tree) == ChangeClass::substantial);
}

TEST_CASE("staleness propagates upward only") {
    const SafetyCase base = two_leaf_case();
    SafetyCase next = amend(base, [](SafetyCase& s) { s.claims.at("1.1").text = "Reworded."; });
    AssessmentLog log = two_leaf_log(base);
    auto r = mark_stale(log, base, next, diff_cases(base, next), {});
    CHECK(r.stale_claims == std::vector<std::string>{"1", "1.1"});
    auto cur = log.current();
    CHECK(cur.at("1").stale);
    CHECK(cur.at("1.1").stale);
    CHECK_FALSE(cur.at("1.2").stale);
    REQUIRE(r.worklist.size() == 2);
    CHECK(r.worklist.back().id == "1");

    // Editing the parent leaves both children current.
    AssessmentLog log2 = two_leaf_log(base);
    SafetyCase parent_edit = amend(base, [](SafetyCase& s) { s.claims.at("1").text = "Top claim reworded."; });
    CHECK(mark_stale(log2, base, parent_edit, diff_cases(base, parent_edit), {}).stale_claims ==
          std::vector<std::string>{"1"});
}

TEST_CASE("minor evidence change only enqueues re-scoring") {
    const SafetyCase base = two_leaf_case();
    SafetyCase next = amend(base, [](SafetyCase& s) { s.evidence.at("E2").last_review = Date(2025, 6, 1); });
    AssessmentLog log = two_leaf_log(base);
    auto r = mark_stale(log, base, next, diff_cases(base, next), {});
    CHECK(r.stale_claims.empty());
    CHECK(log.head() == 3);
    REQUIRE(r.worklist.size() == 1);
    CHECK(r.worklist[0] == WorkItem{WorkItem::Kind::rescore_evidence, "E2"});
}

TEST_CASE("scope change reaches every claim") {
    const SafetyCase base = two_leaf_case();
    SafetyCase next = amend(base, [](SafetyCase& s) { s.scope.application = "Freight"; });
    AssessmentLog log = two_leaf_log(base);
    CHECK(mark_stale(log, base, next, diff_cases(base, next), {}).stale_claims.size() == 3);
}

TEST_CASE("triggers") {
    const SafetyCase sc = fixture_case();
    TriggerEvent odd{"T-1", TriggerKind::odd, "Expanded to night operations", {"Coverage Claims"}, kDemoDate};
    auto members = resolve_trigger(sc, odd);
    CHECK(members == std::vector<std::string>{"AC1.2.1", "AC1.2.1.1", "AC1.2.1.2", "AC1.2.1.3"});

    AssessmentLog log = full_log(sc);
    auto r = mark_stale(log, sc, sc, {}, {odd});
    // The family plus its ancestors AC1.2 and AC1; nothing else.
    CHECK(r.stale_claims ==
          std::vector<std::string>{"AC1", "AC1.2", "AC1.2.1", "AC1.2.1.1", "AC1.2.1.2", "AC1.2.1.3"});
    for (const auto& [id, a] : log.current()) {
        const bool want = std::find(r.stale_claims.begin(), r.stale_claims.end(), id) != r.stale_claims.end();
        CHECK(a.stale == want);
    }
    CHECK(r.worklist.back().id == "AC1");

    // Already-stale assessments are not marked twice.
    const auto head = log.head();
    CHECK(mark_stale(log, sc, sc, {}, {odd}).stale_claims.empty());
    CHECK(log.head() == head);

    TriggerEvent bad{"T-2", TriggerKind::hardware, "", {"Nonexistent"}, kDemoDate};
    CHECK_THROWS_AS(resolve_trigger(sc, bad), Error);
    bad.affected.clear();
    CHECK_THROWS_AS(resolve_trigger(sc, bad), Error);
}

TEST_CASE("trigger log") {
    TriggerLog log;
    const auto& t = log.append({"", TriggerKind::software, "Planner update", {"AC1.1"}, kDemoDate});
    CHECK(t.id == "T-1");
    CHECK(log.next_id() == "T-2");
    CHECK_THROWS_AS(log.append({"", TriggerKind::software, "", {}, kDemoDate}), Error);
    auto back = TriggerLog::from_jsonl(log.to_jsonl());
    CHECK(back.events() == log.events());
    CHECK(trigger_from_json(to_json(t)) == t);
    CHECK_THROWS_AS(trigger_from_json(nlohmann::json{{"kind", "weather"}}), Error);
}

TEST_CASE("pending reassessment lists stale claims root last") {
    const SafetyCase sc = fixture_case();
    AssessmentLog log = full_log(sc);
    log.append_stale_mark({"AC1", "test", 1});
    log.append_stale_mark({"AC1.1.2", "test", 1});
    auto r = pending_reassessment(sc, log.current());
    REQUIRE(r.worklist.size() == 2);
    CHECK(r.worklist[0].id == "AC1.1.2");
    CHECK(r.worklist[1].id == "AC1");
}

TEST_CASE("fixture lifecycle sweep") {
    auto t = lifecycle_sweep();
    CHECK(t.substantial.cases > 100);
    CHECK_MESSAGE(t.substantial.failures == 0, t.substantial.first_failure);
    CHECK(t.minor.cases > 20);
    CHECK_MESSAGE(t.minor.failures == 0, t.minor.first_failure);
}
