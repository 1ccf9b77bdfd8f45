#include <algorithm>

#include "casekit/assessment.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace casekit;
using namespace testing;

namespace {

std::string code_of(const SafetyCase& sc, AssessmentLog& log, const ClaimAssessment& rec) {
    try {
        record_assessment(sc, log, rec);
    } catch (const AssessmentError& e) {
        return e.code() + "@" + e.location();
    }
    return "";
}

bool has_prompt(const std::vector<Prompt>& ps, const std::string& id) {
    return std::any_of(ps.begin(), ps.end(), [&](const Prompt& p) { return p.id == id; });
}

}  // namespace

TEST_CASE("recording and supersession") {
    SafetyCase sc = two_leaf_case();
    AssessmentLog log;
    record_assessment(sc, log, scored("1.1", 1, 1));
    const auto& stored = record_assessment(sc, log, scored("1.1", 2, 3));
    CHECK(stored.procedural == 2);
    CHECK_FALSE(stored.stale);
    CHECK(log.head() == 2);
    CHECK(log.current().at("1.1").implementation == 3);
    auto hist = log.history("1.1");
    REQUIRE(hist.size() == 2);
    CHECK(hist[0].procedural == 1);
}

TEST_CASE("record errors") {
    SafetyCase sc = two_leaf_case();
    AssessmentLog log;

    CHECK(code_of(sc, log, scored("9", 1, 1)) == "UNKNOWN_CLAIM@9");

    ClaimAssessment na = scored("1.1", 2, std::nullopt);
    na.na_justification.clear();
    CHECK(code_of(sc, log, na) == "INVARIANT_VIOLATION@na_justification");

    ClaimAssessment both = scored("1.1", 2, 2);
    both.implementation_na = true;
    both.na_justification = "x";
    CHECK(code_of(sc, log, both) == "INVARIANT_VIOLATION@implementation");

    ClaimAssessment neither = scored("1.1", 2, 2);
    neither.procedural.reset();
    CHECK(code_of(sc, log, neither) == "INVARIANT_VIOLATION@procedural");

    CHECK(code_of(sc, log, scored("1.1", 4, 2)) == "INVARIANT_VIOLATION@procedural");

    ClaimAssessment quiet = scored("1.1", 2, 2);
    quiet.summary = " ";
    CHECK(code_of(sc, log, quiet) == "INVARIANT_VIOLATION@summary");

    ClaimAssessment self = scored("1.1", 2, 2);
    self.assessors = {"Independent Assessor", "Claim Owner"};
    CHECK(code_of(sc, log, self) == "SELF_ASSESSMENT@1.1");

    CHECK(code_of(sc, log, scored("1.1", 2, 2, 2)) == "STALE_VERSION@1.1");

    CHECK(log.head() == 0);
}

TEST_CASE("assessment json") {
    SafetyCase sc = fixture_case();
    ClaimAssessment a = scored("AC1.1.1", 2, std::nullopt);
    CHECK(assessment_from_json(to_json(a)) == a);

    auto j = to_json(a);
    j["colour"] = "red";
    CHECK_THROWS_AS(assessment_from_json(j), AssessmentError);
    j = to_json(a);
    j.erase("case_version");
    try {
        assessment_from_json(j);
        FAIL("expected failure");
    } catch (const AssessmentError& e) {
        CHECK(e.location() == "case_version");
    }
    j = to_json(a);
    j.erase("assessors");
    j["assessor"] = "Single Person";
    CHECK(assessment_from_json(j).assessors == std::vector<std::string>{"Single Person"});
}

TEST_CASE("log persists as json lines") {
    SafetyCase sc = fixture_case();
    AssessmentLog log = demo_log(sc);
    log.append_stale_mark({"AC1.1.1", "test", 1});
    const std::string text = log.to_jsonl();
    CHECK(std::count(text.begin(), text.end(), '\n') == log.head());
    AssessmentLog back = AssessmentLog::from_jsonl(text);
    CHECK(back.entries() == log.entries());
    CHECK(back.to_jsonl() == text);
    CHECK(back.current().at("AC1.1.1").stale);

    // A later assessment clears the stale mark.
    record_assessment(sc, back, scored("AC1.1.1", 3, 3));
    CHECK_FALSE(back.current().at("AC1.1.1").stale);

    CHECK_THROWS_AS(AssessmentLog::from_jsonl("{\"seq\": 1}\n"), Error);
    CHECK_THROWS_AS(AssessmentLog::from_jsonl(AssessmentLog::entry_line(log.entries()[1])), Error);

    auto dir = std::filesystem::temp_directory_path() / "casekit_test_log";
    std::filesystem::create_directories(dir);
    auto path = dir / "demo.assessments.jsonl";
    std::filesystem::remove(path);
    CHECK(AssessmentLog::load(path).head() == 0);
    log.append_to_file(path, 0);
    CHECK(AssessmentLog::load(path).entries() == log.entries());
    std::filesystem::remove_all(dir);
}

TEST_CASE("demo assessments") {
    SafetyCase sc = fixture_case();
    AssessmentLog log = demo_log(sc);
    auto cur = log.current();
    CHECK(cur.size() == 14);
    CHECK(cur.at("AC1.2.2.4").procedural_na);
    bool group = std::any_of(cur.begin(), cur.end(), [](const auto& kv) { return kv.second.assessors.size() > 1; });
    CHECK(group);
}

TEST_CASE("rubric cells match the committed text") {
    for (auto d : {Dimension::procedural, Dimension::implementation}) {
        for (int level = 0; level <= 3; ++level) {
            auto cell = rubric_text(d, level);
            const auto path = source_dir() / "tests" / "fixtures" / "rubric" /
                              (std::string(to_string(d)) + "_" + std::to_string(level) + ".txt");
            CHECK(cell.guidance == read_text(path));
            CHECK(cell.level == level);
        }
    }
    CHECK(rubric_text(Dimension::procedural, 0).title == "Insufficient Support");
    CHECK(rubric_text(Dimension::procedural, 1).title == "Initial Support");
    CHECK(rubric_text(Dimension::implementation, 2).title == "Adequate Support");
    CHECK(rubric_text(Dimension::implementation, 3).title == "Strong Support");

    auto contains = [](Dimension d, int level, const char* phrase) {
        return rubric_text(d, level).guidance.find(phrase) != std::string::npos;
    };
    CHECK(contains(Dimension::procedural, 2, "addresses core aspects of the claim"));
    CHECK(contains(Dimension::procedural, 3, "directly applicable to all aspects"));
    CHECK(contains(Dimension::implementation, 0, "has not been provided"));
    CHECK_THROWS_AS(rubric_text(Dimension::procedural, 4), Error);
    CHECK_THROWS_AS(rubric_text(Dimension::procedural, -1), Error);
}

TEST_CASE("assessment prompts") {
    SafetyCase sc = two_leaf_case();
    add_evidence(sc, "E3");
    link(sc, "1.2", "E3");
    auto three = assessment_prompts(sc, "1.2");
    CHECK(has_prompt(three, "consistency"));
    for (const char* id : {"coverage", "relevance", "governance"}) CHECK(has_prompt(three, id));

    SafetyCase single = empty_case();
    add_claim(single, "R", std::nullopt);
    add_claim(single, "L", "R");
    add_evidence(single, "E1");
    link(single, "L", "E1");
    auto leaf = assessment_prompts(single, "L");
    CHECK_FALSE(has_prompt(leaf, "consistency"));
    CHECK_FALSE(has_prompt(leaf, "conservativeness"));
    CHECK(has_prompt(assessment_prompts(single, "R"), "conservativeness"));

    CHECK_THROWS_AS(assessment_prompts(sc, "nope"), AssessmentError);
}
