#include "doctest.h"
#include "support/support.hpp"

using namespace casekit;
using namespace testing;

TEST_CASE("date parsing and formatting") {
    CHECK(Date::parse("2025-02-28").str() == "2025-02-28");
    CHECK_THROWS_AS(Date::parse("2025-02-30"), std::invalid_argument);
    CHECK_THROWS_AS(Date::parse("2025-2-1"), std::invalid_argument);
    CHECK_THROWS_AS(Date::parse("2025-02-01x"), std::invalid_argument);
    CHECK(Date::parse("2024-02-29").str() == "2024-02-29");
    CHECK_THROWS_AS(Date::parse("2023-02-29"), std::invalid_argument);
}

TEST_CASE("epoch day conversions round-trip") {
    for (std::int64_t d = -800; d < 30000; d += 17) CHECK(Date::from_days(d).days_since_epoch() == d);
    CHECK(Date(1970, 1, 1).days_since_epoch() == 0);
    CHECK(Date(2000, 3, 1).days_since_epoch() == 11017);
}

TEST_CASE("whole calendar months") {
    CHECK(whole_months_between(Date(2025, 1, 15), Date(2025, 7, 14)) == 5);
    CHECK(whole_months_between(Date(2025, 1, 15), Date(2025, 7, 15)) == 6);
    CHECK(whole_months_between(Date(2024, 1, 31), Date(2024, 2, 29)) == 1);
    CHECK(whole_months_between(Date(2024, 1, 31), Date(2024, 2, 28)) == 0);
    CHECK(whole_months_between(Date(2024, 6, 30), Date(2025, 6, 30)) == 12);
    CHECK(whole_months_between(Date(2024, 6, 30), Date(2025, 6, 29)) == 11);
    CHECK(whole_months_between(Date(2025, 3, 1), Date(2025, 3, 1)) == 0);
    CHECK(whole_months_between(Date(2025, 3, 1), Date(2025, 1, 1)) < 0);
    // add_months and whole_months_between agree at every day of a leap year.
    for (Date d(2024, 1, 1); d < Date(2025, 1, 1); d = d.add_days(1)) {
        for (int m : {1, 6, 11, 12, 13}) CHECK(whole_months_between(d, d.add_months(m)) == m);
    }
}

TEST_CASE("fixture validates cleanly") {
    SafetyCase sc = fixture_case();
    CHECK(validate_case(sc).ok());
    CHECK(sc.claims.size() == 19);
    CHECK(sc.evidence.size() == 12);
    CHECK(sc.root_id() == std::optional<std::string>("AC1"));
}

TEST_CASE("validation reports stable codes") {
    SUBCASE("two roots") {
        SafetyCase sc = two_leaf_case();
        add_claim(sc, "2", std::nullopt);
        add_evidence(sc, "E3");
        link(sc, "2", "E3");
        auto r = validate_case(sc);
        CHECK(r.has("MULTIPLE_ROOTS"));
    }
    SUBCASE("dangling link") {
        SafetyCase sc = two_leaf_case();
        link(sc, "1.1", "E404");
        auto r = validate_case(sc);
        REQUIRE(r.has("DANGLING_LINK"));
        CHECK_FALSE(r.has("MULTIPLE_ROOTS"));
    }
    SUBCASE("no root and cycle") {
        SafetyCase sc = two_leaf_case();
        sc.claims.at("1").parent = "1.2";
        sc.claims.at("1.2").children.push_back("1");
        auto r = validate_case(sc);
        CHECK(r.has("NO_ROOT"));
        CHECK(r.has("CYCLE"));
        CHECK_THROWS_AS(traverse(sc, TraversalOrder::pre), Error);
    }
    SUBCASE("parent and child lists disagree") {
        SafetyCase sc = two_leaf_case();
        sc.claims.at("1").children.pop_back();
        CHECK(validate_case(sc).has("PARENT_CHILD_MISMATCH"));
    }
    SUBCASE("unknown child") {
        SafetyCase sc = two_leaf_case();
        sc.claims.at("1").children.push_back("9");
        CHECK(validate_case(sc).has("UNKNOWN_CHILD"));
    }
    SUBCASE("empty scope field") {
        SafetyCase sc = two_leaf_case();
        sc.scope.environment = "";
        auto r = validate_case(sc);
        REQUIRE(r.has("EMPTY_SCOPE_FIELD"));
        CHECK(r.violations.front().location == "scope.environment");
    }
    SUBCASE("empty claim text") {
        SafetyCase sc = two_leaf_case();
        sc.claims.at("1.1").text = "  ";
        CHECK(validate_case(sc).has("EMPTY_CLAIM_TEXT"));
    }
    SUBCASE("missing evidence with status") {
        SafetyCase sc = two_leaf_case();
        sc.evidence.at("E1").exists = false;
        CHECK(validate_case(sc).has("MISSING_EVIDENCE_HAS_STATUS"));
        auto& e = sc.evidence.at("E1");
        e.last_review.reset();
        e.active_confirmed = false;
        e.owner_affiliated = false;
        CHECK(validate_case(sc).ok());
    }
    SUBCASE("review before creation") {
        SafetyCase sc = two_leaf_case();
        sc.evidence.at("E1").last_review = Date(2023, 1, 1);
        CHECK(validate_case(sc).has("REVIEW_BEFORE_CREATED"));
    }
    SUBCASE("open counter-argument only blocks assessed claims") {
        SafetyCase sc = two_leaf_case();
        sc.claims.at("1.1").counter_arguments.push_back({"The opposite holds.", "", {}});
        CHECK(validate_case(sc).ok());
        sc.claims.at("1.1").status = ClaimStatus::assessed;
        CHECK(validate_case(sc).has("UNREJECTED_COUNTER_ARGUMENT"));
        sc.claims.at("1.1").counter_arguments[0].rejection = "It does not, see E1.";
        sc.claims.at("1.1").counter_arguments[0].rejection_evidence = {"E9"};
        CHECK(validate_case(sc).has("DANGLING_REJECTION_EVIDENCE"));
    }
    SUBCASE("duplicate link") {
        SafetyCase sc = two_leaf_case();
        link(sc, "1.1", "E1");
        CHECK(validate_case(sc).has("DUPLICATE_LINK"));
    }
    SUBCASE("invalid version") {
        SafetyCase sc = two_leaf_case();
        sc.version = 0;
        CHECK(validate_case(sc).has("INVALID_VERSION"));
    }
}

TEST_CASE("traversal orders") {
    SafetyCase root_only = empty_case();
    add_claim(root_only, "R", std::nullopt);
    CHECK(traverse(root_only, TraversalOrder::pre) == std::vector<std::string>{"R"});

    SafetyCase sc = two_leaf_case();
    CHECK(traverse(sc, TraversalOrder::pre) == std::vector<std::string>{"1", "1.1", "1.2"});
    CHECK(traverse(sc, TraversalOrder::post) == std::vector<std::string>{"1.1", "1.2", "1"});

    // Child order, not id order, drives traversal.
    std::swap(sc.claims.at("1").children[0], sc.claims.at("1").children[1]);
    CHECK(traverse(sc, TraversalOrder::pre) == std::vector<std::string>{"1", "1.2", "1.1"});
}

TEST_CASE("tree property over random cases") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        SafetyCase sc = random_case(rng, rng.uniform(1, 40));
        REQUIRE(validate_case(sc).ok());
        std::size_t edges = 0;
        for (const auto& [id, c] : sc.claims) edges += c.children.size();
        CHECK(sc.claims.size() == edges + 1);
        auto pre = traverse(sc, TraversalOrder::pre);
        auto post = traverse(sc, TraversalOrder::post);
        CHECK(pre.size() == sc.claims.size());
        CHECK(std::set<std::string>(pre.begin(), pre.end()).size() == sc.claims.size());
        // Every parent precedes its children in pre-order and follows them in post-order.
        std::map<std::string, std::size_t> at_pre, at_post;
        for (std::size_t i = 0; i < pre.size(); ++i) at_pre[pre[i]] = i;
        for (std::size_t i = 0; i < post.size(); ++i) at_post[post[i]] = i;
        for (const auto& [id, c] : sc.claims) {
            if (!c.parent) continue;
            CHECK(at_pre[*c.parent] < at_pre[id]);
            CHECK(at_post[*c.parent] > at_post[id]);
        }
    }
}

TEST_CASE("content hashes cover semantic fields only") {
    SafetyCase sc = two_leaf_case();
    const Claim base = sc.claims.at("1.1");
    const std::string h = content_hash(base);
    CHECK(content_hash(base) == h);

    Claim c = base;
    c.status = ClaimStatus::assessed;
    c.poc = Person{"Someone Else", false};
    c.family = "Other";
    CHECK(content_hash(c) == h);

    c = base;
    c.text += " Edited.";
    CHECK(content_hash(c) != h);
    c = base;
    c.justification_narrative = "Different.";
    CHECK(content_hash(c) != h);
    c = base;
    c.limitations.push_back("New limitation.");
    CHECK(content_hash(c) != h);

    // Limitation and counter-argument order does not matter; child order does.
    Claim a = base, b = base;
    a.limitations = {"x", "y"};
    b.limitations = {"y", "x"};
    CHECK(content_hash(a) == content_hash(b));
    a.counter_arguments = {{"p", "q", {}}, {"r", "s", {}}};
    b.counter_arguments = {{"r", "s", {}}, {"p", "q", {}}};
    b.limitations = a.limitations;
    CHECK(content_hash(a) == content_hash(b));
    Claim parent = sc.claims.at("1"), swapped = parent;
    std::swap(swapped.children[0], swapped.children[1]);
    CHECK(content_hash(parent) != content_hash(swapped));

    // Evidence review metadata changes neither the evidence content hash nor the claim's.
    Evidence e = sc.evidence.at("E1");
    const std::string eh = content_hash(e), rh = record_hash(e);
    e.last_review = Date(2025, 5, 1);
    e.active_confirmed = false;
    CHECK(content_hash(e) == eh);
    CHECK(record_hash(e) != rh);
    CHECK(content_hash(sc.claims.at("1.1")) == h);
}

TEST_CASE("content hashes distinguish every fixture claim") {
    SafetyCase sc = fixture_case();
    std::set<std::string> hashes;
    for (const auto& [id, c] : sc.claims) hashes.insert(content_hash(c));
    CHECK(hashes.size() == sc.claims.size());
    std::set<std::string> ev;
    for (const auto& [id, e] : sc.evidence) ev.insert(content_hash(e));
    CHECK(ev.size() == sc.evidence.size());
}

TEST_CASE("amend bumps the version and leaves the base untouched") {
    const SafetyCase base = two_leaf_case();
    SafetyCase next = amend(base, [](SafetyCase& c) { c.claims.at("1.1").text = "Changed."; });
    CHECK(next.version == base.version + 1);
    CHECK(base.claims.at("1.1").text != "Changed.");
    CHECK(next.claims.at("1.1").text == "Changed.");
}

TEST_CASE("sha256 known answer") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
