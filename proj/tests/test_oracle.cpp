#include "dioph/oracle.hpp"

#include <doctest.h>

using namespace dioph;

TEST_CASE("box search finds all zeros in lexicographic order") {
    box_query q;
    q.p = parse_polynomial("x^2 + y^2 - 2");
    q.radius = 2;
    box_result r = box_search(q);
    CHECK(r.exhausted);
    REQUIRE(r.witnesses.size() == 4);
    CHECK(r.witnesses[0] == assignment{-1, -1});
    CHECK(r.witnesses[1] == assignment{-1, 1});
    CHECK(r.witnesses[2] == assignment{1, -1});
    CHECK(r.witnesses[3] == assignment{1, 1});
}

TEST_CASE("natural-domain box excludes negatives") {
    box_query q;
    q.p = parse_polynomial("x - 5");
    q.radius = 3;
    q.domain = solution_domain::naturals;
    box_result r = box_search(q);
    CHECK(r.exhausted);
    CHECK(r.witnesses.empty());

    q.radius = 6;
    r = box_search(q);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == assignment{5});
}

TEST_CASE("three cubes box example") {
    box_query q;
    q.p = parse_polynomial("x^3 + y^3 + z^3 - 29");
    q.radius = 4;
    box_result r = box_search(q);
    CHECK(r.exhausted);
    bool has_113 = false;
    for (const assignment& w : r.witnesses) {
        CHECK(q.p.evaluate(w) == 0);
        if (w == assignment{1, 1, 3}) has_113 = true;
    }
    CHECK(has_113);
}

TEST_CASE("constant polynomials use a single-point box") {
    box_query q;
    q.p = parse_polynomial("0");
    q.radius = 100;
    box_result r = box_search(q);
    CHECK(r.exhausted);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].empty());
}

TEST_CASE("budget guard") {
    box_query q;
    q.p = parse_polynomial("x + y + z - w");
    q.radius = 1000;
    q.budget = 1000000;
    CHECK_THROWS_AS(box_search(q), std::domain_error);
}

TEST_CASE("cap stops the scan and reports non-exhaustion") {
    box_query q;
    q.p = parse_polynomial("x^2 - 1");  // zeros at -1 and 1
    q.radius = 2;
    q.cap = 1;
    box_result r = box_search(q);
    CHECK(r.witnesses.size() == 1);
    CHECK_FALSE(r.exhausted);
    CHECK(r.witnesses[0] == assignment{-1});
}
