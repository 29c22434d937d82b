#include "dioph/pell.hpp"

#include <doctest.h>

using namespace dioph;

namespace {

// Ascending brute force on u: the reference for fundamental solutions.
pell_pair brute_fundamental(long D) {
    for (Integer u = 1;; ++u) {
        Integer t2 = D * u * u + 1;
        if (auto t = exact_sqrt(t2)) return {*t, u};
    }
}

}  // namespace

TEST_CASE("fundamental solutions for small D") {
    auto f2 = pell_fundamental(2);
    CHECK(f2.t == 3);
    CHECK(f2.u == 2);
    auto f5 = pell_fundamental(5);
    CHECK(f5.t == 9);
    CHECK(f5.u == 4);
    for (long D = 2; D <= 50; ++D) {
        Integer Di(D);
        if (is_perfect_square(Di)) continue;
        auto f = pell_fundamental(Di);
        auto b = brute_fundamental(D);
        CHECK(f.t == b.t);
        CHECK(f.u == b.u);
        CHECK(f.t * f.t - Di * f.u * f.u == 1);
    }
}

TEST_CASE("fundamental solution for D = 61") {
    auto f = pell_fundamental(61);
    CHECK(f.t == Integer("1766319049"));
    CHECK(f.u == Integer("226153980"));
    CHECK(f.t * f.t - 61 * f.u * f.u == 1);
}

TEST_CASE("rejects squares and tiny D") {
    CHECK_THROWS_AS(pell_fundamental(4), std::invalid_argument);
    CHECK_THROWS_AS(pell_fundamental(1), std::invalid_argument);
    CHECK_THROWS_AS(pell_fundamental(0), std::invalid_argument);
    CHECK_THROWS_AS(solve_pell_like(9, 5), std::invalid_argument);
}

TEST_CASE("pell-like representatives") {
    auto r1 = solve_pell_like(2, -1);
    bool has11 = false;
    for (const pell_pair& p : r1)
        if (p.t == 1 && p.u == 1) has11 = true;
    CHECK(has11);

    auto r2 = solve_pell_like(2, 7);
    bool has31 = false;
    for (const pell_pair& p : r2)
        if (p.t == 3 && p.u == 1) has31 = true;
    CHECK(has31);

    CHECK(solve_pell_like(3, -1).empty());

    auto r0 = solve_pell_like(2, 0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].t == 0);
    CHECK(r0[0].u == 0);
}

TEST_CASE("automorph preserves the equation") {
    for (long D : {2, 3, 5, 6, 7, 10, 13}) {
        Integer Di(D);
        pell_pair f = pell_fundamental(Di);
        for (long N : {-7, -1, 1, 4, 9, 12}) {
            for (const pell_pair& rep : solve_pell_like(Di, N)) {
                pell_pair cur = rep;
                for (int step = 0; step < 5; ++step) {
                    cur = automorph_step(Di, f, cur, true);
                    CHECK(cur.t * cur.t - Di * cur.u * cur.u == N);
                }
                cur = rep;
                for (int step = 0; step < 5; ++step) {
                    cur = automorph_step(Di, f, cur, false);
                    CHECK(cur.t * cur.t - Di * cur.u * cur.u == N);
                }
            }
        }
    }
}

TEST_CASE("every box solution lies in some representative orbit") {
    // Direct completeness check of the bracket bounds at small scale.
    for (long D : {2, 3, 5, 7, 8, 10}) {
        Integer Di(D);
        pell_pair f = pell_fundamental(Di);
        for (long N = -25; N <= 25; ++N) {
            if (N == 0) continue;
            auto reps = solve_pell_like(Di, N);
            for (long T = -60; T <= 60; ++T) {
                for (long U = -60; U <= 60; ++U) {
                    if (Integer(T) * T - Di * U * U != N) continue;
                    // Walk each rep orbit both ways within the box range.
                    bool found = false;
                    for (const pell_pair& rep : reps) {
                        for (int dir = 0; dir < 2 && !found; ++dir) {
                            pell_pair cur = rep;
                            for (int step = 0; step < 24 && !found; ++step) {
                                if (cur.t == T && cur.u == U) found = true;
                                // Mirrors (T, U) -> (-T, -U) stay in the
                                // solution set and in some orbit.
                                if (-cur.t == T && -cur.u == U) found = true;
                                cur = automorph_step(Di, f, cur, dir == 0);
                            }
                        }
                    }
                    CHECK(found);
                }
            }
        }
    }
}
