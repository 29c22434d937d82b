#include "dioph/linsolve.hpp"

#include "dioph/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dioph;

TEST_CASE("integer roots of univariate polynomials") {
    auto r1 = integer_roots(parse_polynomial("x^2 - 4"));
    CHECK_FALSE(r1.all_integers);
    CHECK(r1.roots == std::vector<Integer>{-2, 2});

    auto r2 = integer_roots(parse_polynomial("2*x - 3"));
    CHECK(r2.roots.empty());

    auto r3 = integer_roots(parse_polynomial("x^3 - x^2"));
    CHECK(r3.roots == std::vector<Integer>{0, 1});

    auto rz = integer_roots(polynomial{});
    CHECK(rz.all_integers);

    auto rc = integer_roots(parse_polynomial("7"));
    CHECK_FALSE(rc.all_integers);
    CHECK(rc.roots.empty());

    CHECK_THROWS_AS(integer_roots(parse_polynomial("x + y")), std::invalid_argument);
}

TEST_CASE("integer roots agree with the box oracle on random polynomials") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int d = deg(rng);
        polynomial p;
        for (int e = 0; e <= d; ++e)
            p = p + polynomial::constant(coeff(rng)) * polynomial::variable("x").pow(e);
        if (p.is_zero() || p.num_vars() == 0) continue;

        auto roots = integer_roots(p);
        // Every root evaluates to zero.
        for (const Integer& r : roots.roots) CHECK(p.evaluate({r}) == 0);
        // The oracle on a root-covering box finds exactly the same set.
        box_query q;
        q.p = p;
        q.radius = 1001;  // |root| <= |trailing coefficient| <= 1000
        q.budget = 10000;
        box_result br = box_search(q);
        std::vector<Integer> oracle_roots;
        for (const assignment& w : br.witnesses) oracle_roots.push_back(w[0]);
        CHECK(oracle_roots == roots.roots);
    }
}

TEST_CASE("linear over Z") {
    auto s1 = solve_linear_Z({3, 5}, 1);
    CHECK(s1.solvable);
    CHECK(s1.witness == std::vector<Integer>{2, -1});

    auto s2 = solve_linear_Z({2, 4}, 7);
    CHECK_FALSE(s2.solvable);
    CHECK(s2.reason.find("gcd 2") != std::string::npos);

    auto s3 = solve_linear_Z({}, 0);
    CHECK(s3.solvable);
    CHECK(s3.witness.empty());

    auto s4 = solve_linear_Z({0, 0}, 0);
    CHECK(s4.solvable);
    CHECK(s4.witness == std::vector<Integer>{0, 0});

    auto s5 = solve_linear_Z({0, 0}, 3);
    CHECK_FALSE(s5.solvable);
}

TEST_CASE("frobenius_number") {
    CHECK(frobenius_number(3, 5) == 7);
    CHECK(frobenius_number(2, 3) == 1);
    CHECK(frobenius_number(1, 7) == -1);
    CHECK_THROWS_AS(frobenius_number(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_number(0, 5), std::invalid_argument);
}

TEST_CASE("frobenius descriptors") {
    auto d35 = compute_frobenius_descriptor({3, 5});
    CHECK(d35.g == 1);
    CHECK(d35.threshold == 8);
    CHECK(d35.exceptions == std::vector<Integer>{0, 3, 5, 6});
    CHECK_FALSE(d35.contains(7));
    CHECK(d35.contains(8));

    auto d46 = compute_frobenius_descriptor({4, 6});
    CHECK(d46.g == 2);
    CHECK(d46.threshold == 2);
    CHECK(d46.exceptions == std::vector<Integer>{0});
    CHECK_FALSE(d46.contains(2));
    CHECK(d46.contains(4));
    CHECK_FALSE(d46.contains(5));

    auto d1 = compute_frobenius_descriptor({1});
    CHECK(d1.g == 1);
    CHECK(d1.threshold == 0);
    CHECK(d1.exceptions.empty());
    CHECK(d1.contains(0));
    CHECK(d1.contains(12345));

    CHECK_THROWS_AS(compute_frobenius_descriptor({}), std::invalid_argument);
    CHECK_THROWS_AS(compute_frobenius_descriptor({0, 3}), std::invalid_argument);
}

TEST_CASE("descriptor membership equals direct search, and the threshold is minimal") {
    std::vector<std::vector<Integer>> cases = {
        {3, 5}, {4, 6}, {6, 10, 15}, {5, 7}, {8, 12}, {7, 11, 13}, {2, 4, 8}, {9, 12, 30}};
    for (const auto& gens : cases) {
        auto d = compute_frobenius_descriptor(gens);
        // g*(M-1) is not representable (minimality).
        if (d.threshold > 0) CHECK_FALSE(d.contains(d.g * (d.threshold - 1)));
        // Exhaustive comparison on [0, g*(M+10)].
        Integer limit = d.g * (d.threshold + 10);
        for (Integer v = 0; v <= limit; ++v) {
            // Depth-first enumeration of nonnegative combinations.
            auto rec = [&](auto&& self, size_t i, Integer rest) -> bool {
                if (rest == 0) return true;
                if (i == gens.size()) return false;
                for (Integer c = 0; c * gens[i] <= rest; ++c)
                    if (self(self, i + 1, rest - c * gens[i])) return true;
                return false;
            };
            bool direct = rec(rec, 0, v);
            CHECK(d.contains(v) == direct);
        }
    }
}

TEST_CASE("linear over N") {
    auto s1 = solve_linear_N({3, 5}, 7);
    CHECK_FALSE(s1.solvable);

    auto s2 = solve_linear_N({3, 5}, 8);
    CHECK(s2.solvable);
    CHECK(3 * s2.witness[0] + 5 * s2.witness[1] == 8);

    auto s3 = solve_linear_N({3, -2}, 1);
    CHECK(s3.solvable);
    CHECK(3 * s3.witness[0] - 2 * s3.witness[1] == 1);
    CHECK(s3.witness[0] >= 0);
    CHECK(s3.witness[1] >= 0);

    auto s4 = solve_linear_N({0, 0}, 0);
    CHECK(s4.solvable);
    auto s5 = solve_linear_N({0, 0}, 2);
    CHECK_FALSE(s5.solvable);

    // Negative constant: -3x - 5y = -8.
    auto s6 = solve_linear_N({-3, -5}, -8);
    CHECK(s6.solvable);
    CHECK(-3 * s6.witness[0] - 5 * s6.witness[1] == -8);

    // All-negative left side with positive constant is impossible.
    auto s7 = solve_linear_N({-3, -5}, 8);
    CHECK_FALSE(s7.solvable);
}

TEST_CASE("linear over N agrees with the box oracle on a sampled grid") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> coeff(-12, 12);
    std::uniform_int_distribution<int> nvars(1, 3);
    static const std::vector<std::string> names = {"x", "y", "z"};
    for (int trial = 0; trial < 120; ++trial) {
        int n = nvars(rng);
        std::vector<Integer> cs;
        for (int i = 0; i < n; ++i) cs.emplace_back(coeff(rng));
        Integer k = coeff(rng);

        auto sol = solve_linear_N(cs, k);
        if (sol.solvable) {
            Integer check = 0;
            for (int i = 0; i < n; ++i) check += cs[i] * sol.witness[i];
            CHECK(check == k);
            for (const Integer& w : sol.witness) CHECK(w >= 0);
        } else {
            polynomial p = polynomial::constant(-k);
            for (int i = 0; i < n; ++i)
                p = p + polynomial::constant(cs[i]) * polynomial::variable(names[i]);
            if (p.num_vars() == 0) {
                CHECK(p.constant_term() != 0);
                continue;
            }
            box_query q;
            q.p = p;
            q.radius = 50;
            q.domain = solution_domain::naturals;
            q.budget = 200000;
            CHECK(box_search(q).witnesses.empty());
        }
    }
}
