#include "dioph/reduce.hpp"

#include "dioph/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace dioph;

TEST_CASE("naturals_to_integers substitutes the three-squares gadget") {
    n_to_z_reduction r = naturals_to_integers(parse_polynomial("x - 5"));
    CHECK(r.target.degree() == 2);
    CHECK(r.target.num_vars() == 3);
    CHECK(r.target == parse_polynomial("x_1^2 + x_2^2 + x_3^2 + x_3 - 5"));

    // (2,1,0) maps to 4 + 1 + 0 + 0 = 5.
    box_query q;
    q.p = r.target;
    q.radius = 3;
    box_result br = box_search(q);
    bool found = false;
    for (const assignment& w : br.witnesses)
        if (w == assignment{2, 1, 0}) found = true;
    CHECK(found);

    n_to_z_reduction rc = naturals_to_integers(parse_polynomial("1"));
    CHECK(rc.target == parse_polynomial("1"));
    CHECK(rc.target.num_vars() == 0);
}

TEST_CASE("reduction degree and variable counts") {
    n_to_z_reduction r = naturals_to_integers(parse_polynomial("x^2*y + z - 4"));
    CHECK(r.target.degree() == 2 * 3);
    CHECK(r.target.num_vars() == 9);
}

TEST_CASE("fresh target names avoid collisions") {
    n_to_z_reduction r = naturals_to_integers(parse_polynomial("x + x_1"));
    CHECK(r.target.num_vars() == 6);
    for (const auto& triple : r.var_map)
        for (const auto& name : triple) {
            CHECK(name != "x");
            CHECK(name != "x_1");
        }
}

TEST_CASE("lift_witness") {
    n_to_z_reduction r = naturals_to_integers(parse_polynomial("x - 5"));
    assignment s = lift_witness(r, {2, 1, 0});
    CHECK(s == assignment{5});
    CHECK(r.source.evaluate(s) == 0);

    n_to_z_reduction r0 = naturals_to_integers(parse_polynomial("x"));
    CHECK(lift_witness(r0, {0, 0, 0}) == assignment{0});

    // 1 + 1 + 1 + 1 - 5 = -1: not a target zero.
    CHECK_THROWS_AS(lift_witness(r, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("integers_to_naturals sign variants") {
    std::vector<polynomial> v = integers_to_naturals(parse_polynomial("x + 1"));
    REQUIRE(v.size() == 2);
    CHECK(v[0] == parse_polynomial("x + 1"));
    CHECK(v[1] == parse_polynomial("-x + 1"));
    // Only the flipped variant has a natural solution, x = 1.
    CHECK(v[1].evaluate({1}) == 0);

    std::vector<polynomial> v2 = integers_to_naturals(parse_polynomial("x^2 + y^2 - 2"));
    REQUIRE(v2.size() == 4);
    for (const polynomial& q : v2) CHECK(q.evaluate({1, 1}) == 0);

    std::vector<polynomial> vc = integers_to_naturals(parse_polynomial("7"));
    REQUIRE(vc.size() == 1);
    CHECK(vc[0] == parse_polynomial("7"));

    CHECK_THROWS_AS(integers_to_naturals(parse_polynomial("x + y"), 1), std::invalid_argument);
}

TEST_CASE("sign-variant union matches the integer box") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        polynomial p = polynomial::constant(coeff(rng)) +
                       polynomial::constant(coeff(rng)) * polynomial::variable("x") +
                       polynomial::constant(coeff(rng)) * polynomial::variable("y") +
                       polynomial::constant(coeff(rng)) * polynomial::variable("x") *
                           polynomial::variable("y");
        box_query zq;
        zq.p = p;
        zq.radius = 4;
        bool z_solvable = !box_search(zq).witnesses.empty();

        bool n_solvable = false;
        for (const polynomial& variant : integers_to_naturals(p)) {
            box_query nq;
            nq.p = variant;
            nq.radius = 4;
            nq.domain = solution_domain::naturals;
            if (!box_search(nq).witnesses.empty()) n_solvable = true;
        }
        CHECK(z_solvable == n_solvable);
    }
}

TEST_CASE("is_sum_of_three_squares matches Legendre's criterion") {
    CHECK_FALSE(is_sum_of_three_squares(7));
    CHECK(is_sum_of_three_squares(6));
    CHECK_FALSE(is_sum_of_three_squares(28));  // 4 * 7

    // Exhaustive cross-check against direct search.
    for (long x = 0; x <= 10000; ++x) {
        bool direct = false;
        for (long a = 0; a * a <= x && !direct; ++a)
            for (long b = a; a * a + b * b <= x && !direct; ++b) {
                long rest = x - a * a - b * b;
                long c = static_cast<long>(std::sqrt(double(rest)));
                while (c * c > rest) --c;
                while ((c + 1) * (c + 1) <= rest) ++c;
                if (c * c == rest) direct = true;
            }
        CHECK(is_sum_of_three_squares(x) == direct);
    }
}

TEST_CASE("three_squares_plus representations") {
    auto r0 = three_squares_plus(0);
    CHECK(r0.x1 == 0);
    CHECK(r0.x2 == 0);
    CHECK(r0.x3 == 0);
    auto r1 = three_squares_plus(1);
    CHECK(r1.x1 == 1);
    CHECK(r1.x2 == 0);
    CHECK(r1.x3 == 0);
    auto r5 = three_squares_plus(5);
    CHECK(r5.x1 == 2);
    CHECK(r5.x2 == 1);
    CHECK(r5.x3 == 0);

    for (long m = 0; m <= 5000; ++m) {
        auto r = three_squares_plus(m);
        CHECK(r.x1 * r.x1 + r.x2 * r.x2 + r.x3 * r.x3 + r.x3 == m);
        CHECK(r.x3 * r.x3 + r.x3 >= 0);
    }
}

TEST_CASE("round trip: natural box witnesses iff reduced integer witnesses") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> nv(1, 2);
    const long B = 6;
    for (int trial = 0; trial < 60; ++trial) {
        int vars = nv(rng);
        polynomial p;
        static const std::vector<std::string> names = {"x", "y"};
        for (int t = 0; t < 4; ++t) {
            polynomial mono = polynomial::constant(coeff(rng));
            unsigned budget = 3;
            for (int v = 0; v < vars; ++v) {
                std::uniform_int_distribution<unsigned> ed(0, budget);
                unsigned e = ed(rng);
                budget -= e;
                mono = mono * polynomial::variable(names[v]).pow(e);
            }
            p = p + mono;
        }

        box_query nq;
        nq.p = p;
        nq.radius = B;
        nq.domain = solution_domain::naturals;
        bool n_has = !box_search(nq).witnesses.empty();

        n_to_z_reduction r = naturals_to_integers(p);
        // Mapped box: the canonical three-squares image of [0, B]^n.
        bool z_has = false;
        const size_t n = p.num_vars();
        std::vector<long> s(n, 0);
        for (;;) {
            assignment t;
            for (size_t i = 0; i < n; ++i) {
                auto rep = three_squares_plus(s[i]);
                t.push_back(rep.x1);
                t.push_back(rep.x2);
                t.push_back(rep.x3);
            }
            // Align with the target's sorted variable order.
            assignment aligned(t.size());
            size_t pos = 0;
            for (size_t i = 0; i < n; ++i)
                for (const std::string& name : r.var_map[i]) {
                    auto it = std::lower_bound(r.target.vars().begin(), r.target.vars().end(),
                                               name);
                    aligned[static_cast<size_t>(it - r.target.vars().begin())] = t[pos++];
                }
            if (r.target.evaluate(aligned) == 0) {
                z_has = true;
                assignment lifted = lift_witness(r, aligned);
                CHECK(r.source.evaluate(lifted) == 0);
                for (const Integer& v : lifted) CHECK(v >= 0);
                break;
            }
            size_t i = 0;
            while (i < n && ++s[i] > B) s[i++] = 0;
            if (i == n) break;
        }
        CHECK(n_has == z_has);
    }
}
