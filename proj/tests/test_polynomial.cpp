#include "dioph/polynomial.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dioph;

namespace {

// Random sparse polynomial for property tests.
polynomial random_poly(std::mt19937_64& rng, unsigned max_vars, unsigned max_deg, long coeff_mag,
                       unsigned max_terms = 6) {
    static const std::vector<std::string> names = {"x", "y", "z", "w"};
    std::uniform_int_distribution<unsigned> nv(0, max_vars);
    std::uniform_int_distribution<unsigned> nt(1, max_terms);
    std::uniform_int_distribution<long> coeff(-coeff_mag, coeff_mag);
    unsigned vars = nv(rng);
    polynomial p;
    unsigned terms = nt(rng);
    for (unsigned t = 0; t < terms; ++t) {
        polynomial mono = polynomial::constant(coeff(rng));
        unsigned budget = max_deg;
        for (unsigned v = 0; v < vars; ++v) {
            std::uniform_int_distribution<unsigned> ed(0, budget);
            unsigned e = ed(rng);
            budget -= e;
            mono = mono * polynomial::variable(names[v]).pow(e);
        }
        p = p + mono;
    }
    return p;
}

assignment random_assignment(std::mt19937_64& rng, size_t n, long mag) {
    std::uniform_int_distribution<long> v(-mag, mag);
    assignment a;
    for (size_t i = 0; i < n; ++i) a.emplace_back(v(rng));
    return a;
}

}  // namespace

TEST_CASE("parsing the documented grammar") {
    polynomial p = parse_polynomial("x^2 + 3*x*y - 7");
    CHECK(p.num_vars() == 2);
    CHECK(p.degree() == 2);
    CHECK(p.terms().size() == 3);
    CHECK(p.str() == "x^2 + 3*x*y - 7");

    polynomial zero = parse_polynomial("0");
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 0);
    CHECK(zero.num_vars() == 0);
    CHECK(zero.str() == "0");

    CHECK_THROWS_AS(parse_polynomial("x^2 +* y"), parse_error);
    try {
        parse_polynomial("x^2 +* y");
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }

    // Parentheses, nested negation, multi-character identifiers.
    polynomial q = parse_polynomial("-(a_1 - 2)*(a_1 + 2)");
    CHECK(q == parse_polynomial("4 - a_1^2"));
    CHECK_THROWS_AS(parse_polynomial(""), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x^"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(x"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x yy"), parse_error);
}

TEST_CASE("metrics") {
    auto m1 = metrics(parse_polynomial("x^2 + 3*x*y - 7"));
    CHECK(m1.degree == 2);
    CHECK(m1.num_vars == 2);

    auto m2 = metrics(parse_polynomial("x1^2 + x2^2 + x3^2 + x3 - 5"));
    CHECK(m2.degree == 2);
    CHECK(m2.num_vars == 3);

    auto m3 = metrics(parse_polynomial("7"));
    CHECK(m3.degree == 0);
    CHECK(m3.num_vars == 0);

    // Variables that cancel out do not count.
    auto m4 = metrics(parse_polynomial("x + y - y"));
    CHECK(m4.num_vars == 1);
}

TEST_CASE("evaluation") {
    CHECK(parse_polynomial("x^2 + y^2").evaluate({3, 4}) == 25);
    CHECK(parse_polynomial("x^3 + y^3 + z^3").evaluate({3, 1, 1}) == 29);
    CHECK(parse_polynomial("0").evaluate({}) == 0);
    CHECK_THROWS_AS(parse_polynomial("x + y").evaluate({1}), std::invalid_argument);
}

TEST_CASE("substitution") {
    polynomial p = parse_polynomial("x - 5");
    polynomial gadget = parse_polynomial("a^2 + b^2 + c^2 + c");
    CHECK(p.substitute("x", gadget) == parse_polynomial("a^2 + b^2 + c^2 + c - 5"));

    polynomial q = parse_polynomial("x + 1");
    CHECK(q.substitute("x", -polynomial::variable("x")) == parse_polynomial("-x + 1"));

    CHECK(parse_polynomial("x^2").substitute("x", polynomial{}).is_zero());
    CHECK_THROWS_AS(parse_polynomial("x").substitute("q", polynomial{}), std::invalid_argument);
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        polynomial p = random_poly(rng, 3, 4, 9);
        CHECK(parse_polynomial(p.str()) == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        polynomial p = random_poly(rng, 3, 3, 5);
        polynomial q = random_poly(rng, 3, 3, 5);
        polynomial sum = p + q, prod = p * q;
        // Evaluate over the union variable set.
        assignment a = random_assignment(rng, sum.num_vars() + prod.num_vars() + 8, 4);
        auto eval_on = [&](const polynomial& r) {
            // Project the shared assignment onto r's variables by name.
            static const std::vector<std::string> names = {"w", "x", "y", "z"};
            assignment sub;
            for (const std::string& v : r.vars()) {
                size_t idx =
                    static_cast<size_t>(std::find(names.begin(), names.end(), v) - names.begin());
                sub.push_back(a[idx]);
            }
            return r.evaluate(sub);
        };
        CHECK(eval_on(sum) == eval_on(p) + eval_on(q));
        CHECK(eval_on(prod) == eval_on(p) * eval_on(q));
    }
}

TEST_CASE("substitution respects evaluation") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        polynomial p = random_poly(rng, 2, 3, 5);
        if (p.num_vars() == 0) continue;
        std::string var = p.vars()[0];
        // Substitute a univariate polynomial in the same variable so the
        // variable sets stay simple.
        polynomial q =
            polynomial::variable(var) * polynomial::variable(var) + polynomial::constant(-2);
        polynomial s = p.substitute(var, q);
        assignment a = random_assignment(rng, p.num_vars(), 5);
        assignment a_sub = a;
        a_sub[0] = q.evaluate({a[0]});
        if (s.num_vars() == p.num_vars()) CHECK(s.evaluate(a) == p.evaluate(a_sub));
    }
}

TEST_CASE("degree is invariant under variable renaming") {
    polynomial p = parse_polynomial("a*b^2 + b - 3");
    polynomial q = parse_polynomial("z*y^2 + y - 3");
    CHECK(metrics(p).degree == metrics(q).degree);
    CHECK(metrics(p).num_vars == metrics(q).num_vars);
}
