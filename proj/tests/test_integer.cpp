#include "dioph/integer.hpp"

#include <doctest.h>

using namespace dioph;

TEST_CASE("floor and ceiling division") {
    CHECK(fdiv(7, 2) == 3);
    CHECK(fdiv(-7, 2) == -4);
    CHECK(fdiv(7, -2) == -4);
    CHECK(cdiv(7, 2) == 4);
    CHECK(cdiv(-7, 2) == -3);
    CHECK(mod_floor(-7, 3) == 2);
    CHECK(mod_floor(7, 3) == 1);
}

TEST_CASE("extended gcd identity") {
    for (long a = -30; a <= 30; a += 7) {
        for (long b = -30; b <= 30; b += 5) {
            bezout e = extended_gcd(a, b);
            CHECK(e.g == gcd(Integer(a), Integer(b)));
            CHECK(Integer(a) * e.x + Integer(b) * e.y == e.g);
        }
    }
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(is_perfect_square(Integer("152415787532388367504953515625666819450083828733760")) ==
          false);
    Integer big("123456789123456789");
    CHECK(is_perfect_square(big * big));
    CHECK(*exact_sqrt(big * big) == big);
    CHECK(!exact_sqrt(big * big + 1));
}

TEST_CASE("rational square root brackets") {
    // floor(sqrt(7/2)) = 1, ceil = 2
    CHECK(floor_sqrt_ratio(7, 2) == 1);
    CHECK(ceil_sqrt_ratio(7, 2) == 2);
    // exact: sqrt(36/4) = 3
    CHECK(floor_sqrt_ratio(36, 4) == 3);
    CHECK(ceil_sqrt_ratio(36, 4) == 3);
    CHECK(floor_sqrt_ratio(0, 5) == 0);
}

TEST_CASE("square part extraction") {
    auto [s, d] = extract_square_part(8);
    CHECK(s == 2);
    CHECK(d == 2);
    auto [s2, d2] = extract_square_part(5);
    CHECK(s2 == 1);
    CHECK(d2 == 5);
    auto [s3, d3] = extract_square_part(720);  // 144 * 5
    CHECK(s3 == 12);
    CHECK(d3 == 5);
}

TEST_CASE("divisor enumeration") {
    std::vector<Integer> d6 = divisors(6);
    CHECK(d6 == std::vector<Integer>{1, 2, 3, 6});
    CHECK(divisors(-6) == d6);
    CHECK(divisors(1) == std::vector<Integer>{1});
    CHECK(divisors(49) == std::vector<Integer>{1, 7, 49});
}
