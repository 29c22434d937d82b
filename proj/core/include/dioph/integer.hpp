#pragma once
// Arbitrary-precision integer type and small number-theory helpers used
// throughout the library. Everything is exact; no floating point.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dioph {

using Integer = mpz_class;

// Floor / ceiling division. operator/ on mpz_class truncates toward zero,
// which is the wrong convention for most of the congruence work here.
Integer fdiv(const Integer& a, const Integer& b);
Integer cdiv(const Integer& a, const Integer& b);

// Mathematical remainder, always in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);

// g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
struct bezout {
    Integer g, x, y;
};
bezout extended_gcd(const Integer& a, const Integer& b);

// floor(sqrt(n)); requires n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
// sqrt(n) if n is a perfect square, nullopt otherwise.
std::optional<Integer> exact_sqrt(const Integer& n);

// floor(sqrt(num/den)) and ceil(sqrt(num/den)); num >= 0, den > 0.
Integer floor_sqrt_ratio(const Integer& num, const Integer& den);
Integer ceil_sqrt_ratio(const Integer& num, const Integer& den);

// Largest s found by trial division with s*s | n; returns (s, n / s^2).
// n > 0. For n beyond the trial bound the returned cofactor may retain
// square factors; callers treat the split as a normalization, not a fact.
std::pair<Integer, Integer> extract_square_part(const Integer& n);

// Positive divisors of |n| in ascending order, by trial division. n != 0.
std::vector<Integer> divisors(const Integer& n);

}  // namespace dioph
