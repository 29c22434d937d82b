#pragma once
// Reductions between solvability over the naturals and over the integers,
// built on the three-square representation n = x1^2 + x2^2 + x3^2 + x3.

#include "dioph/polynomial.hpp"

#include <array>

namespace dioph {

struct n_to_z_reduction {
    polynomial source;  // n variables, degree d
    polynomial target;  // 3n variables, degree 2d (source non-constant)
    // For each source variable (in source.vars() order), the names of the
    // three target variables substituted for it.
    std::vector<std::array<std::string, 3>> var_map;
};

// Substitutes x_i -> a^2 + b^2 + c^2 + c with fresh variables per source
// variable. The source has a solution over N iff the target has one over Z.
n_to_z_reduction naturals_to_integers(const polynomial& p);

// Maps a target witness back to a source witness with all entries >= 0.
// Throws std::invalid_argument unless the target evaluates to zero at t.
assignment lift_witness(const n_to_z_reduction& r, const assignment& t);

// The 2^n sign variants of p, ordered by binary counting of the sign
// vector (bit i flips variable i of p.vars()). p has a solution over Z iff
// some variant has a solution over N. Throws when num_vars exceeds cap.
std::vector<polynomial> integers_to_naturals(const polynomial& p, unsigned cap = 20);

// Legendre's criterion: true iff stripping all factors of 4 leaves a
// residue != 7 (mod 8).
bool is_sum_of_three_squares(const Integer& x);

struct three_squares_rep {
    Integer x1, x2, x3;  // x1^2 + x2^2 + x3^2 + x3 = m
};

// A representation m = x1^2 + x2^2 + x3^2 + x3, which exists for every
// m >= 0. Deterministic: searches odd z ascending with 4m+1-z^2 a sum of
// two squares, returns the split with x1 >= x2 >= 0 and x3 = (z-1)/2.
three_squares_rep three_squares_plus(const Integer& m);

}  // namespace dioph
