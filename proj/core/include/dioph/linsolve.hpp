#pragma once
// Decision procedures for the single-variable and degree-1 cases:
// integer roots of univariate polynomials, linear equations over Z via the
// gcd criterion, and linear equations over N via Frobenius descriptors.

#include "dioph/polynomial.hpp"

namespace dioph {

struct integer_roots_result {
    bool all_integers = false;        // true only for the zero polynomial
    std::vector<Integer> roots;       // ascending; empty when all_integers
};

// Exactly the integer roots of p. Requires p to have at most one variable.
integer_roots_result integer_roots(const polynomial& p);

struct linear_solution {
    bool solvable = false;
    std::vector<Integer> witness;  // aligned with the coefficient list
    std::string reason;            // set when unsolvable
};

// Sum a_i x_i = b over Z. Solvable iff gcd(a_1..a_n) divides b (with the
// all-zero convention: solvable iff b = 0). The witness is built from an
// extended-gcd combination and verified by evaluation.
linear_solution solve_linear_Z(const std::vector<Integer>& coeffs, const Integer& b);

// Sum c_i x_i = k over N. Positive and negative coefficients are split
// into two Frobenius descriptors whose eventually-periodic sets are
// intersected exactly.
linear_solution solve_linear_N(const std::vector<Integer>& coeffs, const Integer& k);

// Sylvester's formula a1*a2 - a1 - a2 for coprime a1, a2 >= 1; the largest
// integer not representable as a1 x + a2 y with x, y >= 0 (-1 when all
// naturals are representable). Throws on zero or non-coprime inputs.
Integer frobenius_number(const Integer& a1, const Integer& a2);

// Describes { sum a_i x_i : x_i in N } as a finite exception set plus a
// full tail of multiples of g: the set equals
//   exceptions  union  { g*x : x >= threshold },
// where every exception is a multiple of g below g*threshold and
// g*(threshold-1) is not representable (threshold minimal).
struct frobenius_descriptor {
    Integer g;
    std::vector<Integer> exceptions;  // ascending, original scale
    Integer threshold;                // M

    bool contains(const Integer& v) const;
};

// Computes the descriptor by shortest-path relaxation over residues
// modulo the smallest reduced generator (Apery-set style).
// All generators must be >= 1.
frobenius_descriptor compute_frobenius_descriptor(const std::vector<Integer>& gens);

}  // namespace dioph
