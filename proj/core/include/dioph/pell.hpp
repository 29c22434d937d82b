#pragma once
// Pell and Pell-like equations T^2 - D U^2 = N for positive non-square D.
// Fundamental solutions come from the continued-fraction expansion of
// sqrt(D); class representatives of the general equation are found inside
// the classical bracket bounds and extended by the automorph.

#include "dioph/integer.hpp"

namespace dioph {

struct pell_pair {
    Integer t, u;
};

// Minimal (t, u), u >= 1, with t^2 - D u^2 = 1, computed from the
// convergents of the continued fraction of sqrt(D).
// Throws std::invalid_argument when D < 2 or D is a perfect square.
pell_pair pell_fundamental(const Integer& D);

// Class representatives (T, U) of T^2 - D U^2 = N with U inside the
// classical bracket derived from the fundamental solution (t1, u1):
//   N > 0:  0 <= U <= sqrt(N (t1 - 1) / (2 D))
//   N < 0:  sqrt(-N / D) <= U <= sqrt(-N (t1 + 1) / (2 D))
// and both signs of T. N = 0 yields {(0, 0)}. Every solution of the
// equation lies in the automorph orbit of some representative.
std::vector<pell_pair> solve_pell_like(const Integer& D, const Integer& N);

// One automorph step: (T, U) -> (t1 T + D u1 U, u1 T + t1 U), or its
// inverse when forward is false.
pell_pair automorph_step(const Integer& D, const pell_pair& fundamental,
                         const pell_pair& s, bool forward);

}  // namespace dioph
