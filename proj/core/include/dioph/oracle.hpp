#pragma once
// Exhaustive box search for polynomial zeros. This is the ground truth the
// solvers are tested against, so it must stay dumb: enumerate, evaluate,
// compare with zero.

#include "dioph/polynomial.hpp"

#include <cstdint>

namespace dioph {

enum class solution_domain { naturals, integers };

struct box_query {
    polynomial p;
    unsigned radius = 0;
    solution_domain domain = solution_domain::integers;
    // Maximum number of witnesses returned.
    uint64_t cap = UINT64_MAX;
    // Maximum number of evaluations; exceeding it is an error, not a
    // silent truncation.
    uint64_t budget = 1000000000;
};

struct box_result {
    std::vector<assignment> witnesses;  // lexicographic order
    bool exhausted;                     // true iff the whole box was scanned
};

// All zeros of q.p in [-r, r]^n (integers) or [0, r]^n (naturals), up to
// q.cap, in lexicographic order. Throws std::domain_error when the box
// exceeds q.budget evaluations.
box_result box_search(const box_query& q);

}  // namespace dioph
