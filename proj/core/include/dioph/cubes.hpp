#pragma once
// Search for representations x^3 + y^3 + z^3 = k, with the mod-9
// obstruction test and a survey mode over a range of k.

#include <cstdint>
#include <string>
#include <vector>

namespace dioph {

struct cube_result {
    long long k = 0;
    enum class outcome_t { obstructed, found, not_found } outcome = outcome_t::not_found;
    long long x = 0, y = 0, z = 0;  // valid when found
    uint64_t bound = 0;
};

// Cubes are 0 or +-1 mod 9, so k = 4, 5 (mod 9) admits no solution.
bool mod9_obstructed(long long k);

// Complete search over all triples with min(|x|,|y|,|z|) <= bound: for
// each z, divisors s = x + y of m = k - z^3 are scanned up to the real
// bound s^3 <= 4m and the remaining quadratic is solved exactly. Returns
// the first triple under the deterministic order (ascending |z|, then z,
// then divisor order), or not_found. bound must be >= 1 and <= 2*10^6.
cube_result search_three_cubes(long long k, uint64_t bound);

// One result per k in [1, k_max]. Partitioned across threads; the output
// order and content are independent of the worker count.
std::vector<cube_result> survey(uint64_t k_max, uint64_t bound, unsigned workers = 0);

std::string to_string(const cube_result& r);

}  // namespace dioph
