#include "dioph/cubes.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace dioph {

namespace {

using i128 = __int128;

i128 cube(i128 v) { return v * v * v; }

// floor(sqrt(v)) for v >= 0.
i128 isqrt128(i128 v) {
    if (v < 0) throw std::logic_error("isqrt128: negative");
    if (v == 0) return 0;
    i128 r = static_cast<i128>(sqrtl(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Given z with m = k - z^3 != 0, finds x >= y with x^3 + y^3 = m via
// divisors s = x + y of m; s and m share their sign and s^3 <= 4m is the
// real-solvability bound. Returns true and fills (x, y) on success.
bool split_two_cubes(i128 m, long long& x_out, long long& y_out) {
    i128 am = m < 0 ? -m : m;
    int sgn = m < 0 ? -1 : 1;
    for (i128 ds = 1; ds * ds * ds <= 4 * am; ++ds) {
        if (am % ds != 0) continue;
        i128 s = sgn * ds;
        i128 r = cube(s) - m;
        if (r % (3 * s) != 0) continue;
        i128 xy = r / (3 * s);
        i128 disc = s * s - 4 * xy;
        if (disc < 0) continue;
        i128 w = isqrt128(disc);
        if (w * w != disc) continue;
        if ((s + w) % 2 != 0) continue;
        x_out = static_cast<long long>((s + w) / 2);
        y_out = static_cast<long long>((s - w) / 2);
        return true;
    }
    return false;
}

}  // namespace

bool mod9_obstructed(long long k) {
    long long r = ((k % 9) + 9) % 9;
    return r == 4 || r == 5;
}

cube_result search_three_cubes(long long k, uint64_t bound) {
    if (bound < 1) throw std::invalid_argument("search_three_cubes: bound must be >= 1");
    if (bound > 2000000) throw std::invalid_argument("search_three_cubes: bound above 2*10^6");

    cube_result res;
    res.k = k;
    res.bound = bound;
    if (mod9_obstructed(k)) {
        res.outcome = cube_result::outcome_t::obstructed;
        return res;
    }
    for (uint64_t az = 0; az <= bound; ++az) {
        for (int sign = 0; sign < (az == 0 ? 1 : 2); ++sign) {
            long long z = sign == 0 ? -static_cast<long long>(az) : static_cast<long long>(az);
            i128 m = i128(k) - cube(z);
            if (m == 0) {
                res.outcome = cube_result::outcome_t::found;
                res.x = 0;
                res.y = 0;
                res.z = z;
                return res;
            }
            long long x, y;
            if (split_two_cubes(m, x, y)) {
                res.outcome = cube_result::outcome_t::found;
                res.x = x;
                res.y = y;
                res.z = z;
                return res;
            }
        }
    }
    res.outcome = cube_result::outcome_t::not_found;
    return res;
}

std::vector<cube_result> survey(uint64_t k_max, uint64_t bound, unsigned workers) {
    std::vector<cube_result> out(k_max);
    if (k_max == 0) return out;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(k_max));

    std::vector<std::future<void>> jobs;
    std::atomic<uint64_t> next{1};
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                uint64_t k = next.fetch_add(1);
                if (k > k_max) return;
                out[k - 1] = search_three_cubes(static_cast<long long>(k), bound);
            }
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

std::string to_string(const cube_result& r) {
    auto term = [](long long v) {
        return v < 0 ? "(" + std::to_string(v) + ")^3" : std::to_string(v) + "^3";
    };
    switch (r.outcome) {
        case cube_result::outcome_t::obstructed:
            return "k=" + std::to_string(r.k) + ": no solution (k = 4 or 5 mod 9)";
        case cube_result::outcome_t::found:
            return "k=" + std::to_string(r.k) + ": " + term(r.x) + " + " + term(r.y) + " + " +
                   term(r.z);
        case cube_result::outcome_t::not_found:
            return "k=" + std::to_string(r.k) + ": no solution with min coordinate <= " +
                   std::to_string(r.bound);
    }
    return {};
}

}  // namespace dioph
