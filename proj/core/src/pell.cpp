#include "dioph/pell.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

pell_pair pell_fundamental(const Integer& D) {
    if (D < 2 || is_perfect_square(D))
        throw std::invalid_argument("pell_fundamental: D must be a non-square >= 2");

    // Continued fraction of sqrt(D): a_k = floor((a0 + m_k) / d_k) with
    // m_{k+1} = d_k a_k - m_k, d_{k+1} = (D - m_{k+1}^2) / d_k.
    // The first convergent h/k with h^2 - D k^2 = 1 is the fundamental
    // solution (it appears at the end of the first or second period).
    const Integer a0 = isqrt(D);
    Integer m = 0, d = 1, a = a0;
    Integer h_prev = 1, h = a0;  // convergent numerators
    Integer k_prev = 0, k = 1;   // convergent denominators
    for (;;) {
        if (h * h - D * k * k == 1 && k >= 1) return {h, k};
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

pell_pair automorph_step(const Integer& D, const pell_pair& f, const pell_pair& s, bool forward) {
    if (forward) return {f.t * s.t + D * f.u * s.u, f.u * s.t + f.t * s.u};
    return {f.t * s.t - D * f.u * s.u, -f.u * s.t + f.t * s.u};
}

namespace {

// Representative scan with machine integers; usable when every
// intermediate value fits well inside unsigned __int128.
void scan_fast(unsigned long D, long long N, unsigned long long u_lo, unsigned long long u_hi,
               std::vector<pell_pair>& out) {
    using u128 = unsigned __int128;
    // Quadratic-residue filters for the perfect-square test.
    bool sq64[64] = {}, sq63[63] = {}, sq65[65] = {};
    for (unsigned i = 0; i < 64; ++i) sq64[i * i % 64] = true;
    for (unsigned i = 0; i < 63; ++i) sq63[i * i % 63] = true;
    for (unsigned i = 0; i < 65; ++i) sq65[i * i % 65] = true;

    u128 rad;  // N + D u^2, tracked incrementally
    bool neg = N < 0;
    u128 absn = neg ? u128(-(unsigned long long)N) : u128(N);
    u128 du2 = u128(D) * u_lo * u_lo;
    if (neg) {
        if (du2 < absn) return;  // below the lower bracket, cannot happen
        rad = du2 - absn;
    } else {
        rad = du2 + absn;
    }
    for (unsigned long long u = u_lo; u <= u_hi; ++u) {
        if (sq64[(unsigned)(rad & 63)] && sq63[(unsigned)(rad % 63)] && sq65[(unsigned)(rad % 65)]) {
            // Load the 128-bit radicand into an Integer.
            Integer r = Integer(static_cast<unsigned long>(rad >> 64));
            r <<= 64;
            r += Integer(static_cast<unsigned long>(rad & ~0ULL));
            if (auto t = exact_sqrt(r)) {
                out.push_back({*t, Integer(u)});
                if (*t != 0) out.push_back({-*t, Integer(u)});
            }
        }
        rad += u128(D) * (2 * u + 1);
    }
}

}  // namespace

std::vector<pell_pair> solve_pell_like(const Integer& D, const Integer& N) {
    if (D < 2 || is_perfect_square(D))
        throw std::invalid_argument("solve_pell_like: D must be a non-square >= 2");
    if (N == 0) return {{0, 0}};

    pell_pair f = pell_fundamental(D);
    Integer u_lo, u_hi;
    if (N > 0) {
        u_lo = 0;
        u_hi = floor_sqrt_ratio(N * (f.t - 1), 2 * D);
    } else {
        u_lo = ceil_sqrt_ratio(-N, D);
        u_hi = floor_sqrt_ratio(-N * (f.t + 1), 2 * D);
    }

    std::vector<pell_pair> reps;
    const Integer fast_limit("1000000000000");
    if (u_hi <= fast_limit && D.fits_ulong_p() && D < Integer("4294967296") &&
        abs(N) < Integer("9223372036854775807")) {
        scan_fast(D.get_ui(), static_cast<long long>(N.get_si()),
                  u_lo.get_ui(), u_hi.fits_ulong_p() ? u_hi.get_ui() : 0, reps);
    } else {
        for (Integer u = u_lo; u <= u_hi; ++u) {
            Integer rad = N + D * u * u;
            if (rad < 0) continue;
            if (auto t = exact_sqrt(rad)) {
                reps.push_back({*t, u});
                if (*t != 0) reps.push_back({-*t, u});
            }
        }
    }

    // Classes are closed under the automorph together with negation, so
    // the scanned fundamentals cover every solution only after adding the
    // negated pairs: orbit(-T, -U) = -orbit(T, U) is in general distinct
    // from both orbit(T, U) and orbit(-T, U).
    const size_t scanned = reps.size();
    for (size_t i = 0; i < scanned; ++i) {
        const pell_pair& r = reps[i];
        if (r.u != 0) reps.push_back({-r.t, -r.u});
    }

    std::sort(reps.begin(), reps.end(), [](const pell_pair& a, const pell_pair& b) {
        return a.u != b.u ? a.u < b.u : a.t < b.t;
    });
    reps.erase(std::unique(reps.begin(), reps.end(),
                           [](const pell_pair& a, const pell_pair& b) {
                               return a.t == b.t && a.u == b.u;
                           }),
               reps.end());
    for (const pell_pair& r : reps)
        if (r.t * r.t - D * r.u * r.u != N)
            throw std::logic_error("solve_pell_like: representative verification failed");
    return reps;
}

}  // namespace dioph
