#include "dioph/linsolve.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dioph {

integer_roots_result integer_roots(const polynomial& p) {
    if (p.num_vars() > 1)
        throw std::invalid_argument("integer_roots: polynomial has more than one variable");

    integer_roots_result result;
    if (p.is_zero()) {
        result.all_integers = true;
        return result;
    }
    if (p.num_vars() == 0) return result;  // nonzero constant

    // Candidate roots: 0 (when x divides p) and the divisors of the
    // trailing nonzero coefficient, both signs.
    unsigned min_exp = std::numeric_limits<unsigned>::max();
    Integer trailing;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < min_exp) {
            min_exp = e[0];
            trailing = c;
        }
    }
    std::vector<Integer> candidates;
    if (min_exp > 0) candidates.push_back(0);
    for (const Integer& d : divisors(trailing)) {
        candidates.push_back(d);
        candidates.push_back(-d);
    }
    for (const Integer& c : candidates)
        if (p.evaluate({c}) == 0) result.roots.push_back(c);
    std::sort(result.roots.begin(), result.roots.end());
    result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
    return result;
}

linear_solution solve_linear_Z(const std::vector<Integer>& coeffs, const Integer& b) {
    linear_solution sol;
    sol.witness.assign(coeffs.size(), 0);

    // Fold an extended gcd across the nonzero coefficients, tracking the
    // combination that produces it.
    Integer g = 0;
    std::vector<std::pair<size_t, Integer>> combo;  // index -> multiplier
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (g == 0) {
            g = abs(coeffs[i]);
            combo = {{i, coeffs[i] > 0 ? 1 : -1}};
        } else {
            bezout e = extended_gcd(g, coeffs[i]);
            for (auto& [idx, m] : combo) m *= e.x;
            combo.emplace_back(i, e.y);
            g = e.g;
        }
    }

    if (g == 0) {
        sol.solvable = (b == 0);
        if (!sol.solvable) sol.reason = "all coefficients are zero but the constant is not";
        return sol;
    }
    if (mod_floor(b, g) != 0) {
        sol.solvable = false;
        sol.reason = "gcd " + g.get_str() + " of the coefficients does not divide " + b.get_str();
        return sol;
    }
    Integer scale = b / g;
    for (const auto& [idx, m] : combo) sol.witness[idx] = m * scale;
    sol.solvable = true;

    Integer check = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) check += coeffs[i] * sol.witness[i];
    if (check != b) throw std::logic_error("solve_linear_Z: witness verification failed");
    return sol;
}

Integer frobenius_number(const Integer& a1, const Integer& a2) {
    if (a1 < 1 || a2 < 1)
        throw std::invalid_argument("frobenius_number: generators must be >= 1");
    if (gcd(a1, a2) != 1)
        throw std::invalid_argument("frobenius_number: generators must be coprime");
    return a1 * a2 - a1 - a2;
}

bool frobenius_descriptor::contains(const Integer& v) const {
    if (v < 0) return false;
    if (mod_floor(v, g) != 0) return false;
    if (v / g >= threshold) return true;
    return std::binary_search(exceptions.begin(), exceptions.end(), v);
}

frobenius_descriptor compute_frobenius_descriptor(const std::vector<Integer>& gens) {
    if (gens.empty())
        throw std::invalid_argument("compute_frobenius_descriptor: no generators");
    for (const Integer& a : gens)
        if (a < 1) throw std::invalid_argument("compute_frobenius_descriptor: generators must be >= 1");

    frobenius_descriptor d;
    d.g = 0;
    for (const Integer& a : gens) d.g = gcd(d.g, a);

    std::vector<Integer> reduced;
    reduced.reserve(gens.size());
    for (const Integer& a : gens) reduced.push_back(a / d.g);
    Integer amin = *std::min_element(reduced.begin(), reduced.end());

    if (amin == 1) {
        d.threshold = 0;  // every multiple of g is representable
        return d;
    }
    if (!amin.fits_ulong_p() || amin > 10000000)
        throw std::invalid_argument("compute_frobenius_descriptor: smallest generator too large");
    const size_t mod = amin.get_ui();

    // dist[r] = smallest representable value congruent to r (mod amin).
    const Integer unset = -1;
    std::vector<Integer> dist(mod, unset);
    dist[0] = 0;
    using node = std::pair<Integer, size_t>;
    auto cmp = [](const node& a, const node& b) { return a.first > b.first; };
    std::priority_queue<node, std::vector<node>, decltype(cmp)> pq(cmp);
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [v, r] = pq.top();
        pq.pop();
        if (dist[r] != v) continue;
        for (const Integer& a : reduced) {
            Integer nv = v + a;
            size_t nr = mod_floor(nv, amin).get_ui();
            if (dist[nr] == unset || nv < dist[nr]) {
                dist[nr] = nv;
                pq.push({nv, nr});
            }
        }
    }

    Integer max_dist = 0;
    for (const Integer& v : dist) {
        if (v == unset) throw std::logic_error("compute_frobenius_descriptor: unreachable residue");
        max_dist = std::max(max_dist, v);
    }
    // Largest non-representable reduced value, then the minimal threshold.
    Integer frob = max_dist - amin;
    d.threshold = frob < 0 ? Integer(0) : frob + 1;

    if (d.threshold > 10000000)
        throw std::invalid_argument("compute_frobenius_descriptor: exception set too large");
    for (Integer x = 0; x < d.threshold; ++x)
        if (dist[mod_floor(x, amin).get_ui()] <= x) d.exceptions.push_back(x * d.g);
    return d;
}

namespace {

// Finds nonnegative x with sum gens[i]*x[i] = v, assuming v is known to be
// representable. Uses suffix descriptors to prune the leftmost counter.
std::vector<Integer> represent(const std::vector<Integer>& gens, const Integer& v) {
    std::vector<frobenius_descriptor> suffix(gens.size());
    for (size_t i = gens.size(); i-- > 0;)
        suffix[i] = compute_frobenius_descriptor(
            std::vector<Integer>(gens.begin() + static_cast<long>(i), gens.end()));

    std::vector<Integer> x(gens.size(), 0);
    Integer rest = v;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i + 1 == gens.size()) {
            x[i] = rest / gens[i];
            if (x[i] * gens[i] != rest)
                throw std::logic_error("represent: final generator does not divide remainder");
            break;
        }
        Integer c = 0;
        while (!suffix[i + 1].contains(rest - c * gens[i])) {
            ++c;
            if (c * gens[i] > rest) throw std::logic_error("represent: value not representable");
        }
        x[i] = c;
        rest -= c * gens[i];
    }
    return x;
}

}  // namespace

linear_solution solve_linear_N(const std::vector<Integer>& coeffs, const Integer& k) {
    linear_solution sol;
    sol.witness.assign(coeffs.size(), 0);

    // Normalize so the constant is nonnegative, then move negated negative
    // coefficients to the right-hand side:
    //   sum a_i x_i = k + sum b_j y_j.
    std::vector<Integer> c = coeffs;
    Integer b = k;
    if (b < 0) {
        b = -b;
        for (Integer& v : c) v = -v;
    }
    std::vector<Integer> left, right;
    std::vector<size_t> left_idx, right_idx;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] > 0) {
            left.push_back(c[i]);
            left_idx.push_back(i);
        } else if (c[i] < 0) {
            right.push_back(-c[i]);
            right_idx.push_back(i);
        }
    }

    auto fill_witness = [&](const std::vector<Integer>& lx, const std::vector<Integer>& rx) {
        for (size_t i = 0; i < lx.size(); ++i) sol.witness[left_idx[i]] = lx[i];
        for (size_t i = 0; i < rx.size(); ++i) sol.witness[right_idx[i]] = rx[i];
        Integer check = 0;
        for (size_t i = 0; i < coeffs.size(); ++i) check += coeffs[i] * sol.witness[i];
        if (check != k) throw std::logic_error("solve_linear_N: witness verification failed");
        sol.solvable = true;
    };

    if (left.empty() && right.empty()) {
        if (b == 0) fill_witness({}, {});
        else sol.reason = "all coefficients are zero but the constant is not";
        return sol;
    }
    if (right.empty()) {
        frobenius_descriptor da = compute_frobenius_descriptor(left);
        if (da.contains(b)) fill_witness(represent(left, b), {});
        else sol.reason = b.get_str() + " is not a nonnegative combination of the coefficients";
        return sol;
    }
    if (left.empty()) {
        // 0 = b + sum b_j y_j with b_j >= 1: only b = 0, all y = 0.
        if (b == 0) fill_witness({}, std::vector<Integer>(right.size(), 0));
        else sol.reason = "left side is empty and the constant is positive";
        return sol;
    }

    frobenius_descriptor da = compute_frobenius_descriptor(left);
    frobenius_descriptor db = compute_frobenius_descriptor(right);

    // Intersect A = F_a u {g_a x : x >= M_a} with b + (F_b u {g_b y : y >= M_b}).
    std::vector<Integer> candidates;
    for (const Integer& f : da.exceptions)
        if (f >= b && db.contains(f - b)) candidates.push_back(f);
    for (const Integer& f : db.exceptions)
        if (da.contains(b + f)) candidates.push_back(b + f);
    {
        // Tail against tail: v = 0 (mod g_a), v = b (mod g_b), v large.
        Integer ga = da.g, gb = db.g;
        bezout e = extended_gcd(ga, gb);
        if (mod_floor(b, e.g) == 0) {
            // v = ga * t with ga * t = b (mod gb).
            Integer step = ga * (gb / e.g);
            Integer t0 = mod_floor(e.x * (b / e.g), gb / e.g);
            Integer v = ga * t0;  // smallest nonnegative solution of the congruences
            Integer lower = std::max(da.g * da.threshold, b + db.g * db.threshold);
            if (v < lower) v += cdiv(lower - v, step) * step;
            candidates.push_back(v);
        }
    }
    if (candidates.empty()) {
        sol.reason = "the two Frobenius sets do not intersect";
        return sol;
    }
    Integer best = *std::min_element(candidates.begin(), candidates.end());
    fill_witness(represent(left, best), represent(right, best - b));
    return sol;
}

}  // namespace dioph
