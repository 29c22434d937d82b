#include "dioph/quadsolve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dioph {

quadratic_equation equation_from(const polynomial& p) {
    if (p.degree() > 2 || p.num_vars() > 2)
        throw std::invalid_argument("equation_from: polynomial is not a binary quadratic");
    quadratic_equation q{0, 0, 0, 0, 0, 0};
    const size_t n = p.num_vars();
    if (n == 0) {
        q.f = p.constant_term();
    } else if (n == 1) {
        q.a = p.coefficient({2});
        q.d = p.coefficient({1});
        q.f = p.coefficient({0});
    } else {
        q.a = p.coefficient({2, 0});
        q.b = p.coefficient({1, 1});
        q.c = p.coefficient({0, 2});
        q.d = p.coefficient({1, 0});
        q.e = p.coefficient({0, 1});
        q.f = p.coefficient({0, 0});
    }
    return q;
}

conic_class classify(const quadratic_equation& q) {
    if (q.a == 0 && q.b == 0 && q.c == 0) return conic_class::degenerate_linear;
    Integer D = q.discriminant();
    if (D < 0) return conic_class::elliptic;
    if (D == 0) return conic_class::parabolic;
    return is_perfect_square(D) ? conic_class::hyperbolic_square
                                : conic_class::hyperbolic_nonsquare;
}

namespace {

using point = std::pair<Integer, Integer>;

void add_point(solution_description& desc, Integer x, Integer y, bool swapped) {
    if (swapped) std::swap(x, y);
    desc.points.emplace_back(std::move(x), std::move(y));
}

void add_family(solution_description& desc, param_family fam, bool swapped) {
    if (swapped) std::swap(fam.x, fam.y);
    desc.families.push_back(std::move(fam));
}

void finalize(solution_description& desc) {
    std::sort(desc.points.begin(), desc.points.end());
    desc.points.erase(std::unique(desc.points.begin(), desc.points.end()), desc.points.end());
    if (desc.kind == solution_description::kind_t::all) return;
    if (!desc.families.empty() || !desc.orbits.empty())
        desc.kind = solution_description::kind_t::families;
    else
        desc.kind = desc.points.empty() ? solution_description::kind_t::empty
                                        : solution_description::kind_t::finite;
}

// d x + e y + f = 0: the complete description of a line's integer points.
void describe_line(solution_description& desc, const Integer& d, const Integer& e,
                   const Integer& f, bool swapped) {
    if (d == 0 && e == 0) {
        if (f == 0) desc.kind = solution_description::kind_t::all;
        return;  // f != 0: contributes nothing
    }
    if (d == 0) {
        if (mod_floor(f, e) != 0) return;
        param_family fam;
        fam.x = {0, 1, 0};
        fam.y = {-f / e, 0, 0};
        add_family(desc, fam, swapped);
        return;
    }
    if (e == 0) {
        if (mod_floor(f, d) != 0) return;
        param_family fam;
        fam.x = {-f / d, 0, 0};
        fam.y = {0, 1, 0};
        add_family(desc, fam, swapped);
        return;
    }
    bezout bz = extended_gcd(d, e);
    if (mod_floor(f, bz.g) != 0) return;
    Integer scale = -f / bz.g;
    param_family fam;
    fam.x = {bz.x * scale, e / bz.g, 0};
    fam.y = {bz.y * scale, -d / bz.g, 0};
    add_family(desc, fam, swapped);
}

// Elliptic case (D < 0, a != 0): the x-discriminant is nonnegative only on
// a bounded y-interval; enumerate it.
void solve_elliptic(solution_description& desc, const quadratic_equation& q, bool swapped) {
    const Integer D = q.discriminant();
    const Integer E = 2 * q.b * q.d - 4 * q.a * q.e;
    const Integer F = q.d * q.d - 4 * q.a * q.f;
    const Integer inner = E * E - 4 * D * F;
    if (inner < 0) return;  // the conic has no real points

    const Integer s = isqrt(inner);
    Integer y1 = fdiv(-E - s, 2 * D);
    Integer y2 = fdiv(-E + s, 2 * D);
    Integer lo = std::min(y1, y2) - 2;
    Integer hi = std::max(y1, y2) + 2;
    for (Integer y = lo; y <= hi; ++y) {
        Integer delta = D * y * y + E * y + F;
        if (delta < 0) continue;
        auto w = exact_sqrt(delta);
        if (!w) continue;
        for (int sign = 0; sign < (*w == 0 ? 1 : 2); ++sign) {
            Integer num = -(q.b * y + q.d) + (sign == 0 ? *w : -*w);
            if (mod_floor(num, 2 * q.a) == 0) add_point(desc, num / (2 * q.a), y, swapped);
        }
    }
}

// Parabolic case (D = 0, a != 0): multiply by 4a and complete the square,
// u^2 + mu y + nu = 0 with u = 2 a x + b y + d.
void solve_parabolic(solution_description& desc, const quadratic_equation& q, bool swapped) {
    const Integer mu = 4 * q.a * q.e - 2 * q.b * q.d;
    const Integer nu = 4 * q.a * q.f - q.d * q.d;

    if (mu == 0) {
        // u^2 = -nu, then two lines 2 a x + b y + (d -+ u0) = 0.
        if (-nu < 0) return;
        auto u0 = exact_sqrt(-nu);
        if (!u0) return;
        describe_line(desc, 2 * q.a, q.b, q.d - *u0, swapped);
        if (*u0 != 0) describe_line(desc, 2 * q.a, q.b, q.d + *u0, swapped);
        return;
    }

    // u is constrained by u^2 = -nu (mod mu) and by x-integrality; both
    // conditions are periodic in u with period P = 2|a||mu|.
    const Integer absmu = abs(mu);
    const Integer P = 2 * abs(q.a) * absmu;
    const Integer Pmu = P / mu;  // +-2|a|
    for (Integer r = 0; r < P; ++r) {
        if (mod_floor(r * r + nu, absmu) != 0) continue;
        Integer yr = -(r * r + nu) / mu;
        Integer x_num0 = r - q.b * yr - q.d;
        if (mod_floor(x_num0, 2 * abs(q.a)) != 0) continue;
        param_family fam;
        fam.y = {yr, -2 * r * Pmu, -Pmu * P};
        fam.x = {x_num0 / (2 * q.a), (P + 2 * q.b * r * Pmu) / (2 * q.a),
                 (q.b * Pmu * P) / (2 * q.a)};
        add_family(desc, fam, swapped);
    }
}

// Hyperbolic case with square discriminant (a != 0): the form factors into
// two rational linear forms; clearing denominators gives L1 * L2 = C.
void solve_hyperbolic_square(solution_description& desc, const quadratic_equation& q,
                             bool swapped) {
    const Integer k = isqrt(q.discriminant());
    const Integer alpha = 2 * q.a * q.e - q.d * (q.b - k);
    const Integer beta = q.d * (q.b + k) - 2 * q.a * q.e;
    const Integer C = alpha * beta - 4 * q.a * q.f * k * k;

    if (C == 0) {
        describe_line(desc, 2 * q.a * k, k * (q.b - k), alpha, swapped);
        describe_line(desc, 2 * q.a * k, k * (q.b + k), beta, swapped);
        return;
    }
    for (const Integer& dv : divisors(C)) {
        for (int su = 0; su < 2; ++su) {
            Integer u = su == 0 ? dv : -dv;
            Integer v = C / u;
            Integer ynum = v - u - beta + alpha;
            if (mod_floor(ynum, 2 * k * k) != 0) continue;
            Integer y = ynum / (2 * k * k);
            Integer xnum = u - k * (q.b - k) * y - alpha;
            if (mod_floor(xnum, 2 * q.a * k) != 0) continue;
            add_point(desc, xnum / (2 * q.a * k), y, swapped);
        }
    }
}

// a = c = 0, b != 0: multiply by b and factor, (b x + e)(b y + d) = ed - bf.
void solve_bilinear(solution_description& desc, const quadratic_equation& q, bool swapped) {
    const Integer C = q.e * q.d - q.b * q.f;
    if (C == 0) {
        if (mod_floor(q.e, q.b) == 0) {
            param_family fam;
            fam.x = {-q.e / q.b, 0, 0};
            fam.y = {0, 1, 0};
            add_family(desc, fam, swapped);
        }
        if (mod_floor(q.d, q.b) == 0) {
            param_family fam;
            fam.x = {0, 1, 0};
            fam.y = {-q.d / q.b, 0, 0};
            add_family(desc, fam, swapped);
        }
        return;
    }
    for (const Integer& dv : divisors(C)) {
        for (int su = 0; su < 2; ++su) {
            Integer u = su == 0 ? dv : -dv;
            Integer v = C / u;
            if (mod_floor(u - q.e, q.b) != 0 || mod_floor(v - q.d, q.b) != 0) continue;
            add_point(desc, (u - q.e) / q.b, (v - q.d) / q.b, swapped);
        }
    }
}

// --- Pell orbit machinery --------------------------------------------------

struct orbit_modulus {
    unsigned long M;
    unsigned long t1, Du1, u1;         // automorph step mod M
    unsigned long two_s, two_Dform;    // divisibility moduli
    unsigned long four_as, four_aDf;   // 4|a|s and 4|a|Dform
    unsigned long two_a;               // 2|a|
    unsigned long lam_M;               // lambda mod M
    unsigned long qb_2a, qd_2a;        // b, d mod 2|a|
};

orbit_modulus make_modulus(const pell_orbit& o) {
    Integer M = 16 * abs(o.qa) * o.Dform * o.s;
    // Step products must fit in 64 bits.
    if (!M.fits_ulong_p() || M >= Integer("2147483648"))
        throw std::invalid_argument("pell orbit analysis: coefficients too large");
    orbit_modulus m;
    m.M = M.get_ui();
    m.t1 = mod_floor(o.automorph.t, M).get_ui();
    m.Du1 = mod_floor(o.D0 * o.automorph.u, M).get_ui();
    m.u1 = mod_floor(o.automorph.u, M).get_ui();
    m.two_s = Integer(2 * o.s).get_ui();
    m.two_Dform = Integer(2 * o.Dform).get_ui();
    m.four_as = Integer(4 * abs(o.qa) * o.s).get_ui();
    m.four_aDf = Integer(4 * abs(o.qa) * o.Dform).get_ui();
    m.two_a = Integer(2 * abs(o.qa)).get_ui();
    m.lam_M = mod_floor(o.lambda, M).get_ui();
    m.qb_2a = mod_floor(o.qb, 2 * abs(o.qa)).get_ui();
    m.qd_2a = mod_floor(o.qd, 2 * abs(o.qa)).get_ui();
    return m;
}

// Admissibility of an orbit element from its residues mod M alone.
bool admissible_residue(const orbit_modulus& m, unsigned long Tm, unsigned long Vm) {
    if (Vm % m.two_s != 0) return false;
    if ((Tm + m.lam_M) % m.two_Dform != 0) return false;
    unsigned long u_2a = ((Vm % m.four_as) / m.two_s) % m.two_a;
    unsigned long y_2a = (((Tm + m.lam_M) % m.four_aDf) / m.two_Dform) % m.two_a;
    // 2a | (u - b y - d)
    unsigned long rhs = (m.qb_2a * y_2a + m.qd_2a) % m.two_a;
    return u_2a == rhs;
}

// State period of (T, V) mod M under the automorph, plus whether any
// admissible offset exists within one period.
std::pair<unsigned long, bool> orbit_period(const pell_orbit& o, const orbit_modulus& m) {
    unsigned long T0 = mod_floor(o.rep.t, Integer(m.M)).get_ui();
    unsigned long V0 = mod_floor(o.rep.u, Integer(m.M)).get_ui();
    unsigned long T = T0, V = V0;
    bool any = false;
    unsigned long steps = 0;
    const unsigned long cap = 50000000;
    do {
        if (admissible_residue(m, T, V)) any = true;
        unsigned long Tn = (m.t1 * T + m.Du1 * V) % m.M;
        unsigned long Vn = (m.u1 * T + m.t1 * V) % m.M;
        T = Tn;
        V = Vn;
        if (++steps > cap)
            throw std::logic_error("pell orbit analysis: period walk exceeded cap");
    } while (T != T0 || V != V0);
    return {steps, any};
}

}  // namespace

std::optional<point> pell_orbit::back_map(const pell_pair& tv) const {
    if (mod_floor(tv.u, 2 * s) != 0) return std::nullopt;
    if (mod_floor(tv.t + lambda, 2 * Dform) != 0) return std::nullopt;
    Integer y = (tv.t + lambda) / (2 * Dform);
    Integer u = tv.u / (2 * s);
    Integer xnum = u - qb * y - qd;
    if (mod_floor(xnum, 2 * qa) != 0) return std::nullopt;
    Integer x = xnum / (2 * qa);
    if (swapped) return point{y, x};
    return point{x, y};
}

pell_pair pell_orbit::forward_map(const Integer& x0, const Integer& y0) const {
    Integer x = x0, y = y0;
    if (swapped) std::swap(x, y);
    return {2 * Dform * y - lambda, 2 * s * (2 * qa * x + qb * y + qd)};
}

bool pell_orbit::contains(const Integer& x, const Integer& y) const {
    pell_pair target = forward_map(x, y);
    if (target.t * target.t - D0 * target.u * target.u != N) return false;
    Integer key = abs(target.t) + abs(target.u);
    for (int dir = 0; dir < 2; ++dir) {
        pell_pair cur = rep;
        unsigned grown = 0;
        for (unsigned step = 0; step < 100000; ++step) {
            if (cur.t == target.t && cur.u == target.u) return true;
            if (abs(cur.t) + abs(cur.u) > key) {
                if (++grown >= 3) break;
            } else {
                grown = 0;
            }
            cur = automorph_step(D0, automorph, cur, dir == 0);
        }
    }
    return false;
}

std::vector<point> pell_orbit::sample(unsigned depth) const {
    std::vector<point> out;
    for (int dir = 0; dir < 2; ++dir) {
        pell_pair cur = rep;
        for (unsigned step = 0; step <= depth; ++step) {
            if (!(dir == 1 && step == 0)) {  // count the rep only once
                if (auto xy = back_map(cur)) out.push_back(*xy);
            }
            cur = automorph_step(D0, automorph, cur, dir == 0);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Membership of a (T, V) pair in the orbit of o.rep.
bool tv_in_orbit(const pell_orbit& o, const pell_pair& tv) {
    Integer key = abs(tv.t) + abs(tv.u);
    for (int dir = 0; dir < 2; ++dir) {
        pell_pair cur = o.rep;
        unsigned grown = 0;
        for (unsigned step = 0; step < 100000; ++step) {
            if (cur.t == tv.t && cur.u == tv.u) return true;
            if (abs(cur.t) + abs(cur.u) > key) {
                if (++grown >= 3) break;
            } else {
                grown = 0;
            }
            cur = automorph_step(o.D0, o.automorph, cur, dir == 0);
        }
    }
    return false;
}

// Hyperbolic case with non-square discriminant (a != 0): reduce to
// T^2 - D0 V^2 = N and describe the solution set as automorph orbits.
void solve_hyperbolic_nonsquare(solution_description& desc, const quadratic_equation& q,
                                bool swapped) {
    const Integer Dform = q.discriminant();
    const Integer lambda = 4 * q.a * q.e - 2 * q.b * q.d;
    const Integer nu = 4 * q.a * q.f - q.d * q.d;
    const Integer N = lambda * lambda + 4 * Dform * nu;
    auto [s, D0] = extract_square_part(Dform);

    if (N == 0) {
        // T = V = 0 is the only solution since D0 is not a square.
        pell_orbit probe;
        probe.D0 = D0;
        probe.s = s;
        probe.Dform = Dform;
        probe.lambda = lambda;
        probe.qa = q.a;
        probe.qb = q.b;
        probe.qd = q.d;
        probe.swapped = swapped;
        if (auto xy = probe.back_map({0, 0}))
            desc.points.push_back(*xy);
        return;
    }

    pell_pair fund = pell_fundamental(D0);
    for (const pell_pair& rep : solve_pell_like(D0, N)) {
        pell_orbit orbit;
        orbit.D0 = D0;
        orbit.N = N;
        orbit.rep = rep;
        orbit.automorph = fund;
        orbit.s = s;
        orbit.Dform = Dform;
        orbit.lambda = lambda;
        orbit.qa = q.a;
        orbit.qb = q.b;
        orbit.qd = q.d;
        orbit.swapped = swapped;

        bool dup = false;
        for (const pell_orbit& existing : desc.orbits)
            if (tv_in_orbit(existing, rep)) {
                dup = true;
                break;
            }
        if (dup) continue;

        orbit_modulus m = make_modulus(orbit);
        auto [period, any] = orbit_period(orbit, m);
        if (!any) continue;  // no orbit element maps back to integers
        orbit.period = period;

        // Seed: nearest admissible element to the representative.
        bool seeded = false;
        for (unsigned long k = 0; k <= period && !seeded; ++k) {
            for (int dir = 0; dir < (k == 0 ? 1 : 2) && !seeded; ++dir) {
                pell_pair cur = orbit.rep;
                for (unsigned long i = 0; i < k; ++i)
                    cur = automorph_step(D0, fund, cur, dir == 0);
                if (auto xy = orbit.back_map(cur)) {
                    orbit.seed = *xy;
                    seeded = true;
                }
            }
        }
        if (!seeded) throw std::logic_error("pell orbit: admissible element not found");

        orbit.note = "orbit of T^2 - " + D0.get_str() + "*V^2 = " + N.get_str() +
                     " under the automorph (" + fund.t.get_str() + ", " + fund.u.get_str() +
                     "); extends infinitely in both directions";
        desc.orbits.push_back(std::move(orbit));
    }
}

solution_description solve_core(const quadratic_equation& q, bool swapped) {
    solution_description desc;
    switch (classify(q)) {
        case conic_class::degenerate_linear:
            describe_line(desc, q.d, q.e, q.f, swapped);
            break;
        case conic_class::elliptic:
            solve_elliptic(desc, q, swapped);
            break;
        case conic_class::parabolic:
            solve_parabolic(desc, q, swapped);
            break;
        case conic_class::hyperbolic_square:
            if (q.a == 0 && q.c == 0) solve_bilinear(desc, q, swapped);
            else solve_hyperbolic_square(desc, q, swapped);
            break;
        case conic_class::hyperbolic_nonsquare:
            solve_hyperbolic_nonsquare(desc, q, swapped);
            break;
    }
    finalize(desc);
    return desc;
}

}  // namespace

solution_description solve_quadratic_Z(const quadratic_equation& q) {
    if (classify(q) == conic_class::degenerate_linear) return solve_core(q, false);
    if (q.a == 0 && q.c != 0) {
        // Swap x and y so the completed-square identities (which need
        // a != 0) apply; results are swapped back on emission.
        quadratic_equation qs{q.c, q.b, q.a, q.e, q.d, q.f};
        return solve_core(qs, true);
    }
    return solve_core(q, false);
}

// --- Membership, sampling, witnesses ---------------------------------------

namespace {

// Integer roots of A t^2 + B t + C = 0; the bool is the "all integers"
// marker (identically zero).
std::pair<bool, std::vector<Integer>> quadratic_int_roots(const Integer& A, const Integer& B,
                                                          const Integer& C) {
    if (A == 0) {
        if (B == 0) return {C == 0, {}};
        if (mod_floor(C, B) == 0) return {false, {-C / B}};
        return {false, {}};
    }
    Integer disc = B * B - 4 * A * C;
    if (disc < 0) return {false, {}};
    auto w = exact_sqrt(disc);
    if (!w) return {false, {}};
    std::vector<Integer> roots;
    for (int sign = 0; sign < (*w == 0 ? 1 : 2); ++sign) {
        Integer num = -B + (sign == 0 ? *w : -*w);
        if (mod_floor(num, 2 * A) == 0) roots.push_back(num / (2 * A));
    }
    return {false, roots};
}

bool family_contains(const param_family& fam, const Integer& x, const Integer& y) {
    auto [all_x, tx] = quadratic_int_roots(fam.x[2], fam.x[1], fam.x[0] - x);
    if (all_x) {
        auto [all_y, ty] = quadratic_int_roots(fam.y[2], fam.y[1], fam.y[0] - y);
        return all_y || !ty.empty();
    }
    for (const Integer& t : tx)
        if (fam.y_at(t) == y) return true;
    return false;
}

}  // namespace

bool description_contains(const solution_description& desc, const Integer& x, const Integer& y) {
    if (desc.kind == solution_description::kind_t::all) return true;
    if (std::binary_search(desc.points.begin(), desc.points.end(), point{x, y})) return true;
    for (const param_family& fam : desc.families)
        if (family_contains(fam, x, y)) return true;
    for (const pell_orbit& orbit : desc.orbits)
        if (orbit.contains(x, y)) return true;
    return false;
}

std::vector<point> sample_solutions(const solution_description& desc, unsigned t_range,
                                    unsigned orbit_depth) {
    std::vector<point> out = desc.points;
    for (const param_family& fam : desc.families)
        for (Integer t = -Integer(t_range); t <= Integer(t_range); ++t)
            out.emplace_back(fam.x_at(t), fam.y_at(t));
    for (const pell_orbit& orbit : desc.orbits) {
        auto pts = orbit.sample(orbit_depth);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Witness preference order: smallest |x| + |y|, then (x, y).
struct witness_key {
    Integer size, x, y;
    bool operator<(const witness_key& o) const {
        if (size != o.size) return size < o.size;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

witness_key key_of(const point& p) { return {abs(p.first) + abs(p.second), p.first, p.second}; }

}  // namespace

std::optional<point> pick_witness(const solution_description& desc) {
    if (desc.kind == solution_description::kind_t::all) return point{0, 0};
    std::vector<point> candidates = desc.points;
    for (const param_family& fam : desc.families)
        for (Integer t = -3; t <= 3; ++t) candidates.emplace_back(fam.x_at(t), fam.y_at(t));
    for (const pell_orbit& orbit : desc.orbits) candidates.push_back(orbit.seed);
    if (candidates.empty()) return std::nullopt;
    return *std::min_element(candidates.begin(), candidates.end(),
                             [](const point& a, const point& b) { return key_of(a) < key_of(b); });
}

// --- Decision over the naturals --------------------------------------------

namespace {

// Closed integer intervals with optional infinities.
struct int_interval {
    bool lo_inf = false, hi_inf = false;
    Integer lo, hi;
};

// { t in Z : c0 + c1 t + c2 t^2 >= 0 } as a union of at most two intervals.
std::vector<int_interval> nonneg_intervals(const std::array<Integer, 3>& c) {
    const Integer &gamma = c[0], &beta = c[1], &alpha = c[2];
    std::vector<int_interval> out;
    if (alpha == 0 && beta == 0) {
        if (gamma >= 0) out.push_back({true, true, 0, 0});
        return out;
    }
    if (alpha == 0) {
        int_interval iv;
        if (beta > 0) {
            iv.lo = cdiv(-gamma, beta);
            iv.hi_inf = true;
        } else {
            iv.hi = fdiv(-gamma, beta);
            iv.lo_inf = true;
        }
        out.push_back(iv);
        return out;
    }
    Integer disc = beta * beta - 4 * alpha * gamma;
    if (alpha > 0) {
        if (disc <= 0) {
            out.push_back({true, true, 0, 0});
            return out;
        }
        Integer s = isqrt(disc);
        // k <= r_minus  <=>  -(2 alpha k + beta) >= sqrt(disc)
        auto below = [&](const Integer& k) {
            Integer X = -(2 * alpha * k + beta);
            return X >= 0 && X * X >= disc;
        };
        // k >= r_plus  <=>  2 alpha k + beta >= sqrt(disc)
        auto above = [&](const Integer& k) {
            Integer Y = 2 * alpha * k + beta;
            return Y >= 0 && Y * Y >= disc;
        };
        Integer t1 = fdiv(-beta - s, 2 * alpha);
        while (below(t1 + 1)) ++t1;
        while (!below(t1)) --t1;
        Integer t2 = cdiv(-beta + s, 2 * alpha);
        while (above(t2 - 1)) --t2;
        while (!above(t2)) ++t2;
        out.push_back({true, false, 0, t1});
        out.push_back({false, true, t2, 0});
        return out;
    }
    // alpha < 0: nonnegative between the roots, if any.
    if (disc < 0) return out;
    Integer s = isqrt(disc);
    auto ge_lo = [&](const Integer& k) {  // k >= r_lo
        Integer X = 2 * alpha * k + beta;
        return X <= 0 || X * X <= disc;
    };
    auto le_hi = [&](const Integer& k) {  // k <= r_hi
        Integer Y = -(2 * alpha * k + beta);
        return Y <= 0 || Y * Y <= disc;
    };
    Integer t_lo = cdiv(-beta + s, 2 * alpha);
    while (ge_lo(t_lo - 1)) --t_lo;
    while (!ge_lo(t_lo)) ++t_lo;
    Integer t_hi = fdiv(-beta - s, 2 * alpha);
    while (le_hi(t_hi + 1)) ++t_hi;
    while (!le_hi(t_hi)) --t_hi;
    if (t_lo <= t_hi) out.push_back({false, false, t_lo, t_hi});
    return out;
}

std::vector<int_interval> intersect(const std::vector<int_interval>& A,
                                    const std::vector<int_interval>& B) {
    std::vector<int_interval> out;
    for (const auto& a : A) {
        for (const auto& b : B) {
            int_interval r;
            r.lo_inf = a.lo_inf && b.lo_inf;
            r.hi_inf = a.hi_inf && b.hi_inf;
            if (!r.lo_inf) r.lo = a.lo_inf ? b.lo : (b.lo_inf ? a.lo : std::max(a.lo, b.lo));
            if (!r.hi_inf) r.hi = a.hi_inf ? b.hi : (b.hi_inf ? a.hi : std::min(a.hi, b.hi));
            if (!r.lo_inf && !r.hi_inf && r.lo > r.hi) continue;
            out.push_back(r);
        }
    }
    return out;
}

// The integer of smallest |t| in the interval.
Integer interval_pick(const int_interval& iv) {
    bool zero_ok = (iv.lo_inf || iv.lo <= 0) && (iv.hi_inf || iv.hi >= 0);
    if (zero_ok) return 0;
    if (!iv.lo_inf && iv.lo > 0) return iv.lo;
    return iv.hi;  // hi < 0
}

}  // namespace

nat_solution solve_quadratic_N(const quadratic_equation& q) {
    solution_description desc = solve_quadratic_Z(q);
    nat_solution sol;
    if (desc.kind == solution_description::kind_t::all) {
        sol.solvable = true;
        sol.witness = {0, 0};
        return sol;
    }

    std::vector<point> candidates;
    for (const point& p : desc.points)
        if (p.first >= 0 && p.second >= 0) candidates.push_back(p);

    for (const param_family& fam : desc.families) {
        auto feasible = intersect(nonneg_intervals(fam.x), nonneg_intervals(fam.y));
        std::optional<Integer> best_t;
        for (const auto& iv : feasible) {
            Integer t = interval_pick(iv);
            if (!best_t || abs(t) < abs(*best_t) || (abs(t) == abs(*best_t) && t < *best_t))
                best_t = t;
        }
        if (best_t) candidates.emplace_back(fam.x_at(*best_t), fam.y_at(*best_t));
    }

    for (const pell_orbit& orbit : desc.orbits) {
        // Walk both directions; once |x| and |y| have grown strictly for
        // two consecutive admissible elements with a repeated sign
        // pattern, later elements keep that pattern and can be skipped.
        const unsigned long cap = 4 * orbit.period + 64;
        for (int dir = 0; dir < 2; ++dir) {
            pell_pair cur = orbit.rep;
            std::optional<point> prev;
            unsigned streak = 0;
            bool found = false;
            for (unsigned long step = 0; step <= cap && !found; ++step) {
                if (auto xy = orbit.back_map(cur)) {
                    if (xy->first >= 0 && xy->second >= 0) {
                        candidates.push_back(*xy);
                        found = true;
                        break;
                    }
                    if (prev) {
                        bool growing = abs(xy->first) > abs(prev->first) &&
                                       abs(xy->second) > abs(prev->second);
                        bool same_signs = (xy->first < 0) == (prev->first < 0) &&
                                          (xy->second < 0) == (prev->second < 0);
                        if (growing && same_signs) {
                            if (++streak >= 2) break;
                        } else {
                            streak = 0;
                        }
                    }
                    prev = *xy;
                }
                cur = automorph_step(orbit.D0, orbit.automorph, cur, dir == 0);
            }
        }
    }

    if (candidates.empty()) return sol;
    sol.solvable = true;
    sol.witness = *std::min_element(
        candidates.begin(), candidates.end(),
        [](const point& a, const point& b) { return key_of(a) < key_of(b); });
    return sol;
}

}  // namespace dioph
