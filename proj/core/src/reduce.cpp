#include "dioph/reduce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dioph {

namespace {

// Fresh names v<sep>1..3 per source variable, where sep is as many
// underscores as needed to avoid clashing with existing names.
std::vector<std::array<std::string, 3>> fresh_triples(const std::vector<std::string>& vars) {
    std::set<std::string> taken(vars.begin(), vars.end());
    for (std::string sep = "_";; sep += "_") {
        std::vector<std::array<std::string, 3>> triples;
        bool clash = false;
        for (const auto& v : vars) {
            std::array<std::string, 3> t = {v + sep + "1", v + sep + "2", v + sep + "3"};
            for (const auto& name : t)
                if (taken.count(name)) clash = true;
            triples.push_back(t);
        }
        if (!clash) return triples;
    }
}

}  // namespace

n_to_z_reduction naturals_to_integers(const polynomial& p) {
    n_to_z_reduction r;
    r.source = p;
    r.var_map = fresh_triples(p.vars());
    r.target = p;
    for (size_t i = 0; i < p.vars().size(); ++i) {
        const auto& [a, b, c] = r.var_map[i];
        polynomial va = polynomial::variable(a);
        polynomial vb = polynomial::variable(b);
        polynomial vc = polynomial::variable(c);
        polynomial gadget = va * va + vb * vb + vc * vc + vc;
        r.target = r.target.substitute(p.vars()[i], gadget);
    }
    return r;
}

assignment lift_witness(const n_to_z_reduction& r, const assignment& t) {
    if (t.size() != r.target.num_vars())
        throw std::invalid_argument("lift_witness: assignment length does not match target");
    if (r.target.evaluate(t) != 0)
        throw std::invalid_argument("lift_witness: target does not vanish at the given point");

    const auto& tvars = r.target.vars();
    auto value_of = [&](const std::string& name) -> const Integer& {
        auto it = std::lower_bound(tvars.begin(), tvars.end(), name);
        if (it == tvars.end() || *it != name)
            throw std::logic_error("lift_witness: mapped variable missing from target");
        return t[static_cast<size_t>(it - tvars.begin())];
    };

    assignment s;
    s.reserve(r.var_map.size());
    for (const auto& [a, b, c] : r.var_map) {
        const Integer& va = value_of(a);
        const Integer& vb = value_of(b);
        const Integer& vc = value_of(c);
        s.push_back(va * va + vb * vb + vc * vc + vc);
    }
    return s;
}

std::vector<polynomial> integers_to_naturals(const polynomial& p, unsigned cap) {
    const size_t n = p.num_vars();
    if (n > cap)
        throw std::invalid_argument("integers_to_naturals: variable count exceeds the 2^n cap");
    std::vector<polynomial> variants;
    variants.reserve(size_t{1} << n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        polynomial q = p;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (uint64_t{1} << i)) {
                const std::string& v = p.vars()[i];
                q = q.substitute(v, -polynomial::variable(v));
            }
        }
        variants.push_back(std::move(q));
    }
    return variants;
}

bool is_sum_of_three_squares(const Integer& x) {
    if (x < 0) throw std::invalid_argument("is_sum_of_three_squares: negative argument");
    if (x == 0) return true;
    Integer m = x;
    while (mod_floor(m, 4) == 0) m /= 4;
    return mod_floor(m, 8) != 7;
}

three_squares_rep three_squares_plus(const Integer& m) {
    if (m < 0) throw std::invalid_argument("three_squares_plus: negative argument");
    Integer t = 4 * m + 1;
    // 4m+1 = (2 x1)^2 + (2 x2)^2 + z^2 with z odd; such z always exists.
    for (Integer z = 1; z * z <= t; z += 2) {
        Integer r = (t - z * z) / 4;
        for (Integer x = 0; x * x <= r; ++x) {
            if (auto y = exact_sqrt(r - x * x)) {
                three_squares_rep rep;
                rep.x1 = std::max(x, *y);
                rep.x2 = std::min(x, *y);
                rep.x3 = (z - 1) / 2;
                return rep;
            }
        }
    }
    throw std::logic_error("three_squares_plus: search failed (unreachable)");
}

}  // namespace dioph
