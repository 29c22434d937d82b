#include "dioph/dispatch.hpp"

#include "dioph/linsolve.hpp"
#include "dioph/quadsolve.hpp"

#include <json.hpp>

#include <algorithm>

namespace dioph {

using ordered_json = nlohmann::ordered_json;

std::string to_string(verdict_status s) {
    switch (s) {
        case verdict_status::solved: return "SOLVED";
        case verdict_status::no_solution: return "NO_SOLUTION";
        case verdict_status::unknown_open: return "UNKNOWN_OPEN";
        case verdict_status::undecidable_class: return "UNDECIDABLE_CLASS";
        case verdict_status::decidable_unimplemented: return "DECIDABLE_UNIMPLEMENTED";
    }
    return {};
}

int exit_code(verdict_status s) {
    return (s == verdict_status::solved || s == verdict_status::no_solution) ? 0 : 2;
}

namespace {

problem_domain to_problem(solution_domain d) {
    return d == solution_domain::naturals ? problem_domain::over_N : problem_domain::over_Z;
}

void set_witness(verdict& v, const polynomial& p, assignment w) {
    if (p.evaluate(w) != 0)
        throw std::logic_error("decide: witness does not evaluate to zero");
    v.witness = std::move(w);
    v.status = verdict_status::solved;
}

// Describes the solution set size/shape for the notes.
std::string describe(const solution_description& desc) {
    using kind_t = solution_description::kind_t;
    switch (desc.kind) {
        case kind_t::all: return "every pair is a solution";
        case kind_t::empty: return "the solution set is empty";
        case kind_t::finite: return "finite solution set with " +
                                    std::to_string(desc.points.size()) + " point(s)";
        case kind_t::families: {
            std::string s = "infinite solution set:";
            if (!desc.families.empty())
                s += " " + std::to_string(desc.families.size()) + " parametric family(ies)";
            if (!desc.orbits.empty()) {
                if (!desc.families.empty()) s += ",";
                s += " " + std::to_string(desc.orbits.size()) + " Pell orbit(s), automorph (" +
                     desc.orbits.front().automorph.t.get_str() + ", " +
                     desc.orbits.front().automorph.u.get_str() + ")";
            }
            return s;
        }
    }
    return {};
}

}  // namespace

verdict decide(const polynomial& p, solution_domain domain, const fact_table& kb,
               std::optional<unsigned> probe_radius) {
    const auto [deg, nvars] = metrics(p);
    verdict v;
    v.vars = p.vars();
    v.grid = kb.status(to_problem(domain), deg, nvars);

    if (nvars <= 1) {
        integer_roots_result roots = integer_roots(p);
        if (roots.all_integers) {
            v.notes.push_back("identically zero: every assignment is a solution");
            set_witness(v, p, assignment(nvars, 0));
            return v;
        }
        std::vector<Integer> usable;
        for (const Integer& r : roots.roots)
            if (domain == solution_domain::integers || r >= 0) usable.push_back(r);
        if (usable.empty()) {
            v.status = verdict_status::no_solution;
            if (nvars == 1)
                v.notes.push_back("no " + std::string(domain == solution_domain::naturals
                                                          ? "natural"
                                                          : "integer") +
                                  " root among the divisors of the trailing coefficient");
            return v;
        }
        std::sort(usable.begin(), usable.end(), [](const Integer& a, const Integer& b) {
            return abs(a) != abs(b) ? abs(a) < abs(b) : a < b;
        });
        v.notes.push_back("root set: {" + [&] {
            std::string s;
            for (const Integer& r : roots.roots) s += (s.empty() ? "" : ", ") + r.get_str();
            return s;
        }() + "}");
        set_witness(v, p, {usable.front()});
        return v;
    }

    if (deg <= 1) {
        // p = sum a_i x_i + c = 0, i.e. sum a_i x_i = -c.
        std::vector<Integer> coeffs;
        for (size_t i = 0; i < nvars; ++i) {
            exponent_vec e(nvars, 0);
            e[i] = 1;
            coeffs.push_back(p.coefficient(e));
        }
        Integer b = -p.constant_term();
        linear_solution sol = domain == solution_domain::integers ? solve_linear_Z(coeffs, b)
                                                                  : solve_linear_N(coeffs, b);
        if (sol.solvable) {
            set_witness(v, p, sol.witness);
        } else {
            v.status = verdict_status::no_solution;
            v.notes.push_back(sol.reason);
        }
        return v;
    }

    if (deg == 2 && nvars == 2) {
        quadratic_equation q = equation_from(p);
        if (domain == solution_domain::integers) {
            solution_description desc = solve_quadratic_Z(q);
            v.notes.push_back(describe(desc));
            if (auto w = pick_witness(desc)) {
                set_witness(v, p, {w->first, w->second});
            } else {
                v.status = verdict_status::no_solution;
            }
        } else {
            nat_solution sol = solve_quadratic_N(q);
            if (sol.solvable) set_witness(v, p, {sol.witness.first, sol.witness.second});
            else v.status = verdict_status::no_solution;
        }
        return v;
    }

    // No complete procedure wired up; classify the cell and optionally
    // probe a bounded box. A failed probe proves nothing.
    if (deg == 2) {
        v.status = verdict_status::decidable_unimplemented;
        v.notes.push_back(
            "degree 2 in 3 or more variables is decidable, but that procedure is not "
            "implemented here");
    } else if (v.grid.status == cell_status::U) {
        v.status = verdict_status::undecidable_class;
        v.notes.push_back("the (degree, variables) class admits no decision procedure");
    } else {
        v.status = verdict_status::unknown_open;
        v.notes.push_back("no decision procedure is known for this (degree, variables) class");
    }

    if (probe_radius) {
        box_query q;
        q.p = p;
        q.radius = *probe_radius;
        q.domain = domain;
        q.cap = 1;
        box_result r = box_search(q);
        if (!r.witnesses.empty()) {
            v.notes.push_back("witness found by an exhaustive probe of radius " +
                              std::to_string(*probe_radius));
            set_witness(v, p, r.witnesses.front());
        } else {
            v.notes.push_back("probe of radius " + std::to_string(*probe_radius) +
                              " found no witness (one-sided: this is not a NO)");
        }
    }
    return v;
}

namespace {

ordered_json grid_json(const status_report& grid) {
    ordered_json g;
    g["status"] = to_string(grid.status);
    g["citations"] = grid.citations;
    if (!grid.derivation.empty()) g["derivation"] = grid.derivation;
    return g;
}

}  // namespace

std::string render_text(const verdict& v) {
    std::string out = "status: " + to_string(v.status) + "\n";
    if (v.witness) {
        out += "witness:";
        if (v.witness->empty()) out += " (empty assignment)";
        for (size_t i = 0; i < v.witness->size(); ++i)
            out += (i ? ", " : " ") + v.vars[i] + " = " + (*v.witness)[i].get_str();
        out += "\n";
    }
    out += "grid: " + to_string(v.grid.status);
    for (const std::string& c : v.grid.citations) out += " [" + c + "]";
    out += "\n";
    if (!v.grid.derivation.empty()) out += "  " + v.grid.derivation + "\n";
    for (const std::string& n : v.notes) out += "note: " + n + "\n";
    return out;
}

std::string render_json(const verdict& v) {
    ordered_json j;
    j["status"] = to_string(v.status);
    if (v.witness) {
        ordered_json w = ordered_json::object();
        for (size_t i = 0; i < v.witness->size(); ++i) w[v.vars[i]] = (*v.witness)[i].get_str();
        j["witness"] = w;
    }
    j["grid"] = grid_json(v.grid);
    j["notes"] = v.notes;
    return j.dump(2);
}

std::string render_status_text(problem_domain problem, const Integer& d, const Integer& n,
                               const status_report& grid, const std::vector<std::string>& notes) {
    std::string token = grid.status == cell_status::D    ? "DECIDABLE"
                        : grid.status == cell_status::U  ? "UNDECIDABLE_CLASS"
                                                         : "UNKNOWN_OPEN";
    std::string out = to_string(problem) + "(" + d.get_str() + "," + n.get_str() +
                      ") = " + to_string(grid.status) + "  [" + token + "]\n";
    for (const std::string& c : grid.citations) out += "cite: " + c + "\n";
    if (!grid.derivation.empty()) out += grid.derivation + "\n";
    for (const std::string& note : notes) out += "note: " + note + "\n";
    return out;
}

std::string render_status_json(const status_report& grid, const std::vector<std::string>& notes) {
    ordered_json j;
    j["status"] = grid.status == cell_status::D    ? "DECIDABLE"
                  : grid.status == cell_status::U  ? "UNDECIDABLE_CLASS"
                                                   : "UNKNOWN_OPEN";
    j["grid"] = grid_json(grid);
    j["notes"] = notes;
    return j.dump(2);
}

}  // namespace dioph
