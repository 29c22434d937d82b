// Command-line front end: parse an equation, consult the decidability
// grid, dispatch to the matching solver, and report with citations.

#include "dioph/cubes.hpp"
#include "dioph/dispatch.hpp"
#include "dioph/linsolve.hpp"
#include "dioph/reduce.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace dioph;
using ordered_json = nlohmann::ordered_json;

namespace {

int cmd_solve(const std::string& text, const std::string& domain, bool json,
              std::optional<unsigned> probe) {
    polynomial p;
    try {
        p = parse_polynomial(text);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    fact_table kb = fact_table::load_default();
    solution_domain dom =
        domain == "N" ? solution_domain::naturals : solution_domain::integers;
    verdict v = decide(p, dom, kb, probe);
    std::cout << (json ? render_json(v) : render_text(v)) << "\n";
    return exit_code(v.status);
}

int cmd_status(const std::string& domain, const std::string& degree, const std::string& vars,
               bool json) {
    Integer d(degree), n(vars);
    std::vector<std::string> notes;
    status_report grid;
    problem_domain problem = problem_domain::over_Z;
    if (domain == "Q") {
        grid.status = cell_status::OPEN;
        grid.derivation =
            "decidability over the rationals is an open problem for every degree and "
            "variable count";
        notes.push_back("only the N and Z grids carry cell-level facts");
    } else {
        problem = domain == "N" ? problem_domain::over_N : problem_domain::over_Z;
        fact_table kb = fact_table::load_default();
        grid = kb.status(problem, d, n);
    }
    std::cout << (json ? render_status_json(grid, notes)
                       : render_status_text(problem, d, n, grid, notes))
              << "\n";
    return grid.status == cell_status::D ? 0 : 2;
}

int cmd_reduce_n2z(const std::string& text, bool json) {
    polynomial p = parse_polynomial(text);
    n_to_z_reduction r = naturals_to_integers(p);
    if (json) {
        ordered_json j;
        j["source"] = r.source.str();
        j["target"] = r.target.str();
        ordered_json m = ordered_json::object();
        for (size_t i = 0; i < r.var_map.size(); ++i)
            m[p.vars()[i]] = {r.var_map[i][0], r.var_map[i][1], r.var_map[i][2]};
        j["var_map"] = m;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "source: " << r.source.str() << "\n";
        std::cout << "target: " << r.target.str() << "\n";
        for (size_t i = 0; i < r.var_map.size(); ++i)
            std::cout << "  " << p.vars()[i] << " -> " << r.var_map[i][0] << "^2 + "
                      << r.var_map[i][1] << "^2 + " << r.var_map[i][2] << "^2 + "
                      << r.var_map[i][2] << "\n";
    }
    return 0;
}

int cmd_reduce_z2n(const std::string& text, bool json) {
    polynomial p = parse_polynomial(text);
    std::vector<polynomial> variants = integers_to_naturals(p);
    if (json) {
        ordered_json j = ordered_json::array();
        for (const polynomial& q : variants) j.push_back(q.str());
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < variants.size(); ++i)
            std::cout << "variant " << i << ": " << variants[i].str() << "\n";
    }
    return 0;
}

int cmd_cubes_search(long long k, uint64_t bound, bool json) {
    cube_result r = search_three_cubes(k, bound);
    if (json) {
        ordered_json j;
        j["k"] = r.k;
        j["outcome"] = r.outcome == cube_result::outcome_t::obstructed ? "obstructed"
                       : r.outcome == cube_result::outcome_t::found    ? "found"
                                                                       : "not-found";
        if (r.outcome == cube_result::outcome_t::found) j["triple"] = {r.x, r.y, r.z};
        j["bound"] = r.bound;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(r) << "\n";
    }
    // The obstruction is a proof of unsolvability; an exhausted bound is not.
    return r.outcome == cube_result::outcome_t::not_found ? 2 : 0;
}

int cmd_cubes_survey(uint64_t kmax, uint64_t bound, bool json) {
    std::vector<cube_result> rs = survey(kmax, bound);
    if (json) {
        ordered_json j = ordered_json::array();
        for (const cube_result& r : rs) {
            ordered_json e;
            e["k"] = r.k;
            e["outcome"] = r.outcome == cube_result::outcome_t::obstructed ? "obstructed"
                           : r.outcome == cube_result::outcome_t::found    ? "found"
                                                                           : "not-found";
            if (r.outcome == cube_result::outcome_t::found) e["triple"] = {r.x, r.y, r.z};
            j.push_back(e);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const cube_result& r : rs) std::cout << to_string(r) << "\n";
    }
    return 0;
}

int cmd_frobenius(const std::vector<std::string>& args, bool json) {
    std::vector<Integer> gens;
    for (const std::string& a : args) gens.emplace_back(a);
    frobenius_descriptor d = compute_frobenius_descriptor(gens);
    if (json) {
        ordered_json j;
        j["g"] = d.g.get_str();
        j["threshold"] = d.threshold.get_str();
        ordered_json ex = ordered_json::array();
        for (const Integer& e : d.exceptions) ex.push_back(e.get_str());
        j["exceptions"] = ex;
        if (gens.size() == 2 && gcd(gens[0], gens[1]) == 1)
            j["frobenius_number"] = frobenius_number(gens[0], gens[1]).get_str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "g = " << d.g << ", threshold M = " << d.threshold << "\n";
        std::cout << "representable = exceptions u { " << d.g << "*x : x >= " << d.threshold
                  << " }\n";
        std::cout << "exceptions = {";
        for (size_t i = 0; i < d.exceptions.size(); ++i)
            std::cout << (i ? ", " : "") << d.exceptions[i];
        std::cout << "}\n";
        if (gens.size() == 2 && gcd(gens[0], gens[1]) == 1)
            std::cout << "frobenius number = " << frobenius_number(gens[0], gens[1]) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision toolkit for Diophantine equations"};
    app.require_subcommand(1);

    // solve
    std::string solve_poly, solve_domain = "Z";
    bool solve_json = false;
    unsigned probe_radius = 0;
    auto* solve = app.add_subcommand("solve", "decide a polynomial equation p = 0");
    solve->add_option("--domain", solve_domain, "solution domain")
        ->check(CLI::IsMember({"N", "Z"}))
        ->required();
    auto* probe_opt = solve->add_option("--probe", probe_radius,
                                        "bounded oracle probe radius for unsolved classes");
    solve->add_flag("--json", solve_json, "emit JSON");
    solve->add_option("poly", solve_poly, "polynomial expression")->required();

    // status
    std::string st_domain, st_degree, st_vars;
    bool st_json = false;
    auto* status = app.add_subcommand("status", "decidability status of a (degree, vars) cell");
    status->add_option("--domain", st_domain)->check(CLI::IsMember({"N", "Z", "Q"}))->required();
    status->add_option("--degree", st_degree)->required();
    status->add_option("--vars", st_vars)->required();
    status->add_flag("--json", st_json, "emit JSON");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "N<->Z reductions");
    reduce->require_subcommand(1);
    std::string n2z_poly, z2n_poly;
    bool n2z_json = false, z2n_json = false;
    auto* n2z = reduce->add_subcommand("n2z", "replace each variable by a three-squares gadget");
    n2z->add_option("poly", n2z_poly)->required();
    n2z->add_flag("--json", n2z_json);
    auto* z2n = reduce->add_subcommand("z2n", "the 2^n sign variants");
    z2n->add_option("poly", z2n_poly)->required();
    z2n->add_flag("--json", z2n_json);

    // cubes
    auto* cubes = app.add_subcommand("cubes", "x^3 + y^3 + z^3 = k search");
    cubes->require_subcommand(1);
    long long cube_k = 0;
    uint64_t cube_bound = 0, cube_kmax = 0, survey_bound = 0;
    bool search_json = false, survey_json = false;
    auto* search = cubes->add_subcommand("search", "search one k");
    search->add_option("--k", cube_k)->required();
    search->add_option("--bound", cube_bound)->required();
    search->add_flag("--json", search_json);
    auto* surv = cubes->add_subcommand("survey", "search every k in [1, kmax]");
    surv->add_option("--kmax", cube_kmax)->required();
    surv->add_option("--bound", survey_bound)->required();
    surv->add_flag("--json", survey_json);

    // frobenius
    std::vector<std::string> frob_gens;
    bool frob_json = false;
    auto* frob = app.add_subcommand("frobenius", "Frobenius descriptor of a generator set");
    frob->add_option("generators", frob_gens, "positive integers")->required()->expected(-1);
    frob->add_flag("--json", frob_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(solve_poly, solve_domain, solve_json,
                             probe_opt->count() ? std::optional<unsigned>(probe_radius)
                                                : std::nullopt);
        if (status->parsed()) return cmd_status(st_domain, st_degree, st_vars, st_json);
        if (n2z->parsed()) return cmd_reduce_n2z(n2z_poly, n2z_json);
        if (z2n->parsed()) return cmd_reduce_z2n(z2n_poly, z2n_json);
        if (search->parsed()) return cmd_cubes_search(cube_k, cube_bound, search_json);
        if (surv->parsed()) return cmd_cubes_survey(cube_kmax, survey_bound, survey_json);
        if (frob->parsed()) return cmd_frobenius(frob_gens, frob_json);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
