#include "dioph/kbase.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef DIOPH_DEFAULT_FACTS_PATH
#define DIOPH_DEFAULT_FACTS_PATH ""
#endif

namespace dioph {

std::string to_string(cell_status s) {
    switch (s) {
        case cell_status::D: return "D";
        case cell_status::U: return "U";
        case cell_status::OPEN: return "OPEN";
    }
    return {};
}

std::string to_string(problem_domain p) {
    return p == problem_domain::over_N ? "HN" : "HZ";
}

std::pair<Integer, Integer> rule_squares_substitution(const Integer& d, const Integer& n) {
    return {2 * d, 3 * n};
}

std::pair<Integer, Integer> rule_sun_reduction(const Integer& d, const Integer& n) {
    if (!n.fits_ulong_p()) throw std::invalid_argument("rule_sun_reduction: n too large");
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n.get_ui());
    return {std::max(2 * d, (2 * n + 3) * pow2), 2 * n + 2};
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == '\t') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

fact_bound parse_bound(const std::string& tok, bool allow_some) {
    if (tok == "ANY") return fact_bound::any();
    if (tok == "SOME") {
        if (!allow_some) throw std::runtime_error("fact file: SOME is only valid for d");
        return fact_bound::some();
    }
    return fact_bound::of(Integer(tok));
}

std::string cell_name(problem_domain p, const Integer& d, const Integer& n) {
    return to_string(p) + "(" + d.get_str() + "," + n.get_str() + ")";
}

}  // namespace

fact_table fact_table::from_string(std::string_view tsv) {
    fact_table table;
    std::istringstream in{std::string(tsv)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() < 5)
            throw std::runtime_error("fact file: line " + std::to_string(lineno) +
                                     " has fewer than 5 fields");
        grid_fact fact;
        if (fields[0] == "N") fact.problem = problem_domain::over_N;
        else if (fields[0] == "Z") fact.problem = problem_domain::over_Z;
        else throw std::runtime_error("fact file: bad problem token '" + fields[0] + "'");
        fact.d = parse_bound(fields[1], true);
        fact.n = parse_bound(fields[2], false);
        if (fields[3] == "U") fact.status = cell_status::U;
        else if (fields[3] == "D") fact.status = cell_status::D;
        else throw std::runtime_error("fact file: bad status token '" + fields[3] + "'");
        fact.citation = fields[4];
        if (fields.size() > 5) fact.caveat = fields[5];
        table.base_.push_back(std::move(fact));
    }
    table.close_and_validate();
    return table;
}

fact_table fact_table::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fact file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

fact_table fact_table::load_default() {
    if (const char* env = std::getenv("DIOPH_FACTS")) return load(env);
    std::string compiled = DIOPH_DEFAULT_FACTS_PATH;
    if (!compiled.empty()) return load(compiled);
    throw std::runtime_error("fact file: DIOPH_FACTS not set and no default path configured");
}

void fact_table::close_and_validate() {
    u_facts_.clear();
    for (const grid_fact& fact : base_) {
        if (fact.status != cell_status::U) continue;
        u_facts_.push_back(fact);
        if (fact.problem != problem_domain::over_N) continue;
        if (fact.d.kind != fact_bound::kind_t::value) continue;
        const Integer& d0 = fact.d.value;
        const Integer& n0 = fact.n.value;

        grid_fact derived;
        derived.problem = problem_domain::over_Z;
        derived.status = cell_status::U;
        derived.citation = fact.citation;
        derived.caveat = fact.caveat;
        derived.derived = true;

        auto [d1, n1] = rule_squares_substitution(d0, n0);
        derived.d = fact_bound::of(d1);
        derived.n = fact_bound::of(n1);
        derived.derivation = "from HN(" + d0.get_str() + "," + n0.get_str() +
                             ")=U by the three-squares substitution (degree doubles, "
                             "variables triple)";
        u_facts_.push_back(derived);

        auto [d2, n2] = rule_sun_reduction(d0, n0);
        derived.d = fact_bound::of(d2);
        derived.n = fact_bound::of(n2);
        derived.derivation = "from HN(" + d0.get_str() + "," + n0.get_str() +
                             ")=U by Sun's reduction to 2n+2 variables and degree "
                             "max{2d,(2n+3)*2^n}";
        u_facts_.push_back(derived);
    }

    // Consistency: no undecidable cell may fall inside the decidable
    // region {n <= 1} union {d <= 2}.
    for (const grid_fact& fact : u_facts_) {
        if (fact.d.kind != fact_bound::kind_t::value) continue;
        if (fact.d.value <= 2 || fact.n.value <= 1)
            throw std::runtime_error("fact file: undecidable fact inside the decidable region at " +
                                     cell_name(fact.problem, fact.d.value, fact.n.value));
    }
}

const grid_fact* fact_table::find_d_fact(problem_domain problem, const Integer& d,
                                         const Integer& n) const {
    // The decidable region has a fixed shape; pick the matching fact for
    // its citation. Preference: univariate, then linear, then the exact
    // binary-quadratic cell, then the general degree-2 result.
    auto find = [&](fact_bound::kind_t dk, const Integer& dv, fact_bound::kind_t nk,
                    const Integer& nv) -> const grid_fact* {
        for (const grid_fact& fact : base_) {
            if (fact.status != cell_status::D || fact.problem != problem) continue;
            if (fact.d.kind != dk || (dk == fact_bound::kind_t::value && fact.d.value != dv))
                continue;
            if (fact.n.kind != nk || (nk == fact_bound::kind_t::value && fact.n.value != nv))
                continue;
            return &fact;
        }
        return nullptr;
    };
    using K = fact_bound::kind_t;
    if (n <= 1) return find(K::any, 0, K::value, 1);
    if (d <= 1) return find(K::value, 1, K::any, 0);
    if (d == 2 && n == 2)
        if (const grid_fact* f = find(K::value, 2, K::value, 2)) return f;
    if (d <= 2) return find(K::value, 2, K::any, 0);
    return nullptr;
}

status_report fact_table::status(problem_domain problem, const Integer& d,
                                 const Integer& n) const {
    if (d < 0 || n < 0) throw std::invalid_argument("status: d and n must be nonnegative");
    status_report report;

    if (n <= 1 || d <= 2) {
        report.status = cell_status::D;
        if (const grid_fact* fact = find_d_fact(problem, d, n)) {
            report.citations.push_back(fact->citation);
        }
        if (d == 0) report.derivation = "degree 0: a constant polynomial, trivially checkable";
        else if (n == 0) report.derivation = "no variables: a constant polynomial, trivially checkable";
        return report;
    }

    // Undecidable iff some concrete U fact (d0, n0) satisfies d0 <= d and
    // n0 <= n: any instance of that cell is an instance of this one.
    const grid_fact* best = nullptr;
    for (const grid_fact& fact : u_facts_) {
        if (fact.problem != problem || fact.d.kind != fact_bound::kind_t::value) continue;
        if (fact.d.value > d || fact.n.value > n) continue;
        if (!best || fact.d.value < best->d.value ||
            (fact.d.value == best->d.value && fact.n.value < best->n.value))
            best = &fact;
    }
    if (best) {
        report.status = cell_status::U;
        std::string cite = best->citation;
        if (!best->caveat.empty()) cite += " (caveat: " + best->caveat + ")";
        report.citations.push_back(cite);
        report.derivation = cell_name(problem, best->d.value, best->n.value) + "=U";
        if (!best->derivation.empty()) report.derivation += " (" + best->derivation + ")";
        report.derivation += "; covered since " + best->d.value.get_str() +
                             " <= " + d.get_str() + " and " + best->n.value.get_str() +
                             " <= " + n.get_str();
        return report;
    }

    report.status = cell_status::OPEN;
    std::string extra;
    // A SOME fact contributes a note, never a concrete verdict.
    for (const grid_fact& fact : base_) {
        if (fact.status == cell_status::U && fact.problem == problem &&
            fact.d.kind == fact_bound::kind_t::some && fact.n.value <= n) {
            extra = "; undecidable for sufficiently large degree at " +
                    std::to_string(fact.n.value.get_ui()) + " variables [" + fact.citation + "]";
            if (!fact.caveat.empty()) extra += " (" + fact.caveat + ")";
        }
    }
    if (d == 3 && n == 2)
        extra +=
            "; the absolutely-irreducible cubic case is solvable (Baker & Coates 1970, "
            "Poulakis 1993/2002), but reducible degree-3 forms keep the cell open";

    // Nearest undecidable corners: minimal degree and minimal variables.
    const grid_fact* min_d = nullptr;
    const grid_fact* min_n = nullptr;
    for (const grid_fact& fact : u_facts_) {
        if (fact.problem != problem || fact.d.kind != fact_bound::kind_t::value) continue;
        if (!min_d || fact.d.value < min_d->d.value) min_d = &fact;
        if (!min_n || fact.n.value < min_n->n.value) min_n = &fact;
    }
    report.derivation = "outside the decidable region {n <= 1} u {d <= 2}";
    if (min_d)
        report.derivation += "; nearest undecidable corners: " +
                             cell_name(problem, min_d->d.value, min_d->n.value) +
                             " (smallest degree) and " +
                             cell_name(problem, min_n->d.value, min_n->n.value) +
                             " (fewest variables)";
    report.derivation += extra;
    return report;
}

std::string fact_table::explain(problem_domain problem, const Integer& d,
                                const Integer& n) const {
    status_report report = status(problem, d, n);
    std::string out = cell_name(problem, d, n) + " = " + to_string(report.status);
    for (const std::string& cite : report.citations) out += "\n  cite: " + cite;
    if (!report.derivation.empty()) out += "\n  " + report.derivation;
    return out;
}

}  // namespace dioph
