#pragma once
// Knowledge base of decidability statuses for the (degree, variable-count)
// grid, over N and over Z. Base facts live in a tab-separated data file;
// the table derives further undecidable cells by the two N-to-Z reduction
// rules and answers point queries with citations.
//
// The decidable region is exactly {n <= 1} union {d <= 2} for both
// problems; undecidable cells are upward closed (more degree or more
// variables never helps).

#include "dioph/integer.hpp"

#include <string_view>

namespace dioph {

enum class problem_domain { over_N, over_Z };
enum class cell_status { D, U, OPEN };

struct fact_bound {
    enum class kind_t { value, any, some } kind = kind_t::value;
    Integer value;  // meaningful only when kind == value

    static fact_bound of(Integer v) { return {kind_t::value, std::move(v)}; }
    static fact_bound any() { return {kind_t::any, 0}; }
    static fact_bound some() { return {kind_t::some, 0}; }
};

struct grid_fact {
    problem_domain problem;
    fact_bound d, n;
    cell_status status;  // D or U
    std::string citation;
    std::string caveat;      // empty when none
    bool derived = false;    // produced by a reduction rule
    std::string derivation;  // how a derived fact was obtained
};

struct status_report {
    cell_status status;
    std::vector<std::string> citations;
    std::string derivation;  // empty when there is nothing to say
};

class fact_table {
public:
    // Loads facts from a TSV file (columns: problem, d, n, status,
    // citation, caveat; '#' starts a comment) and computes the closure.
    // Throws std::runtime_error on malformed or inconsistent data.
    static fact_table load(const std::string& path);
    static fact_table from_string(std::string_view tsv);
    // DIOPH_FACTS env var if set, otherwise the path configured at build
    // time.
    static fact_table load_default();

    const std::vector<grid_fact>& base_facts() const { return base_; }
    // Base U facts plus the ones derived by the reduction rules.
    const std::vector<grid_fact>& undecidable_facts() const { return u_facts_; }

    status_report status(problem_domain problem, const Integer& d, const Integer& n) const;
    // Human-readable derivation chain; OPEN answers describe the nearest
    // known undecidable corners and the decidable boundary.
    std::string explain(problem_domain problem, const Integer& d, const Integer& n) const;

private:
    std::vector<grid_fact> base_;
    std::vector<grid_fact> u_facts_;

    void close_and_validate();
    const grid_fact* find_d_fact(problem_domain problem, const Integer& d, const Integer& n) const;
};

// The two reduction rules, exposed for direct checking. Both take an
// undecidable cell of the problem over N.
// Squares substitution: (d, n) -> (2d, 3n) over Z.
std::pair<Integer, Integer> rule_squares_substitution(const Integer& d, const Integer& n);
// Sun's reduction: (d, n) -> (max{2d, (2n+3) 2^n}, 2n+2) over Z.
std::pair<Integer, Integer> rule_sun_reduction(const Integer& d, const Integer& n);

std::string to_string(cell_status s);
std::string to_string(problem_domain p);

}  // namespace dioph
