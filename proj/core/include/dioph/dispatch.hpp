#pragma once
// Routes a parsed equation to the right decision procedure and packages
// the answer with the grid status and citations.
//
// Dispatch: n <= 1 -> integer roots; d <= 1 -> linear solver per domain;
// d = 2, n <= 2 -> binary quadratic solver; d = 2, n >= 3 -> decidable by
// Siegel but not implemented here; otherwise the grid answer (undecidable
// class or open). An optional bounded oracle probe can upgrade any
// unsolved verdict to SOLVED, never to NO_SOLUTION.

#include "dioph/kbase.hpp"
#include "dioph/oracle.hpp"
#include "dioph/polynomial.hpp"

#include <optional>

namespace dioph {

enum class verdict_status {
    solved,
    no_solution,
    unknown_open,
    undecidable_class,
    decidable_unimplemented,
};

std::string to_string(verdict_status s);

struct verdict {
    verdict_status status;
    std::vector<std::string> vars;      // names, aligned with the witness
    std::optional<assignment> witness;  // present iff status == solved
    status_report grid;
    std::vector<std::string> notes;
};

verdict decide(const polynomial& p, solution_domain domain, const fact_table& kb,
               std::optional<unsigned> probe_radius = std::nullopt);

// 0 for SOLVED / NO_SOLUTION, 2 for the unsolved verdicts.
int exit_code(verdict_status s);

std::string render_text(const verdict& v);
// Schema: {status, witness?, grid: {status, citations, derivation?}, notes}
// with stable field order; all numbers are decimal strings.
std::string render_json(const verdict& v);

// Report for the `status` subcommand: the grid cell plus the matching
// verdict token (D -> DECIDABLE, U -> UNDECIDABLE_CLASS, OPEN ->
// UNKNOWN_OPEN).
std::string render_status_text(problem_domain problem, const Integer& d, const Integer& n,
                               const status_report& grid, const std::vector<std::string>& notes);
std::string render_status_json(const status_report& grid, const std::vector<std::string>& notes);

}  // namespace dioph
