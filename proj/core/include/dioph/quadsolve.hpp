#pragma once
// Complete decision procedure and solution-set description for binary
// quadratics  a x^2 + b xy + c y^2 + d x + e y + f = 0  over the integers,
// and the derived decision over the naturals.
//
// The classical theory asserts decidability; the concrete case analysis
// here (conic classification, completed squares, divisor enumeration,
// Pell reduction with automorph orbits) is validated against the
// brute-force oracle in the test suite.

#include "dioph/pell.hpp"
#include "dioph/polynomial.hpp"

#include <array>
#include <optional>
#include <string>

namespace dioph {

struct quadratic_equation {
    Integer a, b, c, d, e, f;

    Integer discriminant() const { return b * b - 4 * a * c; }
    Integer evaluate(const Integer& x, const Integer& y) const {
        return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
    }
};

// Builds the equation from a polynomial with degree <= 2 and at most two
// variables (first variable is x, second is y).
quadratic_equation equation_from(const polynomial& p);

enum class conic_class {
    degenerate_linear,     // a = b = c = 0
    elliptic,              // D < 0
    parabolic,             // D = 0
    hyperbolic_square,     // D > 0, perfect square
    hyperbolic_nonsquare,  // D > 0, not a square
};
conic_class classify(const quadratic_equation& q);

// One-parameter family: x(t) and y(t) are integer polynomials of degree
// <= 2 in an integer parameter t (coefficient order: constant, t, t^2).
struct param_family {
    std::array<Integer, 3> x{};
    std::array<Integer, 3> y{};

    Integer x_at(const Integer& t) const { return x[0] + x[1] * t + x[2] * t * t; }
    Integer y_at(const Integer& t) const { return y[0] + y[1] * t + y[2] * t * t; }
};

// An automorph orbit of the reduced Pell instance T^2 - D0 V^2 = N, with
// the affine back-map to (x, y) and its divisibility conditions. The
// original equation coefficients a, b, d enter the back-map:
//   T = 2 Dform y - lambda,   V = 2 s (2 a x + b y + d),
//   Dform = s^2 D0,           N = lambda^2 + 4 Dform nu.
// Admissibility of an orbit element (whether it maps back to integer
// (x, y)) depends only on (T, V) modulo a fixed modulus, so it is
// periodic along the orbit with the stored period.
struct pell_orbit {
    Integer D0, N;
    pell_pair rep;        // class representative
    pell_pair automorph;  // fundamental solution of T^2 - D0 U^2 = 1
    Integer s, Dform, lambda;
    Integer qa, qb, qd;  // equation coefficients a, b, d used by the back-map
    bool swapped = false;  // emit (y, x): the equation was solved with x and y exchanged
    unsigned long period = 1;
    std::pair<Integer, Integer> seed;  // one admissible (x, y)
    std::string note;

    // Maps an orbit element to (x, y) if the divisibility conditions hold.
    std::optional<std::pair<Integer, Integer>> back_map(const pell_pair& tv) const;
    // The (T, V) image of a solution (x, y) of the original equation.
    pell_pair forward_map(const Integer& x, const Integer& y) const;
    bool contains(const Integer& x, const Integer& y) const;
    // Admissible elements within |k| <= depth automorph steps of the rep.
    std::vector<std::pair<Integer, Integer>> sample(unsigned depth) const;
};

struct solution_description {
    enum class kind_t { empty, all, finite, families };
    kind_t kind = kind_t::empty;
    std::vector<std::pair<Integer, Integer>> points;  // finite case, sorted
    std::vector<param_family> families;
    std::vector<pell_orbit> orbits;
};

// A complete description of the integer solution set of q.
solution_description solve_quadratic_Z(const quadratic_equation& q);

struct nat_solution {
    bool solvable = false;
    std::pair<Integer, Integer> witness;
};

// Decides solvability over the naturals by filtering the integer
// description: finite sets by inspection, families by solving the
// nonnegativity constraints over the parameter, Pell orbits by walking
// each direction until the coordinates grow with stable signs.
nat_solution solve_quadratic_N(const quadratic_equation& q);

// True iff (x, y) belongs to the description.
bool description_contains(const solution_description& desc, const Integer& x, const Integer& y);

// Deterministic sample of solutions: all finite points, families at
// |t| <= t_range, orbits to the given depth. Sorted and deduplicated.
std::vector<std::pair<Integer, Integer>> sample_solutions(const solution_description& desc,
                                                          unsigned t_range, unsigned orbit_depth);

// Deterministic witness for a nonempty description, minimizing
// (|x| + |y|, x, y) over the inspected candidates.
std::optional<std::pair<Integer, Integer>> pick_witness(const solution_description& desc);

}  // namespace dioph
