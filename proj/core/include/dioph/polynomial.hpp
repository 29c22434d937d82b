#pragma once
// Sparse multivariate polynomials over arbitrary-precision integers.
//
// A polynomial stores a map from exponent vectors to nonzero coefficients,
// plus an ordered list of variable names. The representation is canonical:
// variable names are kept sorted, variables that occur nowhere are dropped,
// and terms are ordered graded-lexicographically so printing is
// deterministic and the total degree can be read off the last map entry.
//
// Polynomials are immutable values after construction; all operations are
// pure and safe to share across threads.

#include "dioph/integer.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

using exponent_vec = std::vector<unsigned>;
using assignment = std::vector<Integer>;

// Graded lexicographic order: compare total degree first, then the
// exponent vector lexicographically.
struct grlex_less {
    bool operator()(const exponent_vec& a, const exponent_vec& b) const;
};

class polynomial {
public:
    using term_map = std::map<exponent_vec, Integer, grlex_less>;

    polynomial() = default;  // the zero polynomial
    static polynomial constant(Integer c);
    static polynomial variable(const std::string& name);

    // Builds a polynomial from (variable name -> exponent) monomials.
    static polynomial from_terms(
        const std::vector<std::pair<std::map<std::string, unsigned>, Integer>>& terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }

    // Maximum total degree over all terms; 0 for the zero polynomial.
    unsigned degree() const;
    // Number of variables actually occurring.
    size_t num_vars() const { return vars_.size(); }

    // Coefficient of the given exponent vector (aligned with vars()).
    Integer coefficient(const exponent_vec& e) const;
    // Constant term.
    Integer constant_term() const;

    // Exact value at an assignment; the assignment length must equal
    // num_vars() and is aligned with vars().
    Integer evaluate(const assignment& a) const;

    // Replaces every occurrence of `var` by q, expanded and canonicalized.
    // Throws std::invalid_argument if `var` does not occur.
    polynomial substitute(const std::string& var, const polynomial& q) const;

    polynomial operator-() const;
    friend polynomial operator+(const polynomial& p, const polynomial& q);
    friend polynomial operator-(const polynomial& p, const polynomial& q);
    friend polynomial operator*(const polynomial& p, const polynomial& q);
    polynomial pow(unsigned k) const;
    friend bool operator==(const polynomial& p, const polynomial& q);

    // Canonical printer: descending graded-lex term order, explicit '*'
    // and '^'. parse_polynomial(str()) reproduces the polynomial.
    std::string str() const;

private:
    std::vector<std::string> vars_;  // sorted ascending
    term_map terms_;                 // no zero coefficients

    void normalize();
    friend polynomial aligned_combine(const polynomial& p, const polynomial& q, bool subtract);
};

struct parse_error : std::runtime_error {
    size_t position;  // 0-based offset into the input text
    parse_error(const std::string& message, size_t pos);
};

// Parses the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | var ('^' natural)? | '(' expr ')' | '-' factor
// with insignificant whitespace. Throws parse_error on malformed input.
polynomial parse_polynomial(std::string_view text);

struct polynomial_metrics {
    unsigned degree;
    size_t num_vars;
};
polynomial_metrics metrics(const polynomial& p);

}  // namespace dioph
