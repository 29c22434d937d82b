#include "dioph/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace dioph {

bool grlex_less::operator()(const exponent_vec& a, const exponent_vec& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

polynomial polynomial::constant(Integer c) {
    polynomial p;
    if (c != 0) p.terms_.emplace(exponent_vec{}, std::move(c));
    return p;
}

polynomial polynomial::variable(const std::string& name) {
    polynomial p;
    p.vars_ = {name};
    p.terms_.emplace(exponent_vec{1}, Integer(1));
    return p;
}

polynomial polynomial::from_terms(
    const std::vector<std::pair<std::map<std::string, unsigned>, Integer>>& terms) {
    polynomial r;
    for (const auto& [mono, coeff] : terms) {
        polynomial t = constant(coeff);
        for (const auto& [name, exp] : mono) t = t * variable(name).pow(exp);
        r = r + t;
    }
    return r;
}

void polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    if (vars_.empty()) return;
    // Drop variable slots that occur with exponent zero everywhere.
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> new_vars;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            keep.push_back(i);
            new_vars.push_back(vars_[i]);
        }
    term_map new_terms;
    for (const auto& [e, c] : terms_) {
        exponent_vec ne(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        new_terms.emplace(std::move(ne), c);
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
}

unsigned polynomial::degree() const {
    if (terms_.empty()) return 0;
    // grlex order: the last term has maximal total degree.
    const exponent_vec& e = terms_.rbegin()->first;
    return static_cast<unsigned>(std::accumulate(e.begin(), e.end(), 0ul));
}

Integer polynomial::coefficient(const exponent_vec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer polynomial::constant_term() const {
    return coefficient(exponent_vec(vars_.size(), 0));
}

Integer polynomial::evaluate(const assignment& a) const {
    if (a.size() != vars_.size())
        throw std::invalid_argument("evaluate: assignment length does not match variable count");
    Integer total = 0;
    Integer mono, pw;
    for (const auto& [e, c] : terms_) {
        mono = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mpz_pow_ui(pw.get_mpz_t(), a[i].get_mpz_t(), e[i]);
            mono *= pw;
        }
        total += mono;
    }
    return total;
}

// Re-expresses both polynomials over the union of their variable lists,
// then merges term maps.
polynomial aligned_combine(const polynomial& p, const polynomial& q, bool subtract) {
    std::vector<std::string> all;
    std::set_union(p.vars_.begin(), p.vars_.end(), q.vars_.begin(), q.vars_.end(),
                   std::back_inserter(all));
    auto slot_map = [&all](const std::vector<std::string>& vars) {
        std::vector<size_t> m(vars.size());
        for (size_t i = 0; i < vars.size(); ++i)
            m[i] = static_cast<size_t>(
                std::lower_bound(all.begin(), all.end(), vars[i]) - all.begin());
        return m;
    };
    auto pm = slot_map(p.vars_), qm = slot_map(q.vars_);

    polynomial r;
    r.vars_ = all;
    auto add_terms = [&](const polynomial& src, const std::vector<size_t>& m, bool neg) {
        for (const auto& [e, c] : src.terms_) {
            exponent_vec ne(all.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[m[i]] = e[i];
            auto [it, inserted] = r.terms_.emplace(std::move(ne), neg ? Integer(-c) : c);
            if (!inserted) it->second += neg ? -c : c;
        }
    };
    add_terms(p, pm, false);
    add_terms(q, qm, subtract);
    r.normalize();
    return r;
}

polynomial operator+(const polynomial& p, const polynomial& q) {
    return aligned_combine(p, q, false);
}

polynomial operator-(const polynomial& p, const polynomial& q) {
    return aligned_combine(p, q, true);
}

polynomial polynomial::operator-() const {
    polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

polynomial operator*(const polynomial& p, const polynomial& q) {
    if (p.is_zero() || q.is_zero()) return polynomial{};
    std::vector<std::string> all;
    std::set_union(p.vars_.begin(), p.vars_.end(), q.vars_.begin(), q.vars_.end(),
                   std::back_inserter(all));
    auto slot_map = [&all](const std::vector<std::string>& vars) {
        std::vector<size_t> m(vars.size());
        for (size_t i = 0; i < vars.size(); ++i)
            m[i] = static_cast<size_t>(
                std::lower_bound(all.begin(), all.end(), vars[i]) - all.begin());
        return m;
    };
    auto pm = slot_map(p.vars_), qm = slot_map(q.vars_);

    polynomial r;
    r.vars_ = all;
    for (const auto& [pe, pc] : p.terms_) {
        for (const auto& [qe, qc] : q.terms_) {
            exponent_vec ne(all.size(), 0);
            for (size_t i = 0; i < pe.size(); ++i) ne[pm[i]] += pe[i];
            for (size_t i = 0; i < qe.size(); ++i) ne[qm[i]] += qe[i];
            Integer prod = pc * qc;
            auto [it, inserted] = r.terms_.emplace(std::move(ne), std::move(prod));
            if (!inserted) it->second += pc * qc;
        }
    }
    r.normalize();
    return r;
}

polynomial polynomial::pow(unsigned k) const {
    polynomial result = constant(1);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

bool operator==(const polynomial& p, const polynomial& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
}

polynomial polynomial::substitute(const std::string& var, const polynomial& q) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var)
        throw std::invalid_argument("substitute: unknown variable '" + var + "'");
    size_t slot = static_cast<size_t>(it - vars_.begin());

    unsigned max_exp = 0;
    for (const auto& [e, c] : terms_) max_exp = std::max(max_exp, e[slot]);
    std::vector<polynomial> q_pow(max_exp + 1);
    q_pow[0] = constant(1);
    for (unsigned i = 1; i <= max_exp; ++i) q_pow[i] = q_pow[i - 1] * q;

    polynomial result;
    for (const auto& [e, c] : terms_) {
        polynomial rest;
        rest.vars_ = vars_;
        exponent_vec ne = e;
        ne[slot] = 0;
        rest.terms_.emplace(std::move(ne), c);
        rest.normalize();
        result = result + rest * q_pow[e[slot]];
    }
    return result;
}

std::string polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c < 0;
        Integer mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

polynomial_metrics metrics(const polynomial& p) {
    return {p.degree(), p.num_vars()};
}

}  // namespace dioph
