#include "dioph/integer.hpp"

#include <stdexcept>

namespace dioph {

Integer fdiv(const Integer& a, const Integer& b) {
    if (b == 0) throw std::invalid_argument("fdiv: division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer cdiv(const Integer& a, const Integer& b) {
    if (b == 0) throw std::invalid_argument("cdiv: division by zero");
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    if (b == 0) throw std::invalid_argument("mod_floor: division by zero");
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bezout extended_gcd(const Integer& a, const Integer& b) {
    bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
    if (!is_perfect_square(n)) return std::nullopt;
    return isqrt(n);
}

Integer floor_sqrt_ratio(const Integer& num, const Integer& den) {
    if (num < 0 || den <= 0) throw std::invalid_argument("floor_sqrt_ratio: bad arguments");
    // k <= sqrt(num/den)  <=>  k*k*den <= num
    Integer k = isqrt(fdiv(num, den));
    while (k * k * den > num) --k;
    while ((k + 1) * (k + 1) * den <= num) ++k;
    return k;
}

Integer ceil_sqrt_ratio(const Integer& num, const Integer& den) {
    if (num < 0 || den <= 0) throw std::invalid_argument("ceil_sqrt_ratio: bad arguments");
    Integer k = floor_sqrt_ratio(num, den);
    if (k * k * den == num) return k;
    return k + 1;
}

std::pair<Integer, Integer> extract_square_part(const Integer& n) {
    if (n <= 0) throw std::invalid_argument("extract_square_part: argument must be positive");
    Integer rest = n;
    Integer s = 1;
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= static_cast<unsigned long>(p);
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) s *= static_cast<unsigned long>(p);
    };
    const unsigned long trial_bound = 1000000;
    strip(2);
    for (unsigned long p = 3; Integer(p) * p <= rest && p <= trial_bound; p += 2) strip(p);
    return {s, n / (s * s)};
}

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw std::invalid_argument("divisors: zero has no finite divisor list");
    Integer m = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= m; ++d) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            Integer q = m / d;
            if (q != d) large.push_back(q);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace dioph
