#include "dioph/oracle.hpp"

#include <stdexcept>

namespace dioph {

box_result box_search(const box_query& q) {
    if (q.cap == 0) throw std::invalid_argument("box_search: cap must be >= 1");
    const size_t n = q.p.num_vars();
    const long lo = q.domain == solution_domain::naturals ? 0 : -static_cast<long>(q.radius);
    const long hi = static_cast<long>(q.radius);
    const uint64_t width = static_cast<uint64_t>(hi - lo + 1);

    Integer points = 1;
    for (size_t i = 0; i < n; ++i) points *= width;
    if (points > Integer(static_cast<unsigned long>(q.budget)))
        throw std::domain_error("box_search: box exceeds the evaluation budget");

    box_result result;
    result.exhausted = true;

    assignment a(n, Integer(lo));
    for (;;) {
        if (q.p.evaluate(a) == 0) {
            if (result.witnesses.size() == q.cap) {
                // One more zero than the cap allows: the scan is incomplete.
                result.exhausted = false;
                return result;
            }
            result.witnesses.push_back(a);
        }
        // Odometer increment, last coordinate fastest; this yields
        // lexicographic output order.
        size_t i = n;
        while (i > 0) {
            --i;
            if (a[i] < hi) {
                ++a[i];
                for (size_t j = i + 1; j < n; ++j) a[j] = lo;
                break;
            }
            if (i == 0) return result;
        }
        if (n == 0) return result;
    }
}

}  // namespace dioph
