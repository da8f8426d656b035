#include "zcs/correlation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zcs {

namespace detail {

void accf_accumulate(const QarySequence& c, const QarySequence& d, int u,
                     std::span<long long> acc) {
    const int q = c.q();
    const int len = c.length() - std::abs(u);
    // Both branches of the shift reduce to pairing c[i+u] with d[i] over
    // the overlap window; for u < 0 the window starts at i = -u in d.
    const int* cp = c.exponents().data() + (u >= 0 ? u : 0);
    const int* dp = d.exponents().data() + (u >= 0 ? 0 : -u);
    for (int i = 0; i < len; ++i) {
        int diff = cp[i] - dp[i];
        if (diff < 0)
            diff += q;
        ++acc[static_cast<std::size_t>(diff)];
    }
}

}  // namespace detail

CycloValue accf(const QarySequence& c, const QarySequence& d, int u) {
    if (c.q() != d.q())
        throw std::invalid_argument("accf: mismatched q");
    if (c.length() != d.length())
        throw std::invalid_argument("accf: mismatched length");
    if (std::abs(u) >= c.length())
        throw std::invalid_argument("accf: |u| must be <= L-1");
    std::vector<long long> acc(static_cast<std::size_t>(c.q()), 0);
    detail::accf_accumulate(c, d, u, acc);
    return CycloValue(c.q(), std::move(acc));
}

CycloValue aacf(const QarySequence& c, int u) {
    return accf(c, c, u);
}

}  // namespace zcs
