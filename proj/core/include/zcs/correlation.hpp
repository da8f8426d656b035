#pragma once

#include <span>

#include "zcs/cyclotomic.hpp"
#include "zcs/sequence.hpp"

namespace zcs {

/// Aperiodic cross-correlation of c and d at shift u, -L+1 <= u <= L-1:
/// the sum over the overlap of xi^{c_{i+u} - d_i} (upper branch for
/// u >= 0, lower branch for u < 0). Exact.
CycloValue accf(const QarySequence& c, const QarySequence& d, int u);

/// Aperiodic autocorrelation: accf(c, c, u).
CycloValue aacf(const QarySequence& c, int u);

namespace detail {

/// Adds the correlation multiplicities of (c, d) at shift u into acc,
/// acc.size() == q. No validation; callers check compatibility once.
void accf_accumulate(const QarySequence& c, const QarySequence& d, int u,
                     std::span<long long> acc);

}  // namespace detail

}  // namespace zcs
