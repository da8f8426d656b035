#pragma once

#include <vector>

#include "zcs/boolean.hpp"
#include "zcs/family.hpp"

namespace zcs {

/// Inputs for the quadratic-GBF / offset-EGBF family construction.
///
/// blocks holds the ordered partition of {1, ..., m}: blocks[g] lists the
/// member variables of block g+1 in bijection order, so blocks[g][0] is
/// the block's leading variable. beta has m+1 entries, beta[0] being the
/// constant term's coefficient and beta[l] the coefficient of x_l.
struct ConstructionParams {
    int q = 0;
    int b = 0;
    int m = 0;
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> beta;
};

/// Throws std::invalid_argument naming the first violated constraint:
/// q even, b | q with 2 <= b <= q, m >= 1, n >= 1, b^n <= 2^m,
/// 1 <= k <= m with k blocks forming an ordered partition of {1..m},
/// leading block elements equal to {1..k}, 2^k <= b^n, and beta of
/// length m+1.
void validate(const ConstructionParams& params);

/// The quadratic GBF: (q/2) * sum over blocks of the path products
/// x_{pi(l)} x_{pi(l+1)}, plus the affine part sum beta_l x_l + beta_0.
PolyFunction build_quadratic_gbf(const ConstructionParams& params);

/// The offset function for flock p: (q/b) * sum_l p_l y_l where
/// (p_1, ..., p_n) are the base-b digits of p, least significant first.
PolyFunction build_offset_egbf(int p, const ConstructionParams& params);

/// Builds the full family: b^n flocks of 2^k sequences of length b^n,
/// claimed zone width 2^k. Flock p's sequence lambda is the entrywise
/// mod-q sum of the truncated quadratic GBF, the offset for p, and
/// (q/2) * lambda_g times each block's leading variable sequence, with
/// lambda_1 the least significant bit of lambda.
ZcsFamily build_zcs(const ConstructionParams& params);

}  // namespace zcs
