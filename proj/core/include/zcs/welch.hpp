#pragma once

#include <vector>

#include "zcs/family.hpp"

namespace zcs {

/// Column arrangement used by the set-size bound proof: column pZ+u is
/// the u-th right cyclic shift of flock p's sequences concatenated with
/// Z-1 zeros after each. Entries are exponents of xi, or kZeroEntry for
/// the structural zeros introduced by the padding.
struct WelchMatrix {
    static constexpr int kZeroEntry = -1;

    int q = 0;
    int rows = 0;                         // N * (L + Z - 1)
    int cols = 0;                         // M * Z
    std::vector<std::vector<int>> columns;
};

WelchMatrix welch_matrix(const ZcsFamily& family, int Z);

/// Consistency data extracted from the matrix: column energies, the
/// distinct-column inner products (exact and floating views), the slack
/// of the set-size inequality, and both sides of the inner-product bound.
struct WelchMatrixReport {
    int rows = 0;
    int cols = 0;
    std::vector<long long> column_energy;  // each must equal N*L
    bool offdiag_zero_exact = false;       // all distinct pairs reduce to zero
    double max_offdiag = 0.0;              // floating mirror of the same
    long long slack = 0;                   // M*N*L*Z - (M*Z)^2
    double welch_lhs = 0.0;
    double welch_rhs = 0.0;
};

/// Requires the family to verify at width Z; throws otherwise.
WelchMatrixReport welch_matrix_check(const ZcsFamily& family, int Z);

}  // namespace zcs
