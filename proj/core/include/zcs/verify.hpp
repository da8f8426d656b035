#pragma once

#include <vector>

#include "zcs/bounds.hpp"
#include "zcs/family.hpp"

namespace zcs {

/// One violating correlation inside the requested zone.
struct Violation {
    int p;
    int t;
    int u;
    CycloValue value;
};

/// Outcome of checking a family against the zone conditions at width Z.
/// measured_Z is the maximal width the family actually supports (0 when
/// even the shift-0 conditions fail). ok implies failures is empty.
struct VerificationReport {
    bool ok = false;
    int measured_Z = 0;
    bool energy_ok = false;
    std::vector<Violation> failures;  // lexicographic (p, t, u)
};

/// Checks all zone conditions at width Z (1 <= Z <= L) exactly: the
/// shift-0 autocorrelation sum equals N*L, autocorrelation sums vanish
/// for 0 < |u| < Z, and cross-correlation sums vanish for |u| < Z.
VerificationReport verify_zcs(const ZcsFamily& family, int Z);

/// Largest Z in [1, L] whose zone conditions all hold; 0 if none does.
int max_zcz_width(const ZcsFamily& family);

enum class OptimalityVerdict { optimal, suboptimal, not_a_zcs };

struct OptimalityReport {
    OptimalityVerdict verdict = OptimalityVerdict::not_a_zcs;
    int measured_Z = 0;
    int m = 0;
    int n = 0;
    int l = 0;
    long long bound_at_measured = 0;  // floor(N*L / measured_Z), 0 if not a ZCS
};

/// A family is optimal when its set size meets floor(N*L/Z) with equality
/// at its measured maximal width.
OptimalityReport classify_optimality(const ZcsFamily& family);

const char* to_string(OptimalityVerdict v);

}  // namespace zcs
