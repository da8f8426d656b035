#include "zcs/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace zcs {

namespace {

// Shared scratch for one verification run: the reduction modulus and an
// accumulator reused across every (p, t, u) evaluation.
struct Scan {
    const ZcsFamily& fam;
    IntPoly phi;
    std::vector<long long> acc;

    explicit Scan(const ZcsFamily& family)
        : fam(family),
          phi(cyclotomic_polynomial(family.q())),
          acc(static_cast<std::size_t>(family.q()), 0) {}

    bool correlation_is_zero(int p, int t, int u) {
        std::fill(acc.begin(), acc.end(), 0);
        const Flock& cp = fam[p];
        const Flock& ct = fam[t];
        for (int lambda = 0; lambda < cp.n(); ++lambda)
            detail::accf_accumulate(cp[lambda], ct[lambda], u, acc);
        return coeffs_reduce_to_zero(acc, phi);
    }

    // First shift u in [lo, hi) where the (p, t) correlation is nonzero,
    // or hi when the whole range vanishes.
    int first_nonzero_shift(int p, int t, int lo, int hi) {
        for (int u = lo; u < hi; ++u)
            if (!correlation_is_zero(p, t, u))
                return u;
        return hi;
    }
};

// Shift-0 autocorrelation sums equal N*L automatically for exponent-coded
// unimodular sequences; evaluated literally all the same.
bool energy_condition(const ZcsFamily& family) {
    const long long nl = static_cast<long long>(family.n()) * family.length();
    CycloValue expected = CycloValue::unit(family.q(), 0, nl);
    for (int p = 0; p < family.m(); ++p)
        if (!equal(set_correlation(family[p], family[p], 0), expected))
            return false;
    return true;
}

// Maximal zone width via a single pass with a running minimum: a pair
// never needs scanning past the best width any earlier pair still allows.
// Autocorrelation pairs go first; they are M of M^2 pairs and usually cap
// the minimum immediately. Conjugate symmetry makes u >= 0 sufficient:
// the correlation at -u of (p, t) is the conjugate of that of (t, p) at u.
int measure_width(Scan& scan) {
    const ZcsFamily& fam = scan.fam;
    int limit = fam.length();
    for (int p = 0; p < fam.m() && limit > 1; ++p)
        limit = scan.first_nonzero_shift(p, p, 1, limit);
    for (int p = 0; p < fam.m() && limit > 0; ++p)
        for (int t = 0; t < fam.m() && limit > 0; ++t)
            if (p != t)
                limit = scan.first_nonzero_shift(p, t, 0, limit);
    return limit;
}

}  // namespace

VerificationReport verify_zcs(const ZcsFamily& family, int Z) {
    if (Z < 1 || Z > family.length())
        throw std::invalid_argument("verify_zcs: Z must be in [1, L]");

    Scan scan(family);
    VerificationReport report;
    report.energy_ok = energy_condition(family);
    report.measured_Z = report.energy_ok ? measure_width(scan) : 0;
    report.ok = report.energy_ok && report.measured_Z >= Z;
    if (report.ok)
        return report;

    // Collect every violating (p, t, u) within the requested zone.
    const long long nl = static_cast<long long>(family.n()) * family.length();
    const CycloValue expected_energy = CycloValue::unit(family.q(), 0, nl);
    for (int p = 0; p < family.m(); ++p)
        for (int t = 0; t < family.m(); ++t)
            for (int u = -(Z - 1); u <= Z - 1; ++u) {
                CycloValue rho = set_correlation(family[p], family[t], u);
                const bool violated = (p == t && u == 0)
                                          ? !equal(rho, expected_energy)
                                          : !is_zero(rho);
                if (violated)
                    report.failures.push_back(Violation{p, t, u, std::move(rho)});
            }
    return report;
}

int max_zcz_width(const ZcsFamily& family) {
    if (!energy_condition(family))
        return 0;
    Scan scan(family);
    return measure_width(scan);
}

OptimalityReport classify_optimality(const ZcsFamily& family) {
    OptimalityReport r;
    r.m = family.m();
    r.n = family.n();
    r.l = family.length();
    r.measured_Z = max_zcz_width(family);
    if (r.measured_Z < 1) {
        r.verdict = OptimalityVerdict::not_a_zcs;
        return r;
    }
    r.bound_at_measured =
        (static_cast<long long>(r.n) * r.l) / r.measured_Z;
    r.verdict = (r.m == r.bound_at_measured) ? OptimalityVerdict::optimal
                                             : OptimalityVerdict::suboptimal;
    return r;
}

const char* to_string(OptimalityVerdict v) {
    switch (v) {
    case OptimalityVerdict::optimal: return "optimal";
    case OptimalityVerdict::suboptimal: return "suboptimal";
    case OptimalityVerdict::not_a_zcs: return "not-a-ZCS";
    }
    return "unknown";
}

}  // namespace zcs
