#include "zcs/welch.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zcs/sequence.hpp"
#include "zcs/verify.hpp"

namespace zcs {

WelchMatrix welch_matrix(const ZcsFamily& family, int Z) {
    if (Z < 1 || Z > family.length())
        throw std::invalid_argument("welch_matrix: Z must be in [1, L]");
    const int n = family.n();
    const int l = family.length();
    const int period = l + Z - 1;

    WelchMatrix x;
    x.q = family.q();
    x.rows = n * period;
    x.cols = family.m() * Z;
    x.columns.reserve(static_cast<std::size_t>(x.cols));
    for (int p = 0; p < family.m(); ++p) {
        std::vector<int> base(static_cast<std::size_t>(x.rows), WelchMatrix::kZeroEntry);
        for (int lambda = 0; lambda < n; ++lambda) {
            const QarySequence& seq = family[p][lambda];
            for (int i = 0; i < l; ++i)
                base[static_cast<std::size_t>(lambda * period + i)] = seq[i];
        }
        for (int u = 0; u < Z; ++u)
            x.columns.push_back(cyclic_shift(base, u));
    }
    return x;
}

WelchMatrixReport welch_matrix_check(const ZcsFamily& family, int Z) {
    if (!verify_zcs(family, Z).ok)
        throw std::invalid_argument("welch_matrix_check: family is not a ZCS at width Z");

    const WelchMatrix x = welch_matrix(family, Z);
    const int q = x.q;
    const IntPoly phi = cyclotomic_polynomial(q);
    const long long nl = static_cast<long long>(family.n()) * family.length();

    WelchMatrixReport report;
    report.rows = x.rows;
    report.cols = x.cols;

    for (const auto& col : x.columns) {
        long long energy = 0;
        for (int e : col)
            if (e != WelchMatrix::kZeroEntry)
                ++energy;  // |xi^e|^2 = 1
        report.column_energy.push_back(energy);
    }

    // Inner products between columns. Terms where a structural zero
    // participates contribute exactly zero, so each inner product is the
    // CycloValue accumulated over rows where both entries are xi-powers;
    // the floating mirror recomputes it from the complex images.
    report.offdiag_zero_exact = true;
    double sum_sq = 0.0;
    std::vector<long long> acc(static_cast<std::size_t>(q), 0);
    for (int v = 0; v < x.cols; ++v) {
        // (t, v) mirrors (v, t): conjugate, same magnitude
        for (int t = v; t < x.cols; ++t) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int row = 0; row < x.rows; ++row) {
                const int a = x.columns[static_cast<std::size_t>(v)][static_cast<std::size_t>(row)];
                const int b = x.columns[static_cast<std::size_t>(t)][static_cast<std::size_t>(row)];
                if (a == WelchMatrix::kZeroEntry || b == WelchMatrix::kZeroEntry)
                    continue;
                int diff = a - b;
                if (diff < 0)
                    diff += q;
                ++acc[static_cast<std::size_t>(diff)];
            }
            const double mag = std::abs(CycloValue(q, acc).complex_estimate());
            const double weight = (v == t) ? 1.0 : 2.0;
            sum_sq += weight * mag * mag;
            if (v != t) {
                report.max_offdiag = std::max(report.max_offdiag, mag);
                if (!coeffs_reduce_to_zero(acc, phi))
                    report.offdiag_zero_exact = false;
            }
        }
    }

    const long long m_bar = x.cols;
    report.slack = static_cast<long long>(family.m()) * family.n() * family.length() * Z -
                   m_bar * m_bar;
    report.welch_lhs = static_cast<double>(m_bar) * (m_bar - 1) *
                           report.max_offdiag * report.max_offdiag +
                       static_cast<double>(m_bar) * static_cast<double>(nl) *
                           static_cast<double>(nl);
    report.welch_rhs = sum_sq;
    return report;
}

}  // namespace zcs
