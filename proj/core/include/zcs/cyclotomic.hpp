#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace zcs {

/// Polynomial with integer coefficients, index = degree. Trailing zeros
/// are trimmed; the zero polynomial is the empty vector.
using IntPoly = std::vector<long long>;

/// q-th cyclotomic polynomial Phi_q, computed by recursive division of
/// x^q - 1 by the Phi_d of the proper divisors d of q. Exact; memoized.
IntPoly cyclotomic_polynomial(int q);

/// An exact element of Z[xi_q]: coeffs[j] is the integer multiplicity of
/// xi^j, j in [0, q). The representation is not canonical (the powers of
/// xi are linearly dependent); equality and zero tests reduce modulo
/// Phi_q.
class CycloValue {
public:
    CycloValue(int q, std::vector<long long> coeffs);

    /// Zero value of Z[xi_q].
    static CycloValue zero(int q);
    /// n * xi^e.
    static CycloValue unit(int q, int exponent, long long n = 1);

    int q() const { return q_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    CycloValue& operator+=(const CycloValue& rhs);
    CycloValue& operator-=(const CycloValue& rhs);
    friend CycloValue operator+(CycloValue lhs, const CycloValue& rhs) { return lhs += rhs; }
    friend CycloValue operator-(CycloValue lhs, const CycloValue& rhs) { return lhs -= rhs; }
    CycloValue operator-() const;

    /// Product in Z[xi_q]; cyclic convolution of coefficients (xi^q = 1).
    CycloValue operator*(const CycloValue& rhs) const;

    /// Complex conjugate: coeffs[j] -> coeffs[(q - j) mod q].
    CycloValue conjugate() const;

    /// Floating-point image sum coeffs[j] * exp(2*pi*I*j/q).
    std::complex<double> complex_estimate() const;

private:
    int q_;
    std::vector<long long> coeffs_;
};

/// Exact zero test: true iff sum coeffs[j] xi^j = 0 as a complex number,
/// decided by reduction modulo Phi_q.
bool is_zero(const CycloValue& v);

/// Value equality (difference reduces to zero modulo Phi_q).
bool equal(const CycloValue& a, const CycloValue& b);

/// Zero test on a raw multiplicity span against a precomputed Phi_q.
/// Same semantics as is_zero without constructing a CycloValue; for hot
/// verification loops.
bool coeffs_reduce_to_zero(std::span<const long long> coeffs, const IntPoly& phi_q);

}  // namespace zcs
