#include <doctest.h>

#include <cmath>
#include <random>

#include "zcs/cyclotomic.hpp"

using namespace zcs;

namespace {

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty())
        return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical small cases") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});   // x - 1
    CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});    // x + 1
    CHECK(cyclotomic_polynomial(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});         // x^2 + 1
    CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});        // x^2 - x + 1
    CHECK(cyclotomic_polynomial(8) == IntPoly{1, 0, 0, 0, 1});   // x^4 + 1
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("product of Phi_d over divisors of q gives x^q - 1") {
    for (int q = 1; q <= 24; ++q) {
        IntPoly product{1};
        for (int d = 1; d <= q; ++d)
            if (q % d == 0)
                product = poly_multiply(product, cyclotomic_polynomial(d));
        IntPoly expected(static_cast<std::size_t>(q) + 1, 0);
        expected[0] = -1;
        expected[static_cast<std::size_t>(q)] = 1;
        CHECK(product == expected);
    }
}

TEST_CASE("is_zero detects vanishing root-of-unity sums") {
    // 1 + xi^2 + xi^4 over q=6: the cube roots of unity
    CHECK(is_zero(CycloValue(6, {1, 0, 1, 0, 1, 0})));
    // 3 + 3 xi^3 = 3 - 3
    CHECK(is_zero(CycloValue(6, {3, 0, 0, 3, 0, 0})));
    // a single unit is nonzero
    CHECK_FALSE(is_zero(CycloValue(6, {1, 0, 0, 0, 0, 0})));
    CHECK(is_zero(CycloValue::zero(9)));
}

TEST_CASE("complex_estimate agrees with closed forms") {
    CHECK(CycloValue(2, {3, 0}).complex_estimate() == std::complex<double>(3.0, 0.0));
    CHECK(std::abs(CycloValue(6, {1, 0, 1, 0, 1, 0}).complex_estimate()) < 1e-12);
    const auto i_unit = CycloValue(4, {0, 1, 0, 0}).complex_estimate();
    CHECK(std::abs(i_unit - std::complex<double>(0.0, 1.0)) < 1e-12);
}

TEST_CASE("reduction soundness: exact zero test matches the floating test") {
    std::mt19937_64 rng(20240811);
    for (int q = 1; q <= 24; ++q) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<long long> coeffs(static_cast<std::size_t>(q));
            for (long long& c : coeffs)
                c = static_cast<long long>(rng() % 7) - 3;
            CycloValue v(q, coeffs);
            CHECK(is_zero(v) == (std::abs(v.complex_estimate()) < 1e-9));
        }
    }
}

TEST_CASE("arithmetic: sums, negation, products, conjugation") {
    const CycloValue a = CycloValue::unit(6, 1, 2);
    const CycloValue b = CycloValue::unit(6, 4, 5);
    CHECK(equal(a + b, CycloValue(6, {0, 2, 0, 0, 5, 0})));
    CHECK(is_zero(a - a));
    CHECK(is_zero(a + (-a)));

    // xi^4 * xi^3 = xi^7 = xi^1 over q=6
    CHECK(equal(CycloValue::unit(6, 4) * CycloValue::unit(6, 3), CycloValue::unit(6, 1)));

    // conj(xi) = xi^{q-1}; |xi^e|^2 = 1
    CHECK(equal(CycloValue::unit(6, 1).conjugate(), CycloValue::unit(6, 5)));
    for (int e = 0; e < 6; ++e) {
        const CycloValue u = CycloValue::unit(6, e);
        CHECK(equal(u * u.conjugate(), CycloValue::unit(6, 0)));
    }

    // conjugation in coefficient form: coeffs[j] -> coeffs[(q-j) mod q]
    const CycloValue v(4, {1, 2, 3, 4});
    CHECK(v.conjugate().coeffs() == std::vector<long long>{1, 4, 3, 2});

    CHECK_THROWS_AS(CycloValue(4, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CycloValue::unit(4, 0) + CycloValue::unit(6, 0), std::invalid_argument);
}

TEST_CASE("equality is modular: different coefficient vectors, same value") {
    // Over q=4: xi^2 = -1, so xi^0 + xi^2 = 0 and 2 xi^1 + xi^3 = xi^1.
    CHECK(equal(CycloValue(4, {1, 0, 1, 0}), CycloValue::zero(4)));
    CHECK(equal(CycloValue(4, {0, 2, 0, 1}), CycloValue::unit(4, 1)));
    CHECK_FALSE(equal(CycloValue::unit(4, 1), CycloValue::unit(4, 3)));
}
