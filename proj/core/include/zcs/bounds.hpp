#pragma once

#include <string>

namespace zcs {

/// Exact nonnegative-denominator rational, kept reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Fixed-point decimal rendering, rounded to `places` digits.
    std::string to_decimal(int places) const;

    bool operator==(const Rational& other) const = default;
};

/// The three set-size bounds for an (M, N, L, Z)-ZCS, exact.
struct BoundReport {
    int n = 0;
    int l = 0;
    int z = 0;
    long long theorem1_bound = 0;   // floor(N*L / Z), the proven bound
    long long fan_bound = 0;        // N * floor(L / Z)
    Rational welch_feng_bound;      // N * (L + Z - 1) / Z, not floored
};

BoundReport bounds(int n, int l, int z);

}  // namespace zcs
