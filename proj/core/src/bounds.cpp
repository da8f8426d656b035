#include "zcs/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace zcs {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_decimal(int places) const {
    long long scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    const long long scaled = num * scale;
    // round half away from zero
    long long quotient = scaled / den;
    const long long rem2 = 2 * (scaled % den);
    if (rem2 >= den)
        ++quotient;
    else if (-rem2 >= den)
        --quotient;
    const bool negative = quotient < 0;
    unsigned long long mag = negative ? static_cast<unsigned long long>(-quotient)
                                      : static_cast<unsigned long long>(quotient);
    std::string digits = std::to_string(mag % static_cast<unsigned long long>(scale));
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
    std::string out = std::to_string(mag / static_cast<unsigned long long>(scale));
    if (places > 0)
        out += "." + digits;
    return negative ? "-" + out : out;
}

BoundReport bounds(int n, int l, int z) {
    if (n < 1 || l < 1 || z < 1 || z > l)
        throw std::invalid_argument("bounds: need N >= 1, L >= 1, 1 <= Z <= L");
    BoundReport r;
    r.n = n;
    r.l = l;
    r.z = z;
    const long long nn = n, ll = l, zz = z;
    r.theorem1_bound = (nn * ll) / zz;
    r.fan_bound = nn * (ll / zz);
    r.welch_feng_bound = Rational(nn * (ll + zz - 1), zz);
    return r;
}

}  // namespace zcs
