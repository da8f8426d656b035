#include "zcs/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace zcs {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact long division; requires the divisor to be monic and the division
// to leave no remainder (true for every step of the cyclotomic recursion).
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("divide_exact: divisor must be monic");
    IntPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (int d = static_cast<int>(num.size()) - 1;
         d >= static_cast<int>(den.size()) - 1; --d) {
        const long long c = num[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        const int shift = d - static_cast<int>(den.size()) + 1;
        quot[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[static_cast<std::size_t>(shift) + i] -= c * den[i];
    }
    trim(num);
    if (!num.empty())
        throw std::logic_error("divide_exact: nonzero remainder");
    trim(quot);
    return quot;
}

IntPoly cyclotomic_uncached(int q) {
    // x^q - 1 divided by Phi_d for every proper divisor d of q.
    IntPoly num(static_cast<std::size_t>(q) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(q)] = 1;
    for (int d = 1; d < q; ++d)
        if (q % d == 0)
            num = divide_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

// Remainder of p modulo the monic divisor `mod`, in place.
void reduce_mod(IntPoly& p, const IntPoly& mod) {
    const int deg_mod = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(p.size()) - 1; d >= deg_mod; --d) {
        const long long c = p[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        const int shift = d - deg_mod;
        for (std::size_t i = 0; i < mod.size(); ++i)
            p[static_cast<std::size_t>(shift) + i] -= c * mod[i];
    }
    trim(p);
}

}  // namespace

IntPoly cyclotomic_polynomial(int q) {
    if (q < 1)
        throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(q);
        if (it != cache.end())
            return it->second;
    }
    IntPoly result = cyclotomic_uncached(q);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(q, std::move(result)).first->second;
}

CycloValue::CycloValue(int q, std::vector<long long> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
    if (q_ < 1)
        throw std::invalid_argument("CycloValue: q must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(q_))
        throw std::invalid_argument("CycloValue: coefficient count must equal q");
}

CycloValue CycloValue::zero(int q) {
    return CycloValue(q, std::vector<long long>(static_cast<std::size_t>(q), 0));
}

CycloValue CycloValue::unit(int q, int exponent, long long n) {
    CycloValue v = zero(q);
    int e = exponent % q;
    if (e < 0)
        e += q;
    v.coeffs_[static_cast<std::size_t>(e)] = n;
    return v;
}

CycloValue& CycloValue::operator+=(const CycloValue& rhs) {
    if (q_ != rhs.q_)
        throw std::invalid_argument("CycloValue: mismatched q");
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

CycloValue& CycloValue::operator-=(const CycloValue& rhs) {
    if (q_ != rhs.q_)
        throw std::invalid_argument("CycloValue: mismatched q");
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

CycloValue CycloValue::operator-() const {
    CycloValue v = *this;
    for (long long& c : v.coeffs_)
        c = -c;
    return v;
}

CycloValue CycloValue::operator*(const CycloValue& rhs) const {
    if (q_ != rhs.q_)
        throw std::invalid_argument("CycloValue: mismatched q");
    std::vector<long long> out(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        const long long ca = coeffs_[static_cast<std::size_t>(a)];
        if (ca == 0)
            continue;
        for (int b = 0; b < q_; ++b) {
            const long long cb = rhs.coeffs_[static_cast<std::size_t>(b)];
            if (cb == 0)
                continue;
            int e = a + b;
            if (e >= q_)
                e -= q_;
            out[static_cast<std::size_t>(e)] += ca * cb;
        }
    }
    return CycloValue(q_, std::move(out));
}

CycloValue CycloValue::conjugate() const {
    std::vector<long long> out(static_cast<std::size_t>(q_), 0);
    for (int j = 0; j < q_; ++j)
        out[static_cast<std::size_t>((q_ - j) % q_)] = coeffs_[static_cast<std::size_t>(j)];
    return CycloValue(q_, std::move(out));
}

std::complex<double> CycloValue::complex_estimate() const {
    std::complex<double> sum{0.0, 0.0};
    for (int j = 0; j < q_; ++j) {
        const long long c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0)
            continue;
        const double angle = 2.0 * std::numbers::pi * j / q_;
        sum += static_cast<double>(c) *
               std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

bool is_zero(const CycloValue& v) {
    return coeffs_reduce_to_zero(v.coeffs(), cyclotomic_polynomial(v.q()));
}

bool equal(const CycloValue& a, const CycloValue& b) {
    return is_zero(a - b);
}

bool coeffs_reduce_to_zero(std::span<const long long> coeffs, const IntPoly& phi_q) {
    IntPoly p(coeffs.begin(), coeffs.end());
    reduce_mod(p, phi_q);
    return p.empty();
}

}  // namespace zcs
