#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zcs {

/// A unimodular q-ary sequence stored as its exponent vector: entry i
/// represents the complex value xi^{exponents[i]} with xi = exp(2*pi*I/q).
/// Exponents are kept reduced into [0, q).
class QarySequence {
public:
    QarySequence(int q, std::vector<int> exponents)
        : q_(q), exps_(std::move(exponents)) {
        if (q_ < 2)
            throw std::invalid_argument("QarySequence: q must be >= 2");
        if (exps_.empty())
            throw std::invalid_argument("QarySequence: length must be >= 1");
        for (int& e : exps_) {
            e %= q_;
            if (e < 0)
                e += q_;
        }
    }

    int q() const { return q_; }
    int length() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exponents() const { return exps_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

    bool operator==(const QarySequence& other) const = default;

private:
    int q_;
    std::vector<int> exps_;
};

/// u-th right cyclic shift: output[j] = input[(j - u) mod n], 0 <= u <= n.
template <typename T>
std::vector<T> cyclic_shift(const std::vector<T>& v, int u) {
    const int n = static_cast<int>(v.size());
    if (u < 0 || u > n)
        throw std::invalid_argument("cyclic_shift: u must be in [0, length]");
    std::vector<T> out(v.size());
    for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(j)] =
            v[static_cast<std::size_t>(((j - u) % n + n) % n)];
    return out;
}

}  // namespace zcs
