#include "zcs/boolean.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zcs {

PolyFunction::PolyFunction(int b, int n_vars, int q, std::vector<PolyTerm> terms)
    : b_(b), n_vars_(n_vars), q_(q), terms_(std::move(terms)) {
    if (q_ < 2)
        throw std::invalid_argument("PolyFunction: q must be >= 2");
    if (b_ < 2 || b_ > q_)
        throw std::invalid_argument("PolyFunction: b must satisfy 2 <= b <= q");
    if (n_vars_ < 0)
        throw std::invalid_argument("PolyFunction: n_vars must be >= 0");
    for (PolyTerm& t : terms_) {
        std::sort(t.vars.begin(), t.vars.end());
        if (std::adjacent_find(t.vars.begin(), t.vars.end()) != t.vars.end())
            throw std::invalid_argument("PolyFunction: repeated variable in a term");
        for (int v : t.vars)
            if (v < 1 || v > n_vars_)
                throw std::invalid_argument("PolyFunction: variable index out of range");
        t.coeff %= q_;
        if (t.coeff < 0)
            t.coeff += q_;
    }
}

PolyFunction PolyFunction::zero(int b, int n_vars, int q) {
    return PolyFunction(b, n_vars, q, {});
}

PolyFunction PolyFunction::linear(int b, int n_vars, int q, int var, int coeff) {
    return PolyFunction(b, n_vars, q, {PolyTerm{coeff, {var}}});
}

PolyFunction PolyFunction::constant(int b, int n_vars, int q, int c) {
    return PolyFunction(b, n_vars, q, {PolyTerm{c, {}}});
}

int PolyFunction::evaluate(const std::vector<int>& digits) const {
    if (digits.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("PolyFunction: wrong number of digits");
    long long sum = 0;
    for (const PolyTerm& t : terms_) {
        long long prod = t.coeff;
        for (int v : t.vars) {
            prod = (prod * digits[static_cast<std::size_t>(v - 1)]) % q_;
            if (prod == 0)
                break;
        }
        sum += prod;
    }
    return static_cast<int>(sum % q_);
}

QarySequence sequence_of(const PolyFunction& f) {
    long long len = 1;
    for (int l = 0; l < f.n_vars(); ++l)
        len *= f.b();
    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(len));
    std::vector<int> digits(static_cast<std::size_t>(f.n_vars()), 0);
    for (long long h = 0; h < len; ++h) {
        exps.push_back(f.evaluate(digits));
        // increment the little-endian digit counter
        for (int l = 0; l < f.n_vars(); ++l) {
            if (++digits[static_cast<std::size_t>(l)] < f.b())
                break;
            digits[static_cast<std::size_t>(l)] = 0;
        }
    }
    return QarySequence(f.q(), std::move(exps));
}

QarySequence truncate(const QarySequence& s, int L) {
    if (L < 1 || L > s.length())
        throw std::invalid_argument("truncate: L out of range");
    std::vector<int> exps(s.exponents().begin(), s.exponents().begin() + L);
    return QarySequence(s.q(), std::move(exps));
}

PolyFunction add(const PolyFunction& f, const PolyFunction& g) {
    if (f.b() != g.b() || f.n_vars() != g.n_vars() || f.q() != g.q())
        throw std::invalid_argument("add: mismatched b, n_vars, or q");
    std::map<std::vector<int>, int> merged;
    for (const PolyFunction* fn : {&f, &g})
        for (const PolyTerm& t : fn->terms())
            merged[t.vars] = (merged[t.vars] + t.coeff) % f.q();
    std::vector<PolyTerm> terms;
    for (auto& [vars, coeff] : merged)
        if (coeff != 0)
            terms.push_back(PolyTerm{coeff, vars});
    return PolyFunction(f.b(), f.n_vars(), f.q(), std::move(terms));
}

std::vector<int> base_digits(long long h, int b, int n) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int l = 0; l < n; ++l) {
        digits[static_cast<std::size_t>(l)] = static_cast<int>(h % b);
        h /= b;
    }
    return digits;
}

long long digits_to_index(const std::vector<int>& digits, int b) {
    long long h = 0;
    for (std::size_t l = digits.size(); l-- > 0;)
        h = h * b + digits[l];
    return h;
}

}  // namespace zcs
