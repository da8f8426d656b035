#pragma once

#include <vector>

#include "zcs/sequence.hpp"

namespace zcs {

/// One monomial of a (extended) generalized Boolean function: a Z_q
/// coefficient times a product of distinct variables. Variable indices
/// are 1-based; an empty set is the constant term.
struct PolyTerm {
    int coeff = 0;
    std::vector<int> vars;  // sorted, distinct, 1-based
};

/// A function from Z_b^{n_vars} to Z_q given as a sum of monomials.
/// With b = 2 this is a generalized Boolean function; b > 2 gives the
/// extended form where variables range over {0, ..., b-1}.
class PolyFunction {
public:
    PolyFunction(int b, int n_vars, int q, std::vector<PolyTerm> terms);

    /// The zero function.
    static PolyFunction zero(int b, int n_vars, int q);
    /// coeff * x_{var}.
    static PolyFunction linear(int b, int n_vars, int q, int var, int coeff);
    /// The constant c.
    static PolyFunction constant(int b, int n_vars, int q, int c);

    int b() const { return b_; }
    int n_vars() const { return n_vars_; }
    int q() const { return q_; }
    const std::vector<PolyTerm>& terms() const { return terms_; }

    /// Value at a digit vector (digits[l-1] is variable l), reduced mod q.
    int evaluate(const std::vector<int>& digits) const;

private:
    int b_;
    int n_vars_;
    int q_;
    std::vector<PolyTerm> terms_;
};

/// The length-b^{n_vars} sequence associated with f: entry h is
/// f(h_1, ..., h_n) where h = sum_l h_l b^{l-1} (variable 1 is the least
/// significant digit).
QarySequence sequence_of(const PolyFunction& f);

/// First L entries of s.
QarySequence truncate(const QarySequence& s, int L);

/// Termwise sum with coefficients merged mod q; zero-coefficient terms
/// are dropped.
PolyFunction add(const PolyFunction& f, const PolyFunction& g);

/// Little-endian base-b digits of h, padded to n digits.
std::vector<int> base_digits(long long h, int b, int n);

/// Inverse of base_digits: sum_l digits[l] * b^l.
long long digits_to_index(const std::vector<int>& digits, int b);

}  // namespace zcs
