#include "zcs/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace zcs {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

}  // namespace

void validate(const ConstructionParams& params) {
    if (params.q < 2 || params.q % 2 != 0)
        throw std::invalid_argument("q must be even");
    if (params.b < 2 || params.b > params.q)
        throw std::invalid_argument("b must satisfy 2 <= b <= q");
    if (params.q % params.b != 0)
        throw std::invalid_argument("b does not divide q");
    if (params.m < 1 || params.m > 30)
        throw std::invalid_argument("m must be in [1, 30]");
    if (params.n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (params.k < 1 || params.k > params.m)
        throw std::invalid_argument("k must satisfy 1 <= k <= m");
    // b^n computed with an early bound check so it cannot overflow
    long long len = 1;
    for (int i = 0; i < params.n; ++i) {
        len *= params.b;
        if (len > ipow(2, params.m))
            throw std::invalid_argument("b^n must not exceed 2^m");
    }
    if (ipow(2, params.k) > len)
        throw std::invalid_argument("2^k must not exceed the sequence length b^n");
    if (static_cast<int>(params.blocks.size()) != params.k)
        throw std::invalid_argument("blocks must list exactly k blocks");

    std::vector<bool> seen(static_cast<std::size_t>(params.m) + 1, false);
    for (const auto& block : params.blocks) {
        if (block.empty())
            throw std::invalid_argument("blocks must be nonempty");
        for (int v : block) {
            if (v < 1 || v > params.m)
                throw std::invalid_argument("block member out of range 1..m");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("blocks must be disjoint");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    for (int v = 1; v <= params.m; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("blocks must cover 1..m");

    std::vector<int> leads;
    for (const auto& block : params.blocks)
        leads.push_back(block.front());
    std::sort(leads.begin(), leads.end());
    for (int g = 0; g < params.k; ++g)
        if (leads[static_cast<std::size_t>(g)] != g + 1)
            throw std::invalid_argument("leading block elements must be exactly {1..k}");

    if (static_cast<int>(params.beta.size()) != params.m + 1)
        throw std::invalid_argument("beta must have m+1 entries");
}

PolyFunction build_quadratic_gbf(const ConstructionParams& params) {
    validate(params);
    std::vector<PolyTerm> terms;
    const int half_q = params.q / 2;
    for (const auto& block : params.blocks)
        for (std::size_t l = 0; l + 1 < block.size(); ++l)
            terms.push_back(PolyTerm{half_q, {block[l], block[l + 1]}});
    if (params.beta[0] % params.q != 0)
        terms.push_back(PolyTerm{params.beta[0], {}});
    for (int l = 1; l <= params.m; ++l)
        if (params.beta[static_cast<std::size_t>(l)] % params.q != 0)
            terms.push_back(PolyTerm{params.beta[static_cast<std::size_t>(l)], {l}});
    return PolyFunction(2, params.m, params.q, std::move(terms));
}

PolyFunction build_offset_egbf(int p, const ConstructionParams& params) {
    validate(params);
    const long long num_flocks = ipow(params.b, params.n);
    if (p < 0 || p >= num_flocks)
        throw std::invalid_argument("p must be in [0, b^n)");
    const std::vector<int> digits = base_digits(p, params.b, params.n);
    const int q_over_b = params.q / params.b;
    std::vector<PolyTerm> terms;
    for (int l = 1; l <= params.n; ++l) {
        const int coeff = (q_over_b * digits[static_cast<std::size_t>(l - 1)]) % params.q;
        if (coeff != 0)
            terms.push_back(PolyTerm{coeff, {l}});
    }
    return PolyFunction(params.b, params.n, params.q, std::move(terms));
}

ZcsFamily build_zcs(const ConstructionParams& params) {
    validate(params);
    const int len = static_cast<int>(ipow(params.b, params.n));  // L = b^n
    const int num_flocks = len;                                  // M = b^n
    const int flock_size = static_cast<int>(ipow(2, params.k));  // N = 2^k
    const int half_q = params.q / 2;

    const QarySequence f_seq = truncate(sequence_of(build_quadratic_gbf(params)), len);

    // Leading-variable sequences x_{pi_g(1)}, truncated to length L.
    std::vector<QarySequence> lead_seqs;
    lead_seqs.reserve(static_cast<std::size_t>(params.k));
    for (const auto& block : params.blocks)
        lead_seqs.push_back(truncate(
            sequence_of(PolyFunction::linear(2, params.m, params.q, block.front(), 1)),
            len));

    std::vector<Flock> flocks;
    flocks.reserve(static_cast<std::size_t>(num_flocks));
    for (int p = 0; p < num_flocks; ++p) {
        const QarySequence g_seq = sequence_of(build_offset_egbf(p, params));
        std::vector<QarySequence> members;
        members.reserve(static_cast<std::size_t>(flock_size));
        for (int lambda = 0; lambda < flock_size; ++lambda) {
            std::vector<int> exps(static_cast<std::size_t>(len), 0);
            for (int i = 0; i < len; ++i)
                exps[static_cast<std::size_t>(i)] = (f_seq[i] + g_seq[i]) % params.q;
            for (int g = 0; g < params.k; ++g) {
                if (((lambda >> g) & 1) == 0)
                    continue;
                const QarySequence& lead = lead_seqs[static_cast<std::size_t>(g)];
                for (int i = 0; i < len; ++i)
                    exps[static_cast<std::size_t>(i)] =
                        (exps[static_cast<std::size_t>(i)] + half_q * lead[i]) % params.q;
            }
            members.emplace_back(params.q, std::move(exps));
        }
        flocks.emplace_back(std::move(members));
    }
    return ZcsFamily(std::move(flocks), flock_size);
}

}  // namespace zcs
