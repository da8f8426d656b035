#pragma once

#include <random>
#include <string>
#include <vector>

#include "zcs/construct.hpp"
#include "zcs/family.hpp"

namespace zcs::testing {

// The optimal (6,4,6,4) family over Z_6, kept as digit strings.
inline const std::vector<std::vector<std::string>> kKnownFamily64 = {
    {"000003", "030300", "003303", "033000"},
    {"012342", "042045", "015042", "045345"},
    {"024021", "054324", "021321", "051024"},
    {"030300", "000003", "033000", "003303"},
    {"042045", "012342", "045345", "015042"},
    {"054324", "024021", "051024", "021321"},
};

inline QarySequence seq_from_digits(int q, const std::string& digits) {
    std::vector<int> exps;
    exps.reserve(digits.size());
    for (char c : digits)
        exps.push_back(c - '0');
    return QarySequence(q, std::move(exps));
}

inline ZcsFamily known_family_64(std::optional<int> claimed_z = 4) {
    std::vector<Flock> flocks;
    for (const auto& rows : kKnownFamily64) {
        std::vector<QarySequence> members;
        for (const std::string& row : rows)
            members.push_back(seq_from_digits(6, row));
        flocks.emplace_back(std::move(members));
    }
    return ZcsFamily(std::move(flocks), claimed_z);
}

// Parameters that generate kKnownFamily64.
inline ConstructionParams known_params_64() {
    ConstructionParams p;
    p.q = 6;
    p.b = 6;
    p.m = 3;
    p.n = 1;
    p.k = 2;
    p.blocks = {{1, 3}, {2}};
    p.beta = {0, 0, 0, 0};
    return p;
}

inline QarySequence random_sequence(int q, int l, std::mt19937_64& rng) {
    std::vector<int> exps(static_cast<std::size_t>(l));
    for (int& e : exps)
        e = static_cast<int>(rng() % static_cast<unsigned long long>(q));
    return QarySequence(q, std::move(exps));
}

}  // namespace zcs::testing
