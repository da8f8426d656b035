#pragma once

#include <optional>
#include <vector>

#include "zcs/correlation.hpp"
#include "zcs/sequence.hpp"

namespace zcs {

/// One constituent set of a ZCS: N unimodular sequences sharing q and L.
/// The order of the sequences matters; cross-correlations between flocks
/// pair the lambda-th sequence of one with the lambda-th of the other.
class Flock {
public:
    explicit Flock(std::vector<QarySequence> sequences);

    int n() const { return static_cast<int>(seqs_.size()); }
    int q() const { return seqs_.front().q(); }
    int length() const { return seqs_.front().length(); }
    const std::vector<QarySequence>& sequences() const { return seqs_; }
    const QarySequence& operator[](int lambda) const {
        return seqs_[static_cast<std::size_t>(lambda)];
    }

    bool operator==(const Flock& other) const = default;

private:
    std::vector<QarySequence> seqs_;
};

/// M flocks of N sequences each, length L, shared q.
class ZcsFamily {
public:
    explicit ZcsFamily(std::vector<Flock> flocks,
                       std::optional<int> claimed_Z = std::nullopt);

    int m() const { return static_cast<int>(flocks_.size()); }
    int n() const { return flocks_.front().n(); }
    int q() const { return flocks_.front().q(); }
    int length() const { return flocks_.front().length(); }
    std::optional<int> claimed_z() const { return claimed_Z_; }
    const std::vector<Flock>& flocks() const { return flocks_; }
    const Flock& operator[](int p) const {
        return flocks_[static_cast<std::size_t>(p)];
    }

    bool operator==(const ZcsFamily& other) const = default;

private:
    std::vector<Flock> flocks_;
    std::optional<int> claimed_Z_;
};

/// Flock-level correlation: the sum over lambda of the constituent
/// cross-correlations at shift u.
CycloValue set_correlation(const Flock& cp, const Flock& ct, int u);

}  // namespace zcs
