#pragma once

#include <optional>
#include <utility>

#include "zcs/family.hpp"

namespace zcs {

/// Parameters for the exhaustive set-size search. seed is reserved for
/// exploration-order tie-breaking; the exact search is canonical, so
/// results are identical for every seed.
struct SearchSpec {
    int q = 2;
    int n_flock = 1;  // N, sequences per flock
    int l = 1;        // sequence length
    int z = 1;        // zone width, 1 <= z <= l
    long long max_candidates = 10'000'000;
    unsigned long long seed = 0;
};

struct SearchResult {
    int best_m = 0;
    std::optional<ZcsFamily> witness;  // absent when best_m == 0
    long long bound = 0;               // floor(N*L / Z)
    bool proven_exhaustive = false;
    long long candidates_total = 0;
    long long candidates_enumerated = 0;
};

/// Enumerates every flock candidate (N-tuples of q-ary length-L
/// sequences, canonicalized to non-decreasing lexicographic order) whose
/// autocorrelation sums vanish for 0 < u < Z, then finds a maximum
/// clique under the pairwise cross-zone-zero relation. When the
/// candidate count exceeds max_candidates, only a prefix is searched and
/// the result is flagged non-exhaustive.
SearchResult exhaustive_max_set_size(const SearchSpec& spec);

/// For orthogonal c, d: true iff the squared magnitude of the inner
/// product with position alpha excluded equals 1 exactly. Throws when
/// the sequences are not orthogonal.
bool lemma2_check(const QarySequence& c, const QarySequence& d, int alpha);

/// Deterministic orthogonal pair of exponent ramps a*i and a'*i mod q
/// with a - a' a nonzero multiple of q/L; requires L | q and L >= 2.
std::pair<QarySequence, QarySequence> random_orthogonal_pair(int q, int L,
                                                             unsigned long long seed);

}  // namespace zcs
