#include "zcs/search.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "zcs/verify.hpp"

namespace zcs {

namespace {

constexpr long long kMaxSequenceSpace = 1LL << 20;
constexpr int kMaxVertices = 16384;

// Exponents of sequence index s, big-endian so that index order equals
// lexicographic order of exponent vectors.
std::vector<int> sequence_exponents(long long s, int q, int l) {
    std::vector<int> exps(static_cast<std::size_t>(l), 0);
    for (int i = l - 1; i >= 0; --i) {
        exps[static_cast<std::size_t>(i)] = static_cast<int>(s % q);
        s /= q;
    }
    return exps;
}

// C(s + n - 1, n), saturated at max_out.
long long candidate_count(long long s, int n, long long max_out) {
    long long count = 1;
    for (int i = 1; i <= n; ++i) {
        const long long factor = s - 1 + i;
        if (count > max_out / factor)
            return max_out;
        count = count * factor / i;  // C(s-1+i, i) stays integral
    }
    return std::min(count, max_out);
}

struct Graph {
    int vertex_count = 0;
    std::vector<std::vector<std::uint64_t>> adj;  // bitset rows

    void resize(int n) {
        vertex_count = n;
        adj.assign(static_cast<std::size_t>(n),
                   std::vector<std::uint64_t>((static_cast<std::size_t>(n) + 63) / 64, 0));
    }
    void add_edge(int a, int b) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] |=
            1ULL << (b % 64);
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) / 64] |=
            1ULL << (a % 64);
    }
    bool connected(int a, int b) const {
        return (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >>
                (b % 64)) & 1ULL;
    }
};

// Canonical branch-and-bound maximum clique: vertices explored in index
// order, the first clique of the final best size is kept.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run() {
        std::vector<int> all(static_cast<std::size_t>(g_.vertex_count));
        for (int v = 0; v < g_.vertex_count; ++v)
            all[static_cast<std::size_t>(v)] = v;
        extend(all);
        return best_;
    }

private:
    void extend(const std::vector<int>& candidates) {
        if (current_.size() > best_.size())
            best_ = current_;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current_.size() + (candidates.size() - i) <= best_.size())
                return;  // cannot beat the incumbent
            const int v = candidates[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g_.connected(v, candidates[j]))
                    next.push_back(candidates[j]);
            current_.push_back(v);
            extend(next);
            current_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

SearchResult exhaustive_max_set_size(const SearchSpec& spec) {
    if (spec.q < 2)
        throw std::invalid_argument("search: q must be >= 2");
    if (spec.n_flock < 1 || spec.l < 1)
        throw std::invalid_argument("search: N and L must be >= 1");
    if (spec.z < 1 || spec.z > spec.l)
        throw std::invalid_argument("search: Z must be in [1, L]");
    if (spec.max_candidates < 1)
        throw std::invalid_argument("search: max_candidates must be >= 1");

    long long space = 1;
    for (int i = 0; i < spec.l; ++i) {
        space *= spec.q;
        if (space > kMaxSequenceSpace)
            throw std::invalid_argument("search: q^L sequence space too large");
    }

    std::vector<QarySequence> seqs;
    seqs.reserve(static_cast<std::size_t>(space));
    for (long long s = 0; s < space; ++s)
        seqs.emplace_back(spec.q, sequence_exponents(s, spec.q, spec.l));

    SearchResult result;
    result.bound = (static_cast<long long>(spec.n_flock) * spec.l) / spec.z;
    result.candidates_total = candidate_count(space, spec.n_flock,
                                              std::numeric_limits<long long>::max());
    const bool partial = result.candidates_total > spec.max_candidates;

    const IntPoly phi = cyclotomic_polynomial(spec.q);
    std::vector<long long> acc(static_cast<std::size_t>(spec.q), 0);
    const auto zone_zero = [&](const std::vector<int>& a, const std::vector<int>& b,
                               int lo, int hi) {
        for (int u = lo; u < hi; ++u) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int lambda = 0; lambda < spec.n_flock; ++lambda)
                detail::accf_accumulate(seqs[static_cast<std::size_t>(a[static_cast<std::size_t>(lambda)])],
                                        seqs[static_cast<std::size_t>(b[static_cast<std::size_t>(lambda)])],
                                        u, acc);
            if (!coeffs_reduce_to_zero(acc, phi))
                return false;
        }
        return true;
    };

    // Enumerate non-decreasing index tuples; keep those whose
    // autocorrelation sums vanish inside the zone.
    std::vector<std::vector<int>> vertices;
    std::vector<int> tuple(static_cast<std::size_t>(spec.n_flock), 0);
    long long enumerated = 0;
    while (true) {
        if (enumerated >= spec.max_candidates)
            break;
        ++enumerated;
        if (zone_zero(tuple, tuple, 1, spec.z)) {
            if (static_cast<int>(vertices.size()) >= kMaxVertices)
                throw std::runtime_error("search: vertex set too large for exact clique search");
            vertices.push_back(tuple);
        }
        int pos = spec.n_flock - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == space - 1)
            --pos;
        if (pos < 0)
            break;
        const int next = ++tuple[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < spec.n_flock; ++j)
            tuple[static_cast<std::size_t>(j)] = next;
    }
    result.candidates_enumerated = enumerated;
    result.proven_exhaustive = !partial;

    Graph graph;
    graph.resize(static_cast<int>(vertices.size()));
    for (int a = 0; a < graph.vertex_count; ++a)
        for (int b = a + 1; b < graph.vertex_count; ++b) {
            const auto& va = vertices[static_cast<std::size_t>(a)];
            const auto& vb = vertices[static_cast<std::size_t>(b)];
            if (zone_zero(va, vb, 0, spec.z) && zone_zero(vb, va, 1, spec.z))
                graph.add_edge(a, b);
        }

    const std::vector<int> clique = CliqueSearch(graph).run();
    result.best_m = static_cast<int>(clique.size());
    if (!clique.empty()) {
        std::vector<Flock> flocks;
        for (int v : clique) {
            std::vector<QarySequence> members;
            for (int idx : vertices[static_cast<std::size_t>(v)])
                members.push_back(seqs[static_cast<std::size_t>(idx)]);
            flocks.emplace_back(std::move(members));
        }
        result.witness = ZcsFamily(std::move(flocks), spec.z);
    }
    return result;
}

bool lemma2_check(const QarySequence& c, const QarySequence& d, int alpha) {
    if (c.q() != d.q() || c.length() != d.length())
        throw std::invalid_argument("lemma2_check: mismatched sequences");
    if (alpha < 0 || alpha >= c.length())
        throw std::invalid_argument("lemma2_check: alpha out of range");
    if (!is_zero(accf(c, d, 0)))
        throw std::invalid_argument("lemma2_check: sequences are not orthogonal");

    const int q = c.q();
    std::vector<long long> coeffs(static_cast<std::size_t>(q), 0);
    for (int l = 0; l < c.length(); ++l) {
        if (l == alpha)
            continue;
        int diff = c[l] - d[l];
        if (diff < 0)
            diff += q;
        ++coeffs[static_cast<std::size_t>(diff)];
    }
    const CycloValue excluded(q, std::move(coeffs));
    const CycloValue magnitude_sq = excluded * excluded.conjugate();
    return equal(magnitude_sq, CycloValue::unit(q, 0, 1));
}

std::pair<QarySequence, QarySequence> random_orthogonal_pair(int q, int L,
                                                             unsigned long long seed) {
    if (q < 2)
        throw std::invalid_argument("random_orthogonal_pair: q must be >= 2");
    if (L < 2)
        throw std::invalid_argument("random_orthogonal_pair: L must be >= 2");
    if (q % L != 0)
        throw std::invalid_argument("random_orthogonal_pair: L must divide q");

    std::mt19937_64 rng(seed);
    const int a = static_cast<int>(rng() % static_cast<unsigned long long>(q));
    const int t = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(L - 1));
    const int a_prime = (a + t * (q / L)) % q;

    std::vector<int> c_exps(static_cast<std::size_t>(L)), d_exps(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        c_exps[static_cast<std::size_t>(i)] = static_cast<int>((static_cast<long long>(a) * i) % q);
        d_exps[static_cast<std::size_t>(i)] = static_cast<int>((static_cast<long long>(a_prime) * i) % q);
    }
    return {QarySequence(q, std::move(c_exps)), QarySequence(q, std::move(d_exps))};
}

}  // namespace zcs
