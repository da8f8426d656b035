#include "zcs/family.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zcs {

Flock::Flock(std::vector<QarySequence> sequences) : seqs_(std::move(sequences)) {
    if (seqs_.empty())
        throw std::invalid_argument("Flock: needs at least one sequence");
    for (const QarySequence& s : seqs_)
        if (s.q() != seqs_.front().q() || s.length() != seqs_.front().length())
            throw std::invalid_argument("Flock: sequences must share q and length");
}

ZcsFamily::ZcsFamily(std::vector<Flock> flocks, std::optional<int> claimed_Z)
    : flocks_(std::move(flocks)), claimed_Z_(claimed_Z) {
    if (flocks_.empty())
        throw std::invalid_argument("ZcsFamily: needs at least one flock");
    const Flock& first = flocks_.front();
    for (const Flock& f : flocks_)
        if (f.n() != first.n() || f.q() != first.q() || f.length() != first.length())
            throw std::invalid_argument("ZcsFamily: flocks must share N, q, and length");
    if (claimed_Z_ && (*claimed_Z_ < 1 || *claimed_Z_ > first.length()))
        throw std::invalid_argument("ZcsFamily: claimed Z must be in [1, L]");
}

CycloValue set_correlation(const Flock& cp, const Flock& ct, int u) {
    if (cp.q() != ct.q() || cp.n() != ct.n() || cp.length() != ct.length())
        throw std::invalid_argument("set_correlation: incompatible flocks");
    if (std::abs(u) >= cp.length())
        throw std::invalid_argument("set_correlation: |u| must be <= L-1");
    std::vector<long long> acc(static_cast<std::size_t>(cp.q()), 0);
    for (int lambda = 0; lambda < cp.n(); ++lambda)
        detail::accf_accumulate(cp[lambda], ct[lambda], u, acc);
    return CycloValue(cp.q(), std::move(acc));
}

}  // namespace zcs
