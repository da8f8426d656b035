#pragma once

#include <string>

#include "zcs/family.hpp"

namespace zcs {

/// Text format "zcs-v1": a header line
///     zcs-v1 q=<q> M=<M> N=<N> L=<L> [Z=<Z>]
/// followed by M blocks, each "set <p>" and then N lines of L base-q
/// digits (0-9 then a-z, so q <= 36).
std::string render_family(const ZcsFamily& family);

/// Inverse of render_family; throws std::runtime_error with a named
/// defect on malformed input.
ZcsFamily parse_family(const std::string& text);

/// JSON document with fields q, M, N, L, Z (null when unclaimed) and
/// sets as an M x N x L array of exponents.
std::string family_to_json(const ZcsFamily& family);

ZcsFamily family_from_json(const std::string& text);

}  // namespace zcs
