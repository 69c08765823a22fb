// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/constructions.hpp"
#include "maskquorum/quorum_system.hpp"

#include <cstdint>

namespace maskquorum
{

inline constexpr std::uint64_t kDefaultCompositionCap = 1'000'000;

// Number of (outer quorum, inner quorum per copy) choices, saturating:
// sum over outer quorums S of innerCount^|S|.
std::uint64_t compositionCount(ExplicitQuorumSystem const& outer,
                               ExplicitQuorumSystem const& inner);

/// Every element i of `outer` is replaced by copy i of `inner`, which
/// occupies elements [i * n_inner, (i + 1) * n_inner). Quorums are all unions
/// of one inner quorum per copy over an outer quorum; identical unions are
/// kept once. Throws SizeError when compositionCount exceeds `cap`.
ExplicitQuorumSystem composeExplicit(ExplicitQuorumSystem const& outer,
                                     ExplicitQuorumSystem const& inner,
                                     std::uint64_t cap = kDefaultCompositionCap);

/// n, c, iMin, aMin and load multiply; b and f are re-derived.
SystemParams composeParams(SystemParams const& outer, SystemParams const& inner);

/// A handle whose live predicate evaluates `outer` over the liveness of each
/// inner copy.
QuorumSystemHandle composeHandles(QuorumSystemHandle const& outer,
                                  QuorumSystemHandle const& inner);

} // namespace maskquorum
