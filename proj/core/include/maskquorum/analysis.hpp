// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/element_set.hpp"
#include "maskquorum/quorum_system.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace maskquorum
{

// Exact minimum transversal search is attempted when n <= 30 or the system
// has at most this many quorums.
inline constexpr std::size_t kTransversalMaxUniverse = 30;
inline constexpr std::size_t kTransversalMaxQuorums = 10'000;

// load_lp limits.
inline constexpr std::size_t kLoadLpMaxQuorums = 10'000;
inline constexpr std::size_t kLoadLpMaxUniverse = 1'000;

// Exhaustive resilience checks are used up to this universe size.
inline constexpr std::size_t kDefinitionalMaxUniverse = 12;

struct CombinatorialParams
{
    std::int64_t c{0};
    std::int64_t iMin{0};
    std::int64_t aMin{0};
    friend bool operator==(CombinatorialParams const&,
                           CombinatorialParams const&) = default;
};

/// Smallest quorum, smallest intersection over distinct quorum pairs (the
/// single-quorum system reports iMin = c) and exact smallest transversal.
CombinatorialParams combinatorialParams(ExplicitQuorumSystem const& sys);

std::int64_t smallestQuorum(ExplicitQuorumSystem const& sys);
std::int64_t smallestIntersection(ExplicitQuorumSystem const& sys);

/// A minimum-cardinality set meeting every quorum, found by branch and bound
/// (greedy incumbent, degree-ordered branching). Throws SizeError beyond the
/// limits above.
ElementSet minimumTransversal(ExplicitQuorumSystem const& sys);

/// min(aMin - 1, floor((iMin - 1) / 2)); negative when the system masks no
/// b >= 0.
std::int64_t maskingLevel(ExplicitQuorumSystem const& sys);

struct MaskingCheck
{
    enum class ResilienceMethod
    {
        Exhaustive, // every b-subset checked directly (n <= 12)
        Transversal // aMin >= b + 1
    };

    bool masking{false};
    ResilienceMethod method{ResilienceMethod::Exhaustive};
    // A pair of quorums intersecting in fewer than 2b+1 elements.
    std::optional<std::pair<std::size_t, std::size_t>> violatingPair;
    // A set of at most b elements meeting every quorum.
    std::optional<ElementSet> blockingSet;
};

MaskingCheck checkMasking(ExplicitQuorumSystem const& sys, std::int64_t b);

/// Largest k such that every k-subset misses some quorum, by enumeration.
/// Throws SizeError for n > kDefinitionalMaxUniverse.
std::int64_t resilienceExhaustive(ExplicitQuorumSystem const& sys);

struct Fairness
{
    bool fair{false};
    std::int64_t quorumSize{0};
    std::int64_t degree{0};
};

Fairness checkFairness(ExplicitQuorumSystem const& sys);

std::vector<std::int64_t> elementDegrees(ExplicitQuorumSystem const& sys);

struct InducedLoad
{
    std::vector<double> perElement;
    double max{0.0};
};

InducedLoad inducedLoad(ExplicitQuorumSystem const& sys,
                        AccessStrategy const& strategy);

struct LoadSolution
{
    double load{0.0};
    AccessStrategy strategy;
};

/// Optimal load by linear programming. Solves
///   max sum_Q x_Q  s.t.  sum_{Q ∋ u} x_Q <= 1 for all u, x >= 0
/// with a dense simplex; the load is 1 / optimum and w = x / sum(x) is an
/// optimal strategy. The reported load is the one w actually induces.
LoadSolution loadLp(ExplicitQuorumSystem const& sys);

// c / n for a fair system; ApplicabilityError otherwise.
double loadFair(ExplicitQuorumSystem const& sys);
double loadFair(SystemParams const& params);

struct LoadLowerBounds
{
    double general{0.0};   // max((2b+1)/c, c/n)
    double sqrtForm{0.0};  // sqrt((2b+1)/n)
};

LoadLowerBounds loadLowerBounds(std::int64_t n, std::int64_t b, std::int64_t c);

} // namespace maskquorum
