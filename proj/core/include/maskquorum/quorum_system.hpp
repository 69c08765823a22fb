// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/element_set.hpp"
#include "maskquorum/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace maskquorum
{

/// The server universe {0, ..., n-1}.
class Universe
{
  public:
    explicit Universe(std::size_t n);

    std::size_t
    size() const
    {
        return mSize;
    }

    ElementSet
    emptySet() const
    {
        return ElementSet(mSize);
    }

    ElementSet
    fullSet() const
    {
        return ElementSet::full(mSize);
    }

    friend bool operator==(Universe const&, Universe const&) = default;

  private:
    std::size_t mSize;
};

/// A quorum system given as an explicit list of quorums.
///
/// Construction rejects empty quorums, out-of-universe quorums and
/// duplicates. Pairwise intersection is *not* enforced here; use
/// validateExplicit() to check it. Quorums need not form an antichain.
class ExplicitQuorumSystem
{
  public:
    ExplicitQuorumSystem(Universe universe, std::vector<ElementSet> quorums);

    Universe const&
    universe() const
    {
        return mUniverse;
    }

    std::size_t
    universeSize() const
    {
        return mUniverse.size();
    }

    std::vector<ElementSet> const&
    quorums() const
    {
        return mQuorums;
    }

    std::size_t
    quorumCount() const
    {
        return mQuorums.size();
    }

    // True iff some quorum is contained in `alive`.
    bool live(ElementSet const& alive) const;

  private:
    Universe mUniverse;
    std::vector<ElementSet> mQuorums;
};

struct Violation
{
    enum class Kind
    {
        DisjointPair,
        DuplicatePair,
    };
    Kind kind;
    std::size_t first;
    std::size_t second;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool
    ok() const
    {
        return violations.empty();
    }
};

ValidationReport validateExplicit(ExplicitQuorumSystem const& sys);

/// A probability distribution over the quorums of an explicit system.
class AccessStrategy
{
  public:
    static constexpr double kSumTolerance = 1e-12;

    // Throws ParameterError on negative weights or a sum off 1 by more than
    // kSumTolerance.
    explicit AccessStrategy(std::vector<double> weights);

    static AccessStrategy uniform(std::size_t quorumCount);
    static AccessStrategy pointMass(std::size_t quorumCount, std::size_t index);

    std::vector<double> const&
    weights() const
    {
        return mWeights;
    }

    std::size_t
    size() const
    {
        return mWeights.size();
    }

  private:
    std::vector<double> mWeights;
};

/// Combinatorial measures of a quorum system: universe size, smallest quorum,
/// smallest pairwise intersection, smallest transversal, masking level,
/// resilience and load.
struct SystemParams
{
    std::int64_t n{0};
    std::int64_t c{0};
    std::int64_t iMin{0};
    std::int64_t aMin{0};
    std::int64_t b{0};
    std::int64_t f{0};
    double load{0.0};

    // b = min(aMin - 1, floor((iMin - 1) / 2)), f = aMin - 1.
    static SystemParams derive(std::int64_t n, std::int64_t c, std::int64_t iMin,
                               std::int64_t aMin, double load);

    friend bool operator==(SystemParams const&, SystemParams const&) = default;
};

std::int64_t maskingLevelFrom(std::int64_t aMin, std::int64_t iMin);

/// Each element is included independently with probability p.
ElementSet sampleCrashSet(std::size_t n, double p, Rng rng);

} // namespace maskquorum
