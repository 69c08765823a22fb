// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/element_set.hpp"
#include "maskquorum/quorum_system.hpp"
#include "maskquorum/rng.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace maskquorum
{

struct ConstructionSpec;

/// Union of g rows and g columns of a side x side grid, g = ceil(sqrt(b+1)).
struct MGridSpec
{
    std::int64_t side;
    std::int64_t b;
    friend bool operator==(MGridSpec const&, MGridSpec const&) = default;
};

/// ell-of-k threshold system.
struct ThresholdSpec
{
    std::int64_t k;
    std::int64_t ell;
    friend bool operator==(ThresholdSpec const&, ThresholdSpec const&) = default;
};

/// ell-of-k threshold composed over itself to depth h.
struct RTSpec
{
    std::int64_t k;
    std::int64_t ell;
    std::int64_t h;
    friend bool operator==(RTSpec const&, RTSpec const&) = default;
};

/// Lines of the projective plane over the integers mod q (q prime).
struct FPPSpec
{
    std::int64_t q;
    friend bool operator==(FPPSpec const&, FPPSpec const&) = default;
};

/// FPP(q) composed over the (3b+1)-of-(4b+1) threshold.
struct BoostFPPSpec
{
    std::int64_t q;
    std::int64_t b;
    friend bool operator==(BoostFPPSpec const&, BoostFPPSpec const&) = default;
};

/// r = ceil(sqrt(2b+1)) disjoint left-right plus r disjoint top-bottom
/// paths on the triangulated side x side grid.
struct MPathSpec
{
    std::int64_t side;
    std::int64_t b;
    friend bool operator==(MPathSpec const&, MPathSpec const&) = default;
};

struct ComposedSpec
{
    std::shared_ptr<ConstructionSpec const> outer;
    std::shared_ptr<ConstructionSpec const> inner;
    friend bool operator==(ComposedSpec const& a, ComposedSpec const& b);
};

struct ConstructionSpec
{
    using Variant = std::variant<MGridSpec, ThresholdSpec, RTSpec, FPPSpec,
                                 BoostFPPSpec, MPathSpec, ComposedSpec>;
    Variant value;

    static ConstructionSpec composed(ConstructionSpec outer,
                                     ConstructionSpec inner);

    friend bool operator==(ConstructionSpec const&,
                           ConstructionSpec const&) = default;
};

// Short human-readable name, e.g. "MGrid(7,3)" or "FPP(2)∘Threshold(3,2)".
std::string describe(ConstructionSpec const& spec);

// Throws ParameterError / UnsupportedOrderError when the construction's constraints
// do not hold.
void validateSpec(ConstructionSpec const& spec);

// ceil(sqrt(x)) for non-negative integers.
std::int64_t ceilSqrt(std::int64_t x);

namespace detail
{
class QuorumSystemImpl
{
  public:
    virtual ~QuorumSystemImpl() = default;

    virtual SystemParams params() const = 0;
    virtual std::size_t universeSize() const = 0;
    virtual bool live(ElementSet const& alive) const = 0;
    virtual ElementSet sample(Rng& rng) const = 0;
    // Saturates at UINT64_MAX.
    virtual std::uint64_t quorumCount() const = 0;
    virtual std::optional<std::uint64_t> uniformQuorumSize() const = 0;
    // Precondition: quorumCount() is small enough to enumerate.
    virtual std::vector<ElementSet> quorums() const = 0;
};
} // namespace detail

/// An implicitly represented quorum system: analytic parameters, a live
/// predicate, a sampler following the load-optimal strategy and, for small
/// instances, materialization into an explicit quorum list.
class QuorumSystemHandle
{
  public:
    QuorumSystemHandle(ConstructionSpec spec,
                       std::shared_ptr<detail::QuorumSystemImpl const> impl);

    ConstructionSpec const&
    spec() const
    {
        return mSpec;
    }

    SystemParams const&
    params() const
    {
        return mParams;
    }

    std::size_t
    universeSize() const
    {
        return mImpl->universeSize();
    }

    // True iff `alive` contains a complete quorum.
    bool live(ElementSet const& alive) const;

    ElementSet sampleQuorum(Rng rng) const;

    // Draws from an existing stream; used when one trial needs several
    // samples.
    ElementSet
    sampleQuorumFrom(Rng& rng) const
    {
        return mImpl->sample(rng);
    }

    std::uint64_t
    quorumCount() const
    {
        return mImpl->quorumCount();
    }

    std::optional<std::uint64_t>
    uniformQuorumSize() const
    {
        return mImpl->uniformQuorumSize();
    }

    // Every quorum of the construction (for M-Path, the straight row/column
    // quorums). Throws SizeError when there are more than maxQuorums.
    ExplicitQuorumSystem materialize(std::uint64_t maxQuorums) const;

    std::shared_ptr<detail::QuorumSystemImpl const> const&
    impl() const
    {
        return mImpl;
    }

  private:
    ConstructionSpec mSpec;
    std::shared_ptr<detail::QuorumSystemImpl const> mImpl;
    SystemParams mParams;
};

QuorumSystemHandle build(ConstructionSpec const& spec);

/// Points are the nonzero triples mod q scaled so the first nonzero
/// coordinate is 1, in the order (1,a,b), (0,1,b), (0,0,1) with a, b
/// ascending. Line i is {P : L_i . P = 0 mod q} where L_i is point i read as
/// a coefficient vector.
std::vector<std::array<std::int64_t, 3>> fppPoints(std::int64_t q);
ExplicitQuorumSystem fppLines(std::int64_t q);

} // namespace maskquorum
