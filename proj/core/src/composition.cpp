// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/composition.hpp"
#include "maskquorum/combinatorics.hpp"
#include "maskquorum/errors.hpp"

#include <unordered_set>

namespace maskquorum
{

std::uint64_t
compositionCount(ExplicitQuorumSystem const& outer,
                 ExplicitQuorumSystem const& inner)
{
    std::uint64_t total = 0;
    for (auto const& s : outer.quorums())
    {
        total = saturatingAdd(total,
                              saturatingPow(inner.quorumCount(), s.count()));
    }
    return total;
}

ExplicitQuorumSystem
composeExplicit(ExplicitQuorumSystem const& outer,
                ExplicitQuorumSystem const& inner, std::uint64_t cap)
{
    auto const count = compositionCount(outer, inner);
    if (count > cap)
    {
        throw SizeError("composition has " + std::to_string(count) +
                        " quorums, exceeding the cap of " +
                        std::to_string(cap));
    }
    auto const nInner = inner.universeSize();
    auto const n = outer.universeSize() * nInner;
    auto const& innerQuorums = inner.quorums();

    // Inner quorum r shifted into copy i.
    std::vector<std::vector<ElementSet>> shifted(outer.universeSize());
    for (std::size_t i = 0; i < outer.universeSize(); ++i)
    {
        shifted[i].reserve(innerQuorums.size());
        for (auto const& r : innerQuorums)
        {
            shifted[i].push_back(r.embed(n, i * nInner));
        }
    }

    std::vector<ElementSet> quorums;
    quorums.reserve(static_cast<std::size_t>(count));
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (auto const& s : outer.quorums())
    {
        auto copies = s.members();
        std::vector<std::size_t> choice(copies.size(), 0);
        while (true)
        {
            ElementSet q(n);
            for (std::size_t k = 0; k < copies.size(); ++k)
            {
                q.insertAll(shifted[copies[k]][choice[k]]);
            }
            if (seen.insert(q).second)
            {
                quorums.push_back(std::move(q));
            }
            // odometer over one inner quorum per copy
            std::size_t k = 0;
            while (k < choice.size() && ++choice[k] == innerQuorums.size())
            {
                choice[k] = 0;
                ++k;
            }
            if (k == choice.size())
            {
                break;
            }
        }
    }
    return ExplicitQuorumSystem(Universe(n), std::move(quorums));
}

SystemParams
composeParams(SystemParams const& outer, SystemParams const& inner)
{
    return SystemParams::derive(outer.n * inner.n, outer.c * inner.c,
                                outer.iMin * inner.iMin,
                                outer.aMin * inner.aMin,
                                outer.load * inner.load);
}

namespace
{

class ComposedImpl final : public detail::QuorumSystemImpl
{
  public:
    ComposedImpl(std::shared_ptr<detail::QuorumSystemImpl const> outer,
                 std::shared_ptr<detail::QuorumSystemImpl const> inner)
        : mOuter(std::move(outer))
        , mInner(std::move(inner))
        , mOuterSize(mOuter->universeSize())
        , mInnerSize(mInner->universeSize())
        , mParams(composeParams(mOuter->params(), mInner->params()))
    {
    }

    SystemParams
    params() const override
    {
        return mParams;
    }

    std::size_t
    universeSize() const override
    {
        return mOuterSize * mInnerSize;
    }

    bool
    live(ElementSet const& alive) const override
    {
        ElementSet liveCopies(mOuterSize);
        for (std::size_t i = 0; i < mOuterSize; ++i)
        {
            if (mInner->live(alive.slice(i * mInnerSize, mInnerSize)))
            {
                liveCopies.insert(static_cast<Element>(i));
            }
        }
        return mOuter->live(liveCopies);
    }

    ElementSet
    sample(Rng& rng) const override
    {
        ElementSet q(universeSize());
        for (auto i : mOuter->sample(rng).members())
        {
            auto offset = static_cast<Element>(i * mInnerSize);
            for (auto e : mInner->sample(rng).members())
            {
                q.insert(offset + e);
            }
        }
        return q;
    }

    std::uint64_t
    quorumCount() const override
    {
        auto innerCount = mInner->quorumCount();
        if (auto s = mOuter->uniformQuorumSize())
        {
            return saturatingMul(mOuter->quorumCount(),
                                 saturatingPow(innerCount, *s));
        }
        std::uint64_t total = 0;
        for (auto const& q : mOuter->quorums())
        {
            total = saturatingAdd(total, saturatingPow(innerCount, q.count()));
        }
        return total;
    }

    std::optional<std::uint64_t>
    uniformQuorumSize() const override
    {
        auto s = mOuter->uniformQuorumSize();
        auto t = mInner->uniformQuorumSize();
        if (s && t)
        {
            return *s * *t;
        }
        return std::nullopt;
    }

    std::vector<ElementSet>
    quorums() const override
    {
        ExplicitQuorumSystem outer(Universe(mOuterSize), mOuter->quorums());
        ExplicitQuorumSystem inner(Universe(mInnerSize), mInner->quorums());
        return composeExplicit(outer, inner, ~std::uint64_t{0}).quorums();
    }

  private:
    std::shared_ptr<detail::QuorumSystemImpl const> mOuter;
    std::shared_ptr<detail::QuorumSystemImpl const> mInner;
    std::size_t mOuterSize;
    std::size_t mInnerSize;
    SystemParams mParams;
};

} // namespace

QuorumSystemHandle
composeHandles(QuorumSystemHandle const& outer, QuorumSystemHandle const& inner)
{
    return QuorumSystemHandle(
        ConstructionSpec::composed(outer.spec(), inner.spec()),
        std::make_shared<ComposedImpl>(outer.impl(), inner.impl()));
}

} // namespace maskquorum
