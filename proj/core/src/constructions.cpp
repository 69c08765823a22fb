// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/constructions.hpp"
#include "maskquorum/combinatorics.hpp"
#include "maskquorum/composition.hpp"
#include "maskquorum/errors.hpp"
#include "maskquorum/paths.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maskquorum
{

bool
operator==(ComposedSpec const& a, ComposedSpec const& b)
{
    auto same = [](std::shared_ptr<ConstructionSpec const> const& x,
                   std::shared_ptr<ConstructionSpec const> const& y) {
        if (!x || !y)
        {
            return x == y;
        }
        return *x == *y;
    };
    return same(a.outer, b.outer) && same(a.inner, b.inner);
}

ConstructionSpec
ConstructionSpec::composed(ConstructionSpec outer, ConstructionSpec inner)
{
    return ConstructionSpec{ComposedSpec{
        std::make_shared<ConstructionSpec const>(std::move(outer)),
        std::make_shared<ConstructionSpec const>(std::move(inner))}};
}

std::int64_t
ceilSqrt(std::int64_t x)
{
    if (x < 0)
    {
        throw ParameterError("square root of a negative integer");
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r < x)
    {
        ++r;
    }
    while (r > 0 && (r - 1) * (r - 1) >= x)
    {
        --r;
    }
    return r;
}

namespace
{

std::string
describeImpl(ConstructionSpec const& spec, bool nested)
{
    struct Visitor
    {
        bool nested;
        std::string
        operator()(MGridSpec const& s) const
        {
            return "MGrid(" + std::to_string(s.side) + "," +
                   std::to_string(s.b) + ")";
        }
        std::string
        operator()(ThresholdSpec const& s) const
        {
            return "Threshold(" + std::to_string(s.k) + "," +
                   std::to_string(s.ell) + ")";
        }
        std::string
        operator()(RTSpec const& s) const
        {
            return "RT(" + std::to_string(s.k) + "," + std::to_string(s.ell) +
                   "," + std::to_string(s.h) + ")";
        }
        std::string
        operator()(FPPSpec const& s) const
        {
            return "FPP(" + std::to_string(s.q) + ")";
        }
        std::string
        operator()(BoostFPPSpec const& s) const
        {
            return "BoostFPP(" + std::to_string(s.q) + "," +
                   std::to_string(s.b) + ")";
        }
        std::string
        operator()(MPathSpec const& s) const
        {
            return "MPath(" + std::to_string(s.side) + "," +
                   std::to_string(s.b) + ")";
        }
        std::string
        operator()(ComposedSpec const& s) const
        {
            auto body = describeImpl(*s.outer, true) + "∘" +
                        describeImpl(*s.inner, true);
            return nested ? "(" + body + ")" : body;
        }
    };
    return std::visit(Visitor{nested}, spec.value);
}

[[noreturn]] void
fail(ConstructionSpec const& spec, std::string const& constraint)
{
    throw ParameterError(describe(spec) + ": requires " + constraint);
}

void
validateThreshold(ConstructionSpec const& spec, std::int64_t k,
                  std::int64_t ell)
{
    if (!(k > ell))
    {
        fail(spec, "k > ell");
    }
    if (!(2 * ell > k))
    {
        fail(spec, "ell > k/2");
    }
}

void
validateFpp(ConstructionSpec const& spec, std::int64_t q)
{
    if (q < 2 || !isPrime(q))
    {
        throw UnsupportedOrderError(
            describe(spec) + ": unsupported projective plane order " +
            std::to_string(q) + " (only prime orders are supported)");
    }
}

////////////////////////////////////////////////////////////////////////////////
// Threshold
////////////////////////////////////////////////////////////////////////////////

class ThresholdImpl final : public detail::QuorumSystemImpl
{
  public:
    ThresholdImpl(std::uint32_t k, std::uint32_t ell) : mK(k), mEll(ell)
    {
    }

    SystemParams
    params() const override
    {
        std::int64_t k = mK;
        std::int64_t ell = mEll;
        return SystemParams::derive(k, ell, 2 * ell - k, k - ell + 1,
                                    static_cast<double>(ell) /
                                        static_cast<double>(k));
    }

    std::size_t
    universeSize() const override
    {
        return mK;
    }

    bool
    live(ElementSet const& alive) const override
    {
        return alive.count() >= mEll;
    }

    ElementSet
    sample(Rng& rng) const override
    {
        auto idx = sampleCombination(mK, mEll, rng);
        return ElementSet(mK, std::span<Element const>(idx));
    }

    std::uint64_t
    quorumCount() const override
    {
        return binomialSaturating(mK, mEll);
    }

    std::optional<std::uint64_t>
    uniformQuorumSize() const override
    {
        return mEll;
    }

    std::vector<ElementSet>
    quorums() const override
    {
        std::vector<ElementSet> out;
        forEachCombination(mK, mEll, [&](std::span<std::uint32_t const> idx) {
            out.emplace_back(mK, idx);
            return true;
        });
        return out;
    }

  private:
    std::uint32_t mK;
    std::uint32_t mEll;
};

////////////////////////////////////////////////////////////////////////////////
// Row/column quorums on a side x side grid: g full rows plus g full columns.
// Shared by M-Grid and by the straight-path part of M-Path.
////////////////////////////////////////////////////////////////////////////////

class RowColumnQuorums
{
  public:
    RowColumnQuorums(std::uint32_t side, std::uint32_t g) : mSide(side), mG(g)
    {
    }

    std::uint32_t
    side() const
    {
        return mSide;
    }

    std::size_t
    universeSize() const
    {
        return static_cast<std::size_t>(mSide) * mSide;
    }

    bool
    live(ElementSet const& alive) const
    {
        std::uint32_t fullRows = 0;
        std::uint32_t fullCols = 0;
        for (std::uint32_t i = 0; i < mSide; ++i)
        {
            bool row = true;
            bool col = true;
            for (std::uint32_t j = 0; j < mSide && (row || col); ++j)
            {
                row = row && alive.contains(i * mSide + j);
                col = col && alive.contains(j * mSide + i);
            }
            fullRows += row ? 1U : 0U;
            fullCols += col ? 1U : 0U;
        }
        return fullRows >= mG && fullCols >= mG;
    }

    ElementSet
    quorum(std::span<std::uint32_t const> rows,
           std::span<std::uint32_t const> cols) const
    {
        ElementSet q(universeSize());
        for (auto i : rows)
        {
            for (std::uint32_t j = 0; j < mSide; ++j)
            {
                q.insert(i * mSide + j);
            }
        }
        for (auto j : cols)
        {
            for (std::uint32_t i = 0; i < mSide; ++i)
            {
                q.insert(i * mSide + j);
            }
        }
        return q;
    }

    ElementSet
    sample(Rng& rng) const
    {
        auto rows = sampleCombination(mSide, mG, rng);
        auto cols = sampleCombination(mSide, mG, rng);
        return quorum(rows, cols);
    }

    std::uint64_t
    quorumCount() const
    {
        auto c = binomialSaturating(mSide, mG);
        return saturatingMul(c, c);
    }

    std::uint64_t
    quorumSize() const
    {
        return 2ULL * mG * mSide - static_cast<std::uint64_t>(mG) * mG;
    }

    std::vector<ElementSet>
    quorums() const
    {
        std::vector<std::vector<std::uint32_t>> subsets;
        forEachCombination(mSide, mG, [&](std::span<std::uint32_t const> idx) {
            subsets.emplace_back(idx.begin(), idx.end());
            return true;
        });
        std::vector<ElementSet> out;
        out.reserve(subsets.size() * subsets.size());
        for (auto const& rows : subsets)
        {
            for (auto const& cols : subsets)
            {
                out.push_back(quorum(rows, cols));
            }
        }
        return out;
    }

  private:
    std::uint32_t mSide;
    std::uint32_t mG;
};

class MGridImpl final : public detail::QuorumSystemImpl
{
  public:
    MGridImpl(std::uint32_t side, std::uint32_t g) : mGrid(side, g)
    {
        std::int64_t s = side;
        std::int64_t gg = g;
        auto c = 2 * gg * s - gg * gg;
        // Two quorums overlap in |I∩I'|·side + 2g(g-|I∩I'|) +
        // |J∩J'|(side-2g+|I∩I'|) cells for row sets I, I' and column sets
        // J, J'; both overlaps are forced to at least max(0, 2g - side).
        auto forced = std::max<std::int64_t>(0, 2 * gg - s);
        auto iMin = 2 * gg * gg - forced * forced;
        mParams = SystemParams::derive(
            s * s, c, iMin, s - gg + 1,
            static_cast<double>(c) / static_cast<double>(s * s));
    }

    SystemParams
    params() const override
    {
        return mParams;
    }

    std::size_t
    universeSize() const override
    {
        return mGrid.universeSize();
    }

    bool
    live(ElementSet const& alive) const override
    {
        return mGrid.live(alive);
    }

    ElementSet
    sample(Rng& rng) const override
    {
        return mGrid.sample(rng);
    }

    std::uint64_t
    quorumCount() const override
    {
        return mGrid.quorumCount();
    }

    std::optional<std::uint64_t>
    uniformQuorumSize() const override
    {
        return mGrid.quorumSize();
    }

    std::vector<ElementSet>
    quorums() const override
    {
        return mGrid.quorums();
    }

  private:
    RowColumnQuorums mGrid;
    SystemParams mParams;
};

class MPathImpl final : public detail::QuorumSystemImpl
{
  public:
    MPathImpl(std::uint32_t side, std::uint32_t r)
        : mStraight(side, r), mTriGrid(side), mR(r)
    {
        std::int64_t s = side;
        std::int64_t rr = r;
        auto c = 2 * rr * s - rr * rr;
        mParams = SystemParams::derive(
            s * s, c, rr * rr, s - rr + 1,
            static_cast<double>(c) / static_cast<double>(s * s));
    }

    SystemParams
    params() const override
    {
        return mParams;
    }

    std::size_t
    universeSize() const override
    {
        return mStraight.universeSize();
    }

    bool
    live(ElementSet const& alive) const override
    {
        return mpathLive(mTriGrid, mR, alive);
    }

    ElementSet
    sample(Rng& rng) const override
    {
        return mStraight.sample(rng);
    }

    std::uint64_t
    quorumCount() const override
    {
        return mStraight.quorumCount();
    }

    std::optional<std::uint64_t>
    uniformQuorumSize() const override
    {
        return mStraight.quorumSize();
    }

    std::vector<ElementSet>
    quorums() const override
    {
        return mStraight.quorums();
    }

  private:
    RowColumnQuorums mStraight;
    TriGrid mTriGrid;
    std::size_t mR;
    SystemParams mParams;
};

////////////////////////////////////////////////////////////////////////////////
// Finite projective plane
////////////////////////////////////////////////////////////////////////////////

class FppImpl final : public detail::QuorumSystemImpl
{
  public:
    explicit FppImpl(std::int64_t q) : mQ(q), mLines(fppLines(q))
    {
    }

    SystemParams
    params() const override
    {
        auto n = mQ * mQ + mQ + 1;
        return SystemParams::derive(n, mQ + 1, 1, mQ + 1,
                                    static_cast<double>(mQ + 1) /
                                        static_cast<double>(n));
    }

    std::size_t
    universeSize() const override
    {
        return mLines.universeSize();
    }

    bool
    live(ElementSet const& alive) const override
    {
        return mLines.live(alive);
    }

    ElementSet
    sample(Rng& rng) const override
    {
        return mLines.quorums()[rng.uniformBelow(mLines.quorumCount())];
    }

    std::uint64_t
    quorumCount() const override
    {
        return mLines.quorumCount();
    }

    std::optional<std::uint64_t>
    uniformQuorumSize() const override
    {
        return static_cast<std::uint64_t>(mQ + 1);
    }

    std::vector<ElementSet>
    quorums() const override
    {
        return mLines.quorums();
    }

  private:
    std::int64_t mQ;
    ExplicitQuorumSystem mLines;
};

QuorumSystemHandle
rebrand(ConstructionSpec const& spec, QuorumSystemHandle const& handle)
{
    return QuorumSystemHandle(spec, handle.impl());
}

QuorumSystemHandle
thresholdHandle(std::int64_t k, std::int64_t ell)
{
    return QuorumSystemHandle(
        ConstructionSpec{ThresholdSpec{k, ell}},
        std::make_shared<ThresholdImpl>(static_cast<std::uint32_t>(k),
                                        static_cast<std::uint32_t>(ell)));
}

constexpr std::int64_t kMaxUniverse = std::int64_t{1} << 31;

void
checkUniverseSize(ConstructionSpec const& spec, long double n)
{
    if (n > static_cast<long double>(kMaxUniverse))
    {
        throw SizeError(describe(spec) + ": universe too large");
    }
}

} // namespace

std::string
describe(ConstructionSpec const& spec)
{
    return describeImpl(spec, false);
}

void
validateSpec(ConstructionSpec const& spec)
{
    struct Visitor
    {
        ConstructionSpec const& spec;
        void
        operator()(MGridSpec const& s) const
        {
            if (s.side < 2)
            {
                fail(spec, "side >= 2");
            }
            if (s.b < 0)
            {
                fail(spec, "b >= 0");
            }
            if (ceilSqrt(s.b + 1) > s.side)
            {
                fail(spec, "ceil(sqrt(b+1)) <= side");
            }
            if (2 * s.b > s.side - 1)
            {
                fail(spec, "b <= (side-1)/2");
            }
            checkUniverseSize(spec, static_cast<long double>(s.side) * s.side);
        }
        void
        operator()(ThresholdSpec const& s) const
        {
            validateThreshold(spec, s.k, s.ell);
            checkUniverseSize(spec, s.k);
        }
        void
        operator()(RTSpec const& s) const
        {
            validateThreshold(spec, s.k, s.ell);
            if (s.h < 1)
            {
                fail(spec, "h >= 1");
            }
            checkUniverseSize(spec, std::pow(static_cast<long double>(s.k),
                                             static_cast<long double>(s.h)));
        }
        void
        operator()(FPPSpec const& s) const
        {
            validateFpp(spec, s.q);
            checkUniverseSize(spec, static_cast<long double>(s.q) * s.q);
        }
        void
        operator()(BoostFPPSpec const& s) const
        {
            validateFpp(spec, s.q);
            if (s.b < 0)
            {
                fail(spec, "b >= 0");
            }
            checkUniverseSize(spec, (4.0L * s.b + 1) *
                                        (static_cast<long double>(s.q) * s.q +
                                         s.q + 1));
        }
        void
        operator()(MPathSpec const& s) const
        {
            if (s.side < 2)
            {
                fail(spec, "side >= 2");
            }
            if (s.b < 0)
            {
                fail(spec, "b >= 0");
            }
            auto r = ceilSqrt(2 * s.b + 1);
            if (r > s.side)
            {
                fail(spec, "ceil(sqrt(2b+1)) <= side");
            }
            if (s.side - r + 1 < s.b + 1)
            {
                fail(spec, "side - ceil(sqrt(2b+1)) + 1 >= b + 1");
            }
            checkUniverseSize(spec, static_cast<long double>(s.side) * s.side);
        }
        void
        operator()(ComposedSpec const& s) const
        {
            if (!s.outer || !s.inner)
            {
                throw ParameterError("composed spec is missing a component");
            }
            validateSpec(*s.outer);
            validateSpec(*s.inner);
        }
    };
    std::visit(Visitor{spec}, spec.value);
}

QuorumSystemHandle::QuorumSystemHandle(
    ConstructionSpec spec, std::shared_ptr<detail::QuorumSystemImpl const> impl)
    : mSpec(std::move(spec)), mImpl(std::move(impl)), mParams(mImpl->params())
{
}

bool
QuorumSystemHandle::live(ElementSet const& alive) const
{
    if (alive.universeSize() != mImpl->universeSize())
    {
        throw ParameterError(describe(mSpec) + ": alive set over a universe of " +
                             std::to_string(alive.universeSize()) +
                             ", expected " +
                             std::to_string(mImpl->universeSize()));
    }
    return mImpl->live(alive);
}

ElementSet
QuorumSystemHandle::sampleQuorum(Rng rng) const
{
    return mImpl->sample(rng);
}

ExplicitQuorumSystem
QuorumSystemHandle::materialize(std::uint64_t maxQuorums) const
{
    auto count = mImpl->quorumCount();
    if (count > maxQuorums)
    {
        std::string shown = count == ~std::uint64_t{0}
                                ? "more than 18446744073709551614"
                                : std::to_string(count);
        throw SizeError(describe(mSpec) + " has " + shown +
                        " quorums, exceeding the cap of " +
                        std::to_string(maxQuorums));
    }
    return ExplicitQuorumSystem(Universe(mImpl->universeSize()),
                                mImpl->quorums());
}

QuorumSystemHandle
build(ConstructionSpec const& spec)
{
    validateSpec(spec);
    struct Visitor
    {
        ConstructionSpec const& spec;
        QuorumSystemHandle
        operator()(MGridSpec const& s) const
        {
            return QuorumSystemHandle(
                spec, std::make_shared<MGridImpl>(
                          static_cast<std::uint32_t>(s.side),
                          static_cast<std::uint32_t>(ceilSqrt(s.b + 1))));
        }
        QuorumSystemHandle
        operator()(ThresholdSpec const& s) const
        {
            return thresholdHandle(s.k, s.ell);
        }
        QuorumSystemHandle
        operator()(RTSpec const& s) const
        {
            auto block = thresholdHandle(s.k, s.ell);
            auto tree = block;
            for (std::int64_t depth = 2; depth <= s.h; ++depth)
            {
                tree = composeHandles(block, tree);
            }
            return rebrand(spec, tree);
        }
        QuorumSystemHandle
        operator()(FPPSpec const& s) const
        {
            return QuorumSystemHandle(spec, std::make_shared<FppImpl>(s.q));
        }
        QuorumSystemHandle
        operator()(BoostFPPSpec const& s) const
        {
            // b = 0 degenerates to the 1-of-1 threshold, i.e. plain FPP(q).
            auto plane = build(ConstructionSpec{FPPSpec{s.q}});
            auto block = thresholdHandle(4 * s.b + 1, 3 * s.b + 1);
            return rebrand(spec, composeHandles(plane, block));
        }
        QuorumSystemHandle
        operator()(MPathSpec const& s) const
        {
            return QuorumSystemHandle(
                spec, std::make_shared<MPathImpl>(
                          static_cast<std::uint32_t>(s.side),
                          static_cast<std::uint32_t>(ceilSqrt(2 * s.b + 1))));
        }
        QuorumSystemHandle
        operator()(ComposedSpec const& s) const
        {
            auto composed = composeHandles(build(*s.outer), build(*s.inner));
            return rebrand(spec, composed);
        }
    };
    return std::visit(Visitor{spec}, spec.value);
}

std::vector<std::array<std::int64_t, 3>>
fppPoints(std::int64_t q)
{
    if (q < 2 || !isPrime(q))
    {
        throw UnsupportedOrderError("unsupported projective plane order " +
                                    std::to_string(q) +
                                    " (only prime orders are supported)");
    }
    std::vector<std::array<std::int64_t, 3>> pts;
    pts.reserve(static_cast<std::size_t>(q * q + q + 1));
    for (std::int64_t a = 0; a < q; ++a)
    {
        for (std::int64_t b = 0; b < q; ++b)
        {
            pts.push_back({1, a, b});
        }
    }
    for (std::int64_t b = 0; b < q; ++b)
    {
        pts.push_back({0, 1, b});
    }
    pts.push_back({0, 0, 1});
    return pts;
}

ExplicitQuorumSystem
fppLines(std::int64_t q)
{
    auto pts = fppPoints(q);
    auto const n = pts.size();
    std::vector<ElementSet> lines;
    lines.reserve(n);
    for (auto const& coeff : pts)
    {
        ElementSet line(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            auto const& p = pts[i];
            auto dot = coeff[0] * p[0] + coeff[1] * p[1] + coeff[2] * p[2];
            if (dot % q == 0)
            {
                line.insert(static_cast<Element>(i));
            }
        }
        lines.push_back(std::move(line));
    }
    return ExplicitQuorumSystem(Universe(n), std::move(lines));
}

} // namespace maskquorum
