// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/analysis.hpp"
#include "maskquorum/combinatorics.hpp"
#include "maskquorum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace maskquorum
{

std::int64_t
smallestQuorum(ExplicitQuorumSystem const& sys)
{
    std::int64_t c = std::numeric_limits<std::int64_t>::max();
    for (auto const& q : sys.quorums())
    {
        c = std::min(c, static_cast<std::int64_t>(q.count()));
    }
    return c;
}

std::int64_t
smallestIntersection(ExplicitQuorumSystem const& sys)
{
    auto const& qs = sys.quorums();
    if (qs.size() == 1)
    {
        return static_cast<std::int64_t>(qs.front().count());
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < qs.size(); ++i)
    {
        for (std::size_t j = i + 1; j < qs.size(); ++j)
        {
            best = std::min(best, static_cast<std::int64_t>(
                                      qs[i].intersectionCount(qs[j])));
            if (best == 0)
            {
                return 0;
            }
        }
    }
    return best;
}

////////////////////////////////////////////////////////////////////////////////
// Minimum transversal (minimum hitting set) by branch and bound
////////////////////////////////////////////////////////////////////////////////

namespace
{

class HittingSetSearch
{
  public:
    explicit HittingSetSearch(ExplicitQuorumSystem const& sys)
        : mN(sys.universeSize())
        , mQuorums(sys.quorumCount())
        , mContaining(mN)
        , mHits(sys.quorumCount(), 0)
        , mAllowed(sys.quorumCount(), 0)
        , mDegree(mN, 0)
        , mForbidden(mN, 0)
        , mUnhit(sys.quorumCount())
    {
        for (std::size_t qi = 0; qi < sys.quorumCount(); ++qi)
        {
            auto members = sys.quorums()[qi].members();
            mAllowed[qi] = static_cast<std::int32_t>(members.size());
            for (auto e : members)
            {
                mContaining[e].push_back(static_cast<std::uint32_t>(qi));
                ++mDegree[e];
            }
            mQuorums[qi] = std::move(members);
        }
    }

    std::vector<Element>
    run()
    {
        mBest = greedy();
        // Any quorum of an intersecting system is itself a transversal.
        auto smallest = std::min_element(
            mQuorums.begin(), mQuorums.end(),
            [](auto const& a, auto const& b) { return a.size() < b.size(); });
        std::vector<Element> asQuorum(smallest->begin(), smallest->end());
        if (isTransversal(asQuorum) && asQuorum.size() < mBest.size())
        {
            mBest = asQuorum;
        }
        search();
        std::sort(mBest.begin(), mBest.end());
        return mBest;
    }

  private:
    bool
    isTransversal(std::vector<Element> const& set) const
    {
        std::vector<char> in(mN, 0);
        for (auto e : set)
        {
            in[e] = 1;
        }
        return std::all_of(mQuorums.begin(), mQuorums.end(), [&](auto const& q) {
            return std::any_of(q.begin(), q.end(),
                               [&](Element e) { return in[e] != 0; });
        });
    }

    std::vector<Element>
    greedy()
    {
        std::vector<Element> chosen;
        while (mUnhit > 0)
        {
            Element bestE = 0;
            std::int32_t bestDeg = -1;
            for (std::size_t e = 0; e < mN; ++e)
            {
                if (mDegree[e] > bestDeg)
                {
                    bestDeg = mDegree[e];
                    bestE = static_cast<Element>(e);
                }
            }
            choose(bestE);
            chosen.push_back(bestE);
        }
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
        {
            unchoose(*it);
        }
        return chosen;
    }

    void
    choose(Element e)
    {
        for (auto qi : mContaining[e])
        {
            if (mHits[qi]++ == 0)
            {
                --mUnhit;
                for (auto u : mQuorums[qi])
                {
                    --mDegree[u];
                }
            }
        }
        mCurrent.push_back(e);
    }

    void
    unchoose(Element e)
    {
        for (auto qi : mContaining[e])
        {
            if (--mHits[qi] == 0)
            {
                ++mUnhit;
                for (auto u : mQuorums[qi])
                {
                    ++mDegree[u];
                }
            }
        }
        mCurrent.pop_back();
    }

    void
    forbid(Element e)
    {
        mForbidden[e] = 1;
        for (auto qi : mContaining[e])
        {
            --mAllowed[qi];
        }
    }

    void
    allow(Element e)
    {
        mForbidden[e] = 0;
        for (auto qi : mContaining[e])
        {
            ++mAllowed[qi];
        }
    }

    // Each further element hits at most maxDegree of the unhit quorums.
    std::size_t
    lowerBound() const
    {
        std::int32_t maxDeg = 0;
        for (std::size_t e = 0; e < mN; ++e)
        {
            if (!mForbidden[e])
            {
                maxDeg = std::max(maxDeg, mDegree[e]);
            }
        }
        if (maxDeg == 0)
        {
            return std::numeric_limits<std::size_t>::max() / 2;
        }
        return (mUnhit + static_cast<std::size_t>(maxDeg) - 1) /
               static_cast<std::size_t>(maxDeg);
    }

    void
    search()
    {
        if (mUnhit == 0)
        {
            if (mCurrent.size() < mBest.size())
            {
                mBest = mCurrent;
            }
            return;
        }
        if (mCurrent.size() + lowerBound() >= mBest.size())
        {
            return;
        }
        // Branch on the unhit quorum with the fewest allowed elements.
        std::size_t pick = mQuorums.size();
        std::int32_t fewest = std::numeric_limits<std::int32_t>::max();
        for (std::size_t qi = 0; qi < mQuorums.size(); ++qi)
        {
            if (mHits[qi] == 0 && mAllowed[qi] < fewest)
            {
                fewest = mAllowed[qi];
                pick = qi;
                if (fewest == 0)
                {
                    return;
                }
            }
        }
        std::vector<Element> candidates;
        for (auto e : mQuorums[pick])
        {
            if (!mForbidden[e])
            {
                candidates.push_back(e);
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](Element a, Element b) {
                             return mDegree[a] > mDegree[b];
                         });
        std::vector<Element> forbidden;
        for (auto e : candidates)
        {
            choose(e);
            search();
            unchoose(e);
            forbid(e);
            forbidden.push_back(e);
        }
        for (auto e : forbidden)
        {
            allow(e);
        }
    }

    std::size_t mN;
    std::vector<std::vector<Element>> mQuorums;
    std::vector<std::vector<std::uint32_t>> mContaining;
    std::vector<std::int32_t> mHits;
    std::vector<std::int32_t> mAllowed;
    std::vector<std::int32_t> mDegree; // unhit quorums containing e
    std::vector<char> mForbidden;
    std::size_t mUnhit;
    std::vector<Element> mCurrent;
    std::vector<Element> mBest;
};

} // namespace

ElementSet
minimumTransversal(ExplicitQuorumSystem const& sys)
{
    if (sys.universeSize() > kTransversalMaxUniverse &&
        sys.quorumCount() > kTransversalMaxQuorums)
    {
        throw SizeError("minimum transversal search needs n <= " +
                        std::to_string(kTransversalMaxUniverse) +
                        " or at most " +
                        std::to_string(kTransversalMaxQuorums) + " quorums");
    }
    auto best = HittingSetSearch(sys).run();
    return ElementSet(sys.universeSize(), std::span<Element const>(best));
}

CombinatorialParams
combinatorialParams(ExplicitQuorumSystem const& sys)
{
    return {smallestQuorum(sys), smallestIntersection(sys),
            static_cast<std::int64_t>(minimumTransversal(sys).count())};
}

std::int64_t
maskingLevel(ExplicitQuorumSystem const& sys)
{
    auto p = combinatorialParams(sys);
    return maskingLevelFrom(p.aMin, p.iMin);
}

namespace
{

// A k-subset meeting every quorum, if one exists.
std::optional<ElementSet>
findBlockingSet(ExplicitQuorumSystem const& sys, std::int64_t k)
{
    std::optional<ElementSet> found;
    auto const n = static_cast<std::uint32_t>(sys.universeSize());
    if (k > static_cast<std::int64_t>(n))
    {
        return found;
    }
    forEachCombination(n, static_cast<std::uint32_t>(k),
                       [&](std::span<std::uint32_t const> idx) {
                           ElementSet s(n, idx);
                           bool hitsAll = std::all_of(
                               sys.quorums().begin(), sys.quorums().end(),
                               [&](ElementSet const& q) {
                                   return q.intersects(s);
                               });
                           if (hitsAll)
                           {
                               found = std::move(s);
                               return false;
                           }
                           return true;
                       });
    return found;
}

} // namespace

std::int64_t
resilienceExhaustive(ExplicitQuorumSystem const& sys)
{
    if (sys.universeSize() > kDefinitionalMaxUniverse)
    {
        throw SizeError("exhaustive resilience needs n <= " +
                        std::to_string(kDefinitionalMaxUniverse));
    }
    auto const n = static_cast<std::int64_t>(sys.universeSize());
    for (std::int64_t k = 0; k <= n; ++k)
    {
        if (findBlockingSet(sys, k))
        {
            return k - 1;
        }
    }
    return n;
}

MaskingCheck
checkMasking(ExplicitQuorumSystem const& sys, std::int64_t b)
{
    if (b < 0)
    {
        throw ParameterError("masking level b must be non-negative");
    }
    MaskingCheck result;
    auto const need = static_cast<std::size_t>(2 * b + 1);
    auto const& qs = sys.quorums();
    for (std::size_t i = 0; i < qs.size() && !result.violatingPair; ++i)
    {
        for (std::size_t j = i; j < qs.size(); ++j)
        {
            if (qs[i].intersectionCount(qs[j]) < need)
            {
                result.violatingPair = std::make_pair(i, j);
                break;
            }
        }
    }
    if (sys.universeSize() <= kDefinitionalMaxUniverse)
    {
        result.method = MaskingCheck::ResilienceMethod::Exhaustive;
        // Every b-subset must miss some quorum; smaller subsets then do too.
        result.blockingSet = findBlockingSet(sys, b);
    }
    else
    {
        result.method = MaskingCheck::ResilienceMethod::Transversal;
        auto t = minimumTransversal(sys);
        if (static_cast<std::int64_t>(t.count()) <= b)
        {
            result.blockingSet = std::move(t);
        }
    }
    result.masking = !result.violatingPair && !result.blockingSet;
    return result;
}

std::vector<std::int64_t>
elementDegrees(ExplicitQuorumSystem const& sys)
{
    std::vector<std::int64_t> deg(sys.universeSize(), 0);
    for (auto const& q : sys.quorums())
    {
        for (auto e : q.members())
        {
            ++deg[e];
        }
    }
    return deg;
}

Fairness
checkFairness(ExplicitQuorumSystem const& sys)
{
    Fairness out;
    auto const& qs = sys.quorums();
    auto s = static_cast<std::int64_t>(qs.front().count());
    bool uniformSize = std::all_of(qs.begin(), qs.end(), [&](auto const& q) {
        return static_cast<std::int64_t>(q.count()) == s;
    });
    auto deg = elementDegrees(sys);
    bool uniformDegree = std::all_of(deg.begin(), deg.end(),
                                     [&](std::int64_t d) { return d == deg[0]; });
    out.fair = uniformSize && uniformDegree;
    if (out.fair)
    {
        out.quorumSize = s;
        out.degree = deg[0];
    }
    return out;
}

InducedLoad
inducedLoad(ExplicitQuorumSystem const& sys, AccessStrategy const& strategy)
{
    if (strategy.size() != sys.quorumCount())
    {
        throw ParameterError("strategy has " + std::to_string(strategy.size()) +
                             " weights for " +
                             std::to_string(sys.quorumCount()) + " quorums");
    }
    InducedLoad out;
    out.perElement.assign(sys.universeSize(), 0.0);
    for (std::size_t qi = 0; qi < sys.quorumCount(); ++qi)
    {
        auto w = strategy.weights()[qi];
        if (w == 0.0)
        {
            continue;
        }
        for (auto e : sys.quorums()[qi].members())
        {
            out.perElement[e] += w;
        }
    }
    out.max = *std::max_element(out.perElement.begin(), out.perElement.end());
    return out;
}

////////////////////////////////////////////////////////////////////////////////
// Load LP
////////////////////////////////////////////////////////////////////////////////

namespace
{

// Dense tableau simplex for max 1^T x s.t. A x <= 1, x >= 0 with A a 0/1
// matrix. The slack basis is feasible, so no phase one is needed. Dantzig
// pricing with lowest-index ties; after a run of degenerate pivots it
// switches to Bland's rule, which cannot cycle.
class PackingSimplex
{
  public:
    PackingSimplex(std::size_t rows, std::size_t cols)
        : mRows(rows)
        , mCols(cols)
        , mWidth(cols + rows + 1)
        , mTab((rows + 1) * mWidth, 0.0)
        , mBasis(rows)
    {
        for (std::size_t i = 0; i < rows; ++i)
        {
            at(i, cols + i) = 1.0;
            at(i, mWidth - 1) = 1.0;
            mBasis[i] = cols + i;
        }
        for (std::size_t j = 0; j < cols; ++j)
        {
            at(rows, j) = -1.0;
        }
    }

    double&
    at(std::size_t r, std::size_t c)
    {
        return mTab[r * mWidth + c];
    }

    void
    setCoefficient(std::size_t row, std::size_t col)
    {
        at(row, col) = 1.0;
    }

    std::vector<double>
    solve()
    {
        constexpr double eps = 1e-11;
        constexpr std::size_t kDegenerateRun = 50;
        std::size_t degenerate = 0;
        std::size_t const maxIterations = 50 * (mRows + mCols) + 1000;
        for (std::size_t iter = 0; iter < maxIterations; ++iter)
        {
            bool bland = degenerate >= kDegenerateRun;
            std::size_t enter = mWidth;
            double best = -eps;
            for (std::size_t j = 0; j + 1 < mWidth; ++j)
            {
                double rc = at(mRows, j);
                if (rc < best)
                {
                    enter = j;
                    if (bland)
                    {
                        break;
                    }
                    best = rc;
                }
            }
            if (enter == mWidth)
            {
                return primal();
            }
            std::size_t leave = mRows;
            double ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < mRows; ++i)
            {
                double a = at(i, enter);
                if (a > eps)
                {
                    double r = at(i, mWidth - 1) / a;
                    if (r < ratio - eps ||
                        (r <= ratio + eps && leave < mRows &&
                         mBasis[i] < mBasis[leave]))
                    {
                        ratio = std::min(ratio, r);
                        leave = i;
                    }
                }
            }
            if (leave == mRows)
            {
                throw NumericalError("load LP is unbounded");
            }
            degenerate = ratio <= eps ? degenerate + 1 : 0;
            pivot(leave, enter);
        }
        throw NumericalError("load LP did not converge");
    }

  private:
    void
    pivot(std::size_t row, std::size_t col)
    {
        double const inv = 1.0 / at(row, col);
        for (std::size_t j = 0; j < mWidth; ++j)
        {
            at(row, j) *= inv;
        }
        at(row, col) = 1.0;
        for (std::size_t i = 0; i <= mRows; ++i)
        {
            if (i == row)
            {
                continue;
            }
            double const factor = at(i, col);
            if (factor == 0.0)
            {
                continue;
            }
            double* dst = &mTab[i * mWidth];
            double const* src = &mTab[row * mWidth];
            for (std::size_t j = 0; j < mWidth; ++j)
            {
                dst[j] -= factor * src[j];
            }
            dst[col] = 0.0;
        }
        mBasis[row] = col;
    }

    std::vector<double>
    primal()
    {
        std::vector<double> x(mCols, 0.0);
        for (std::size_t i = 0; i < mRows; ++i)
        {
            if (mBasis[i] < mCols)
            {
                x[mBasis[i]] = std::max(0.0, at(i, mWidth - 1));
            }
        }
        return x;
    }

    std::size_t mRows;
    std::size_t mCols;
    std::size_t mWidth;
    std::vector<double> mTab;
    std::vector<std::size_t> mBasis;
};

} // namespace

LoadSolution
loadLp(ExplicitQuorumSystem const& sys)
{
    if (sys.quorumCount() == 0)
    {
        throw ParameterError("load of an empty quorum system");
    }
    if (sys.quorumCount() > kLoadLpMaxQuorums ||
        sys.universeSize() > kLoadLpMaxUniverse)
    {
        throw SizeError("load LP supports at most " +
                        std::to_string(kLoadLpMaxQuorums) + " quorums over " +
                        std::to_string(kLoadLpMaxUniverse) + " elements");
    }
    PackingSimplex lp(sys.universeSize(), sys.quorumCount());
    for (std::size_t qi = 0; qi < sys.quorumCount(); ++qi)
    {
        for (auto e : sys.quorums()[qi].members())
        {
            lp.setCoefficient(e, qi);
        }
    }
    auto x = lp.solve();
    double total = std::accumulate(x.begin(), x.end(), 0.0);
    if (!(total > 0.0))
    {
        throw NumericalError("load LP produced an empty packing");
    }
    for (auto& v : x)
    {
        v /= total;
    }
    // Renormalise against rounding in the division.
    double sum = std::accumulate(x.begin(), x.end(), 0.0);
    for (auto& v : x)
    {
        v /= sum;
    }
    AccessStrategy strategy(std::move(x));
    auto induced = inducedLoad(sys, strategy);
    return LoadSolution{induced.max, std::move(strategy)};
}

double
loadFair(ExplicitQuorumSystem const& sys)
{
    auto fairness = checkFairness(sys);
    if (!fairness.fair)
    {
        throw ApplicabilityError("c/n load formula needs a fair system");
    }
    return static_cast<double>(fairness.quorumSize) /
           static_cast<double>(sys.universeSize());
}

double
loadFair(SystemParams const& params)
{
    if (params.n <= 0)
    {
        throw ParameterError("universe size must be positive");
    }
    return static_cast<double>(params.c) / static_cast<double>(params.n);
}

LoadLowerBounds
loadLowerBounds(std::int64_t n, std::int64_t b, std::int64_t c)
{
    if (c < 1 || n < c || b < 0)
    {
        throw ParameterError("load bounds need n >= c >= 1 and b >= 0");
    }
    auto const nd = static_cast<double>(n);
    auto const cd = static_cast<double>(c);
    auto const mask = static_cast<double>(2 * b + 1);
    return {std::max(mask / cd, cd / nd), std::sqrt(mask / nd)};
}

} // namespace maskquorum
