// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/quorum_system.hpp"
#include "maskquorum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace maskquorum
{

Universe::Universe(std::size_t n) : mSize(n)
{
    if (n == 0)
    {
        throw ParameterError("universe must contain at least one server");
    }
}

ExplicitQuorumSystem::ExplicitQuorumSystem(Universe universe,
                                           std::vector<ElementSet> quorums)
    : mUniverse(universe), mQuorums(std::move(quorums))
{
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    for (std::size_t i = 0; i < mQuorums.size(); ++i)
    {
        auto const& q = mQuorums[i];
        if (q.universeSize() != mUniverse.size())
        {
            throw ParameterError("quorum " + std::to_string(i) +
                                 " is over a universe of size " +
                                 std::to_string(q.universeSize()) +
                                 ", expected " +
                                 std::to_string(mUniverse.size()));
        }
        if (q.empty())
        {
            throw ParameterError("quorum " + std::to_string(i) + " is empty");
        }
        auto [it, inserted] = seen.emplace(q, i);
        if (!inserted)
        {
            throw ParameterError("quorums " + std::to_string(it->second) +
                                 " and " + std::to_string(i) +
                                 " are identical");
        }
    }
}

bool
ExplicitQuorumSystem::live(ElementSet const& alive) const
{
    if (alive.universeSize() != mUniverse.size())
    {
        throw ParameterError("alive set is over the wrong universe");
    }
    return std::any_of(mQuorums.begin(), mQuorums.end(),
                       [&](ElementSet const& q) { return q.isSubsetOf(alive); });
}

ValidationReport
validateExplicit(ExplicitQuorumSystem const& sys)
{
    ValidationReport report;
    auto const& qs = sys.quorums();
    for (std::size_t i = 0; i < qs.size(); ++i)
    {
        for (std::size_t j = i + 1; j < qs.size(); ++j)
        {
            if (qs[i] == qs[j])
            {
                report.violations.push_back(
                    {Violation::Kind::DuplicatePair, i, j});
            }
            else if (!qs[i].intersects(qs[j]))
            {
                report.violations.push_back(
                    {Violation::Kind::DisjointPair, i, j});
            }
        }
    }
    return report;
}

AccessStrategy::AccessStrategy(std::vector<double> weights)
    : mWeights(std::move(weights))
{
    if (mWeights.empty())
    {
        throw ParameterError("access strategy over an empty quorum list");
    }
    double sum = 0.0;
    for (auto w : mWeights)
    {
        if (!(w >= 0.0) || !std::isfinite(w))
        {
            throw ParameterError("access strategy weights must be "
                                 "non-negative and finite");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
    {
        throw ParameterError("access strategy weights sum to " +
                             std::to_string(sum) + ", not 1");
    }
}

AccessStrategy
AccessStrategy::uniform(std::size_t quorumCount)
{
    if (quorumCount == 0)
    {
        throw ParameterError("access strategy over an empty quorum list");
    }
    return AccessStrategy(std::vector<double>(
        quorumCount, 1.0 / static_cast<double>(quorumCount)));
}

AccessStrategy
AccessStrategy::pointMass(std::size_t quorumCount, std::size_t index)
{
    if (index >= quorumCount)
    {
        throw ParameterError("point mass index out of range");
    }
    std::vector<double> w(quorumCount, 0.0);
    w[index] = 1.0;
    return AccessStrategy(std::move(w));
}

std::int64_t
maskingLevelFrom(std::int64_t aMin, std::int64_t iMin)
{
    // floor division, so a non-positive iMin gives a negative level
    std::int64_t half = iMin - 1 >= 0 ? (iMin - 1) / 2 : -((2 - iMin) / 2);
    return std::min(aMin - 1, half);
}

SystemParams
SystemParams::derive(std::int64_t n, std::int64_t c, std::int64_t iMin,
                     std::int64_t aMin, double load)
{
    SystemParams p;
    p.n = n;
    p.c = c;
    p.iMin = iMin;
    p.aMin = aMin;
    p.b = maskingLevelFrom(aMin, iMin);
    p.f = aMin - 1;
    p.load = load;
    return p;
}

ElementSet
sampleCrashSet(std::size_t n, double p, Rng rng)
{
    if (!(p >= 0.0 && p <= 1.0))
    {
        throw ParameterError("crash probability must lie in [0, 1]");
    }
    ElementSet crashed(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (rng.bernoulli(p))
        {
            crashed.insert(static_cast<Element>(i));
        }
    }
    return crashed;
}

} // namespace maskquorum
