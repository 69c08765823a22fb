// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/errors.hpp"
#include "maskquorum/paths.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace maskquorum;

namespace
{

ElementSet
aliveFrom(std::size_t side, oracle::Mask mask)
{
    return ElementSet::fromMask(side * side, mask);
}

} // namespace

TEST_CASE("triangulated grid adjacency")
{
    for (std::size_t side = 1; side <= 6; ++side)
    {
        TriGrid grid(side);
        oracle::Grid ref{static_cast<int>(side)};
        auto n = grid.vertexCount();
        for (Element u = 0; u < n; ++u)
        {
            CHECK(grid.neighbors(u).size() <= 6);
            for (Element v = 0; v < n; ++v)
            {
                bool a = grid.adjacent(u, v);
                REQUIRE(a == grid.adjacent(v, u));
                REQUIRE(a == ref.adjacent(static_cast<int>(u), static_cast<int>(v)));
            }
        }
    }
    TriGrid g3(3);
    CHECK(g3.index(1, 1) == 0);
    CHECK(g3.index(3, 3) == 8);
    CHECK(g3.neighbors(g3.index(1, 1)).size() == 2);
    CHECK(g3.neighbors(g3.index(2, 2)).size() == 6);
    // (2,1) ~ (1,2) by the anti-diagonal rule, (1,1) !~ (2,2).
    CHECK(g3.adjacent(g3.index(2, 1), g3.index(1, 2)));
    CHECK_FALSE(g3.adjacent(g3.index(1, 1), g3.index(2, 2)));
    CHECK_THROWS_AS(g3.index(0, 1), ParameterError);
    CHECK_THROWS_AS(g3.index(1, 4), ParameterError);
}

TEST_CASE("disjoint path examples")
{
    TriGrid g(3);
    auto full = ElementSet::full(9);
    CHECK(maxDisjointPaths(g, full, Orientation::LeftRight) == 3);
    CHECK(maxDisjointPaths(g, full, Orientation::TopBottom) == 3);

    auto noMiddleColumn = full;
    for (std::size_t row = 1; row <= 3; ++row)
    {
        noMiddleColumn.erase(g.index(row, 2));
    }
    CHECK(maxDisjointPaths(g, noMiddleColumn, Orientation::LeftRight) == 0);

    auto noCentre = full;
    noCentre.erase(g.index(2, 2));
    CHECK(maxDisjointPaths(g, noCentre, Orientation::LeftRight) == 2);

    CHECK(maxDisjointPaths(g, full, Orientation::LeftRight, 2) == 2);
    CHECK_THROWS_AS(maxDisjointPaths(g, ElementSet::full(10), Orientation::LeftRight),
                    ParameterError);
}

TEST_CASE("flow matches exhaustive path packing at side <= 3")
{
    for (int side = 1; side <= 3; ++side)
    {
        TriGrid grid(static_cast<std::size_t>(side));
        oracle::PathPacking lr(side, true);
        oracle::PathPacking tb(side, false);
        oracle::Grid ref{side};
        for (oracle::Mask m = 0; m < (oracle::Mask{1} << (side * side)); ++m)
        {
            auto alive = aliveFrom(side, m);
            auto flowLr = maxDisjointPaths(grid, alive, Orientation::LeftRight);
            auto flowTb = maxDisjointPaths(grid, alive, Orientation::TopBottom);
            REQUIRE(flowLr == static_cast<std::size_t>(lr(m)));
            REQUIRE(flowTb == static_cast<std::size_t>(tb(m)));
            REQUIRE(openCrossingExists(grid, alive, Orientation::LeftRight) == (flowLr > 0));
            REQUIRE(openCrossingExists(grid, alive, Orientation::TopBottom) == (flowTb > 0));
            if (side == 3)
            {
                // Menger: disjoint paths equal the smallest separating cut.
                REQUIRE(flowLr == static_cast<std::size_t>(oracle::minVertexCut(ref, m, true)));
            }
        }
    }
}

TEST_CASE("flow matches exhaustive path packing on random side-4 grids")
{
    TriGrid grid(4);
    oracle::PathPacking lr(4, true);
    oracle::PathPacking tb(4, false);
    for (std::uint64_t t = 0; t < 1000; ++t)
    {
        Rng rng(53, t);
        auto alive = sampleCrashSet(16, rng.uniform01(), rng.forTrial(54, t));
        auto m = oracle::toMask(alive);
        REQUIRE(maxDisjointPaths(grid, alive, Orientation::LeftRight) ==
                static_cast<std::size_t>(lr(m)));
        REQUIRE(maxDisjointPaths(grid, alive, Orientation::TopBottom) ==
                static_cast<std::size_t>(tb(m)));
    }
}

TEST_CASE("path counts are monotone and bounded by the side")
{
    TriGrid grid(6);
    for (std::uint64_t t = 0; t < 500; ++t)
    {
        auto alive = sampleCrashSet(36, 0.7, Rng(59, t));
        auto count = maxDisjointPaths(grid, alive, Orientation::LeftRight);
        CHECK(count <= 6);
        auto more = alive;
        more.insert(static_cast<Element>(Rng(60, t).uniformBelow(36)));
        CHECK(maxDisjointPaths(grid, more, Orientation::LeftRight) >= count);
        auto fewer = alive;
        fewer.erase(static_cast<Element>(Rng(61, t).uniformBelow(36)));
        CHECK(maxDisjointPaths(grid, fewer, Orientation::LeftRight) <= count);
    }
}

TEST_CASE("every left-right path meets every top-bottom path")
{
    // Literal check over all alive sets for side <= 3.
    for (int side = 1; side <= 3; ++side)
    {
        oracle::Grid ref{side};
        for (oracle::Mask m = 0; m < (oracle::Mask{1} << (side * side)); ++m)
        {
            for (auto tbPath : oracle::crossingPaths(ref, m, false))
            {
                REQUIRE_FALSE(oracle::hasCrossing(ref, m & ~tbPath, true));
            }
        }
    }
    // At side 4 the statement for every alive set reduces to the full grid:
    // removing a top-bottom path from a subset leaves a subset of what
    // removing it from the full grid leaves.
    oracle::Grid ref{4};
    oracle::Mask const full = (oracle::Mask{1} << 16) - 1;
    auto tbPaths = oracle::crossingPaths(ref, full, false);
    CHECK(tbPaths.size() > 100);
    for (auto p : tbPaths)
    {
        REQUIRE_FALSE(oracle::hasCrossing(ref, full & ~p, true));
    }
}

TEST_CASE("M-Path live examples")
{
    TriGrid g(5);
    CHECK(mpathLive(g, 5, ElementSet::full(25)));
    CHECK(mpathLive(5, 1, ElementSet::full(25)));

    ElementSet rowsAndCols(25);
    for (std::size_t k = 1; k <= 5; ++k)
    {
        for (std::size_t line : {1, 3})
        {
            rowsAndCols.insert(g.index(line, k));
            rowsAndCols.insert(g.index(k, line));
        }
    }
    CHECK(mpathLive(g, 2, rowsAndCols));

    ElementSet cross(25);
    for (std::size_t k = 1; k <= 5; ++k)
    {
        cross.insert(g.index(1, k));
        cross.insert(g.index(k, 1));
    }
    CHECK_FALSE(mpathLive(g, 2, cross));
    CHECK(mpathLive(g, 1, cross));

    CHECK_THROWS_AS(mpathLive(g, 0, cross), ParameterError);
    CHECK_THROWS_AS(mpathLive(g, 6, cross), ParameterError);
    CHECK_THROWS_AS(mpathLive(g, 1, ElementSet(24)), ParameterError);
}
