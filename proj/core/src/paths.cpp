// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/paths.hpp"
#include "maskquorum/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace maskquorum
{

TriGrid::TriGrid(std::size_t side) : mSide(side), mAdjacency(side * side)
{
    if (side == 0)
    {
        throw ParameterError("grid side must be positive");
    }
    auto link = [&](Element a, Element b) {
        mAdjacency[a].push_back(b);
        mAdjacency[b].push_back(a);
    };
    for (std::size_t i = 1; i <= side; ++i)
    {
        for (std::size_t j = 1; j <= side; ++j)
        {
            auto v = index(i, j);
            if (j + 1 <= side)
            {
                link(v, index(i, j + 1));
            }
            if (i + 1 <= side)
            {
                link(v, index(i + 1, j));
            }
            if (i >= 2 && j + 1 <= side)
            {
                link(v, index(i - 1, j + 1));
            }
        }
    }
    for (auto& adj : mAdjacency)
    {
        std::sort(adj.begin(), adj.end());
    }
}

Element
TriGrid::index(std::size_t row, std::size_t col) const
{
    if (row < 1 || row > mSide || col < 1 || col > mSide)
    {
        throw ParameterError("grid coordinate out of range");
    }
    return static_cast<Element>((row - 1) * mSide + (col - 1));
}

bool
TriGrid::adjacent(Element u, Element v) const
{
    auto const& adj = mAdjacency.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Element>
TriGrid::sourceSide(Orientation o) const
{
    std::vector<Element> out;
    for (std::size_t k = 1; k <= mSide; ++k)
    {
        out.push_back(o == Orientation::LeftRight ? index(k, 1) : index(1, k));
    }
    return out;
}

std::vector<Element>
TriGrid::sinkSide(Orientation o) const
{
    std::vector<Element> out;
    for (std::size_t k = 1; k <= mSide; ++k)
    {
        out.push_back(o == Orientation::LeftRight ? index(k, mSide)
                                                  : index(mSide, k));
    }
    return out;
}

namespace
{

void
checkUniverse(TriGrid const& grid, ElementSet const& alive)
{
    if (alive.universeSize() != grid.vertexCount())
    {
        throw ParameterError("alive set has universe " +
                             std::to_string(alive.universeSize()) +
                             ", grid has " +
                             std::to_string(grid.vertexCount()) + " vertices");
    }
}

bool
onSourceSide(TriGrid const& grid, Element v, Orientation o)
{
    return o == Orientation::LeftRight ? v % grid.side() == 0
                                       : v / grid.side() == 0;
}

bool
onSinkSide(TriGrid const& grid, Element v, Orientation o)
{
    auto last = grid.side() - 1;
    return o == Orientation::LeftRight ? v % grid.side() == last
                                       : v / grid.side() == last;
}

struct Edge
{
    std::uint32_t to;
    std::uint32_t rev;
    std::int32_t cap;
};

class FlowNetwork
{
  public:
    explicit FlowNetwork(std::size_t nodes) : mAdj(nodes)
    {
    }

    void
    addEdge(std::uint32_t from, std::uint32_t to)
    {
        mAdj[from].push_back(
            {to, static_cast<std::uint32_t>(mAdj[to].size()), 1});
        mAdj[to].push_back(
            {from, static_cast<std::uint32_t>(mAdj[from].size() - 1), 0});
    }

    // Edmonds-Karp; every augmenting path carries one unit.
    std::size_t
    maxFlow(std::uint32_t s, std::uint32_t t, std::size_t limit)
    {
        std::size_t flow = 0;
        std::vector<std::int64_t> parentNode(mAdj.size());
        std::vector<std::uint32_t> parentEdge(mAdj.size());
        std::vector<std::uint32_t> queue;
        queue.reserve(mAdj.size());
        while (flow < limit)
        {
            std::fill(parentNode.begin(), parentNode.end(), -1);
            parentNode[s] = s;
            queue.clear();
            queue.push_back(s);
            for (std::size_t head = 0; head < queue.size() && parentNode[t] < 0;
                 ++head)
            {
                auto u = queue[head];
                for (std::uint32_t k = 0; k < mAdj[u].size(); ++k)
                {
                    auto const& e = mAdj[u][k];
                    if (e.cap > 0 && parentNode[e.to] < 0)
                    {
                        parentNode[e.to] = u;
                        parentEdge[e.to] = k;
                        queue.push_back(e.to);
                    }
                }
            }
            if (parentNode[t] < 0)
            {
                break;
            }
            for (auto v = t; v != s;)
            {
                auto u = static_cast<std::uint32_t>(parentNode[v]);
                auto& e = mAdj[u][parentEdge[v]];
                e.cap -= 1;
                mAdj[v][e.rev].cap += 1;
                v = u;
            }
            ++flow;
        }
        return flow;
    }

  private:
    std::vector<std::vector<Edge>> mAdj;
};

} // namespace

std::size_t
maxDisjointPaths(TriGrid const& grid, ElementSet const& alive, Orientation o,
                 std::size_t limit)
{
    checkUniverse(grid, alive);
    auto const n = static_cast<std::uint32_t>(grid.vertexCount());
    auto const source = 2 * n;
    auto const sink = 2 * n + 1;
    FlowNetwork net(2 * n + 2);
    for (std::uint32_t v = 0; v < n; ++v)
    {
        if (!alive.contains(v))
        {
            continue;
        }
        net.addEdge(2 * v, 2 * v + 1);
        if (onSourceSide(grid, v, o))
        {
            net.addEdge(source, 2 * v);
        }
        if (onSinkSide(grid, v, o))
        {
            net.addEdge(2 * v + 1, sink);
        }
        for (auto w : grid.neighbors(v))
        {
            if (alive.contains(w))
            {
                net.addEdge(2 * v + 1, 2 * w);
            }
        }
    }
    return net.maxFlow(source, sink, limit);
}

bool
openCrossingExists(TriGrid const& grid, ElementSet const& alive, Orientation o)
{
    checkUniverse(grid, alive);
    auto const n = grid.vertexCount();
    std::vector<char> seen(n, 0);
    std::vector<Element> stack;
    stack.reserve(n);
    for (auto v : grid.sourceSide(o))
    {
        if (alive.contains(v))
        {
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty())
    {
        auto v = stack.back();
        stack.pop_back();
        if (onSinkSide(grid, v, o))
        {
            return true;
        }
        for (auto w : grid.neighbors(v))
        {
            if (!seen[w] && alive.contains(w))
            {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

bool
mpathLive(TriGrid const& grid, std::size_t r, ElementSet const& alive)
{
    if (r < 1 || r > grid.side())
    {
        throw ParameterError("path count r must satisfy 1 <= r <= side");
    }
    for (auto o : {Orientation::LeftRight, Orientation::TopBottom})
    {
        if (!openCrossingExists(grid, alive, o))
        {
            return false;
        }
        if (r > 1 && maxDisjointPaths(grid, alive, o, r) < r)
        {
            return false;
        }
    }
    return true;
}

bool
mpathLive(std::size_t side, std::size_t r, ElementSet const& alive)
{
    return mpathLive(TriGrid(side), r, alive);
}

} // namespace maskquorum
