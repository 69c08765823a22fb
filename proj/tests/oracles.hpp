// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Brute-force reference implementations. They work on plain 64-bit masks and
// share no code with the library beyond ElementSet conversion.

#pragma once

#include "maskquorum/element_set.hpp"
#include "maskquorum/quorum_system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>
#include <vector>

namespace oracle
{

using Mask = std::uint64_t;

struct MaskSystem
{
    int n{0};
    std::vector<Mask> quorums;
};

inline Mask
toMask(maskquorum::ElementSet const& s)
{
    Mask m = 0;
    for (auto e : s.members())
    {
        m |= Mask{1} << e;
    }
    return m;
}

inline MaskSystem
toMasks(maskquorum::ExplicitQuorumSystem const& sys)
{
    MaskSystem out;
    out.n = static_cast<int>(sys.universeSize());
    for (auto const& q : sys.quorums())
    {
        out.quorums.push_back(toMask(q));
    }
    return out;
}

inline bool
hitsAll(MaskSystem const& s, Mask t)
{
    return std::all_of(s.quorums.begin(), s.quorums.end(),
                       [&](Mask q) { return (q & t) != 0; });
}

// Calls visit(mask) for every k-subset of {0..n-1}; stops when it returns true.
inline bool
anySubset(int n, int k, std::function<bool(Mask)> const& visit)
{
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
    {
        idx[i] = i;
    }
    while (true)
    {
        Mask m = 0;
        for (int i : idx)
        {
            m |= Mask{1} << i;
        }
        if (visit(m))
        {
            return true;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
        {
            --i;
        }
        if (i < 0)
        {
            return false;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
        {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct Params
{
    long c{0};
    long iMin{0};
    long aMin{0};
};

inline long
minTransversalBySubsets(MaskSystem const& s)
{
    for (int k = 1; k <= s.n; ++k)
    {
        if (anySubset(s.n, k, [&](Mask t) { return hitsAll(s, t); }))
        {
            return k;
        }
    }
    return s.n + 1;
}

inline Params
params(MaskSystem const& s)
{
    Params p;
    p.c = std::numeric_limits<long>::max();
    for (auto q : s.quorums)
    {
        p.c = std::min<long>(p.c, std::popcount(q));
    }
    p.iMin = s.quorums.size() == 1 ? p.c : std::numeric_limits<long>::max();
    for (std::size_t i = 0; i < s.quorums.size(); ++i)
    {
        for (std::size_t j = i + 1; j < s.quorums.size(); ++j)
        {
            p.iMin = std::min<long>(p.iMin, std::popcount(s.quorums[i] & s.quorums[j]));
        }
    }
    p.aMin = minTransversalBySubsets(s);
    return p;
}

// Largest k such that every k-set of crashes leaves some quorum intact.
inline long
resilience(MaskSystem const& s)
{
    long f = -1;
    for (int k = 0; k <= s.n; ++k)
    {
        if (anySubset(s.n, k, [&](Mask t) { return hitsAll(s, t); }))
        {
            break;
        }
        f = k;
    }
    return f;
}

// Definition of b-masking read literally: every pairwise intersection
// (a quorum with itself included) has 2b+1 elements and no b crashes hit
// every quorum.
inline bool
isMasking(MaskSystem const& s, long b)
{
    for (std::size_t i = 0; i < s.quorums.size(); ++i)
    {
        for (std::size_t j = i; j < s.quorums.size(); ++j)
        {
            if (std::popcount(s.quorums[i] & s.quorums[j]) < 2 * b + 1)
            {
                return false;
            }
        }
    }
    return resilience(s) >= b;
}

// Sum over crash sets D hitting every quorum of p^|D| (1-p)^(n-|D|).
inline double
crashProb(MaskSystem const& s, double p)
{
    double total = 0.0;
    Mask const end = Mask{1} << s.n;
    for (Mask d = 0; d < end; ++d)
    {
        if (hitsAll(s, d))
        {
            int k = std::popcount(d);
            total += std::pow(p, k) * std::pow(1.0 - p, s.n - k);
        }
    }
    return total;
}

// Minimises the max element load over a grid of strategies with step 1/steps.
// Only for a handful of quorums.
inline double
gridLoad(MaskSystem const& s, int steps)
{
    std::size_t const m = s.quorums.size();
    std::vector<int> w(m, 0);
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == m)
        {
            w[i] = left;
            double worst = 0.0;
            for (int u = 0; u < s.n; ++u)
            {
                int load = 0;
                for (std::size_t q = 0; q < m; ++q)
                {
                    if (s.quorums[q] >> u & 1)
                    {
                        load += w[q];
                    }
                }
                worst = std::max(worst, static_cast<double>(load) / steps);
            }
            best = std::min(best, worst);
            return;
        }
        for (int x = 0; x <= left; ++x)
        {
            w[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, steps);
    return best;
}

////////////////////////////////////////////////////////////////////////////////
// Triangulated grid, re-derived from the adjacency rules with 0-based (r, c)
// and vertex r*side + c.
////////////////////////////////////////////////////////////////////////////////

struct Grid
{
    int side;

    int
    vertex(int r, int c) const
    {
        return r * side + c;
    }

    bool
    adjacent(int u, int v) const
    {
        int r1 = u / side, c1 = u % side, r2 = v / side, c2 = v % side;
        auto rule = [](int ra, int ca, int rb, int cb) {
            return (ra == rb && cb == ca + 1) || (ca == cb && rb == ra + 1) ||
                   (rb == ra - 1 && cb == ca + 1);
        };
        return rule(r1, c1, r2, c2) || rule(r2, c2, r1, c1);
    }

    // Left-right: start column 0, end column side-1. Top-bottom: rows.
    bool
    onStart(int v, bool leftRight) const
    {
        return (leftRight ? v % side : v / side) == 0;
    }

    bool
    onEnd(int v, bool leftRight) const
    {
        return (leftRight ? v % side : v / side) == side - 1;
    }
};

// Vertex sets of simple paths inside `avail` from `start` that leave the
// start side immediately and stop on first reaching the end side. Every
// open crossing contains one of these.
inline void
crossingPathsFrom(Grid const& g, Mask avail, int start, bool leftRight,
                  std::vector<Mask>& out)
{
    std::function<void(int, Mask)> dfs = [&](int v, Mask used) {
        if (g.onEnd(v, leftRight))
        {
            out.push_back(used);
            return;
        }
        for (int w = 0; w < g.side * g.side; ++w)
        {
            if ((avail >> w & 1) && !(used >> w & 1) && g.adjacent(v, w) &&
                !g.onStart(w, leftRight))
            {
                dfs(w, used | Mask{1} << w);
            }
        }
    };
    if (avail >> start & 1)
    {
        dfs(start, Mask{1} << start);
    }
}

inline std::vector<Mask>
crossingPaths(Grid const& g, Mask avail, bool leftRight)
{
    std::vector<Mask> out;
    for (int v = 0; v < g.side * g.side; ++v)
    {
        if (g.onStart(v, leftRight))
        {
            crossingPathsFrom(g, avail, v, leftRight, out);
        }
    }
    return out;
}

inline bool
hasCrossing(Grid const& g, Mask avail, bool leftRight)
{
    std::vector<int> stack;
    Mask seen = 0;
    for (int v = 0; v < g.side * g.side; ++v)
    {
        if ((avail >> v & 1) && g.onStart(v, leftRight))
        {
            stack.push_back(v);
            seen |= Mask{1} << v;
        }
    }
    while (!stack.empty())
    {
        int v = stack.back();
        stack.pop_back();
        if (g.onEnd(v, leftRight))
        {
            return true;
        }
        for (int w = 0; w < g.side * g.side; ++w)
        {
            if ((avail >> w & 1) && !(seen >> w & 1) && g.adjacent(v, w))
            {
                seen |= Mask{1} << w;
                stack.push_back(w);
            }
        }
    }
    return false;
}

// Exhaustive path packing: the lowest open start vertex is either unused or
// begins one path of the packing.
class PathPacking
{
  public:
    PathPacking(int side, bool leftRight) : mGrid{side}, mLeftRight(leftRight)
    {
    }

    int
    operator()(Mask avail)
    {
        auto it = mMemo.find(avail);
        if (it != mMemo.end())
        {
            return it->second;
        }
        int start = -1;
        for (int v = 0; v < mGrid.side * mGrid.side && start < 0; ++v)
        {
            if ((avail >> v & 1) && mGrid.onStart(v, mLeftRight))
            {
                start = v;
            }
        }
        int best = 0;
        if (start >= 0)
        {
            best = (*this)(avail & ~(Mask{1} << start));
            std::vector<Mask> paths;
            crossingPathsFrom(mGrid, avail, start, mLeftRight, paths);
            for (auto p : paths)
            {
                best = std::max(best, 1 + (*this)(avail & ~p));
            }
        }
        mMemo.emplace(avail, best);
        return best;
    }

  private:
    Grid mGrid;
    bool mLeftRight;
    std::unordered_map<Mask, int> mMemo;
};

// Smallest set of open vertices whose removal leaves no open crossing.
inline int
minVertexCut(Grid const& g, Mask avail, bool leftRight)
{
    int const n = g.side * g.side;
    for (int k = 0; k <= n; ++k)
    {
        bool found = anySubset(n, k, [&](Mask cut) {
            return (cut & ~avail) == 0 && !hasCrossing(g, avail & ~cut, leftRight);
        });
        if (found)
        {
            return k;
        }
    }
    return n;
}

} // namespace oracle
