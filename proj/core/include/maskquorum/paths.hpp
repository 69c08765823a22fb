// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/element_set.hpp"

#include <cstddef>
#include <vector>

namespace maskquorum
{

enum class Orientation
{
    LeftRight, // column 1 to column side
    TopBottom, // row 1 to row side
};

/// The triangulated side x side grid.
///
/// Vertex (i, j), 1 <= i, j <= side, has index (i - 1) * side + (j - 1); i is
/// the row and j the column. (i1, j1) and (i2, j2) are adjacent when
///   i1 == i2 and j2 == j1 + 1, or
///   j1 == j2 and i2 == i1 + 1, or
///   i2 == i1 - 1 and j2 == j1 + 1,
/// taken symmetrically.
class TriGrid
{
  public:
    explicit TriGrid(std::size_t side);

    std::size_t
    side() const
    {
        return mSide;
    }

    std::size_t
    vertexCount() const
    {
        return mSide * mSide;
    }

    Element index(std::size_t row, std::size_t col) const;

    std::vector<Element> const&
    neighbors(Element v) const
    {
        return mAdjacency[v];
    }

    bool adjacent(Element u, Element v) const;

    // Vertices on the side where paths of orientation o start (resp. end).
    std::vector<Element> sourceSide(Orientation o) const;
    std::vector<Element> sinkSide(Orientation o) const;

  private:
    std::size_t mSide;
    std::vector<std::vector<Element>> mAdjacency;
};

/// Maximum number of pairwise vertex-disjoint open paths from the source
/// side to the sink side of orientation o, with open = member of `alive`.
/// Node-split unit-capacity max-flow; the search stops once `limit` paths are
/// found.
std::size_t maxDisjointPaths(TriGrid const& grid, ElementSet const& alive,
                             Orientation o,
                             std::size_t limit = static_cast<std::size_t>(-1));

// Whether any open path crosses the grid in orientation o.
bool openCrossingExists(TriGrid const& grid, ElementSet const& alive,
                        Orientation o);

// At least r disjoint open paths in both orientations.
bool mpathLive(TriGrid const& grid, std::size_t r, ElementSet const& alive);
bool mpathLive(std::size_t side, std::size_t r, ElementSet const& alive);

} // namespace maskquorum
