// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace maskquorum
{

using Element = std::uint32_t;

/// A subset of the server universe {0, ..., n-1}, stored as a bitmap.
///
/// Binary operations require both operands to share the same universe size
/// and throw ParameterError otherwise.
class ElementSet
{
  public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universeSize);
    ElementSet(std::size_t universeSize, std::initializer_list<Element> members);
    ElementSet(std::size_t universeSize, std::span<Element const> members);

    static ElementSet full(std::size_t universeSize);
    // Low 64 bits given by `mask`; universeSize must be <= 64.
    static ElementSet fromMask(std::size_t universeSize, std::uint64_t mask);

    std::size_t
    universeSize() const
    {
        return mSize;
    }

    std::size_t count() const;
    bool empty() const;
    bool contains(Element e) const;

    void insert(Element e);
    void erase(Element e);
    void insertAll(ElementSet const& other);

    bool isSubsetOf(ElementSet const& other) const;
    bool intersects(ElementSet const& other) const;
    std::size_t intersectionCount(ElementSet const& other) const;

    ElementSet operator|(ElementSet const& other) const;
    ElementSet operator&(ElementSet const& other) const;
    ElementSet operator-(ElementSet const& other) const;
    ElementSet complement() const;

    std::vector<Element> members() const;

    // Bits [offset, offset + length) as a set over a universe of `length`.
    ElementSet slice(std::size_t offset, std::size_t length) const;
    // Copy of this set shifted into a universe of size `universeSize`.
    ElementSet embed(std::size_t universeSize, std::size_t offset) const;

    std::span<std::uint64_t const>
    words() const
    {
        return mWords;
    }

    std::size_t hash() const;
    std::string toString() const;

    friend bool operator==(ElementSet const&, ElementSet const&) = default;
    friend auto operator<=>(ElementSet const& a, ElementSet const& b) = default;

  private:
    void checkSameUniverse(ElementSet const& other) const;
    void checkElement(Element e) const;
    void clearPadding();

    std::size_t mSize{0};
    std::vector<std::uint64_t> mWords;
};

struct ElementSetHash
{
    std::size_t
    operator()(ElementSet const& s) const
    {
        return s.hash();
    }
};

} // namespace maskquorum
