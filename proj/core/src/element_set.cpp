// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/element_set.hpp"
#include "maskquorum/errors.hpp"

#include <bit>
#include <functional>
#include <sstream>

namespace maskquorum
{

namespace
{
constexpr std::size_t kWordBits = 64;

std::size_t
wordCount(std::size_t bits)
{
    return (bits + kWordBits - 1) / kWordBits;
}
} // namespace

ElementSet::ElementSet(std::size_t universeSize)
    : mSize(universeSize), mWords(wordCount(universeSize), 0)
{
}

ElementSet::ElementSet(std::size_t universeSize,
                       std::initializer_list<Element> members)
    : ElementSet(universeSize)
{
    for (auto e : members)
    {
        insert(e);
    }
}

ElementSet::ElementSet(std::size_t universeSize,
                       std::span<Element const> members)
    : ElementSet(universeSize)
{
    for (auto e : members)
    {
        insert(e);
    }
}

ElementSet
ElementSet::full(std::size_t universeSize)
{
    ElementSet s(universeSize);
    for (auto& w : s.mWords)
    {
        w = ~std::uint64_t{0};
    }
    s.clearPadding();
    return s;
}

ElementSet
ElementSet::fromMask(std::size_t universeSize, std::uint64_t mask)
{
    if (universeSize > kWordBits)
    {
        throw ParameterError("ElementSet::fromMask needs a universe of at "
                             "most 64 elements");
    }
    ElementSet s(universeSize);
    if (!s.mWords.empty())
    {
        s.mWords[0] = mask;
        s.clearPadding();
    }
    return s;
}

void
ElementSet::clearPadding()
{
    auto rem = mSize % kWordBits;
    if (rem != 0 && !mWords.empty())
    {
        mWords.back() &= (std::uint64_t{1} << rem) - 1;
    }
}

void
ElementSet::checkSameUniverse(ElementSet const& other) const
{
    if (mSize != other.mSize)
    {
        throw ParameterError("element sets over different universes (" +
                             std::to_string(mSize) + " vs " +
                             std::to_string(other.mSize) + ")");
    }
}

void
ElementSet::checkElement(Element e) const
{
    if (e >= mSize)
    {
        throw ParameterError("element " + std::to_string(e) +
                             " outside universe of size " +
                             std::to_string(mSize));
    }
}

std::size_t
ElementSet::count() const
{
    std::size_t c = 0;
    for (auto w : mWords)
    {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool
ElementSet::empty() const
{
    for (auto w : mWords)
    {
        if (w != 0)
        {
            return false;
        }
    }
    return true;
}

bool
ElementSet::contains(Element e) const
{
    if (e >= mSize)
    {
        return false;
    }
    return (mWords[e / kWordBits] >> (e % kWordBits)) & 1U;
}

void
ElementSet::insert(Element e)
{
    checkElement(e);
    mWords[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
}

void
ElementSet::erase(Element e)
{
    checkElement(e);
    mWords[e / kWordBits] &= ~(std::uint64_t{1} << (e % kWordBits));
}

void
ElementSet::insertAll(ElementSet const& other)
{
    checkSameUniverse(other);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] |= other.mWords[i];
    }
}

bool
ElementSet::isSubsetOf(ElementSet const& other) const
{
    checkSameUniverse(other);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        if ((mWords[i] & ~other.mWords[i]) != 0)
        {
            return false;
        }
    }
    return true;
}

bool
ElementSet::intersects(ElementSet const& other) const
{
    checkSameUniverse(other);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        if ((mWords[i] & other.mWords[i]) != 0)
        {
            return true;
        }
    }
    return false;
}

std::size_t
ElementSet::intersectionCount(ElementSet const& other) const
{
    checkSameUniverse(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        c += static_cast<std::size_t>(
            std::popcount(mWords[i] & other.mWords[i]));
    }
    return c;
}

ElementSet
ElementSet::operator|(ElementSet const& other) const
{
    checkSameUniverse(other);
    ElementSet r(*this);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        r.mWords[i] |= other.mWords[i];
    }
    return r;
}

ElementSet
ElementSet::operator&(ElementSet const& other) const
{
    checkSameUniverse(other);
    ElementSet r(*this);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        r.mWords[i] &= other.mWords[i];
    }
    return r;
}

ElementSet
ElementSet::operator-(ElementSet const& other) const
{
    checkSameUniverse(other);
    ElementSet r(*this);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        r.mWords[i] &= ~other.mWords[i];
    }
    return r;
}

ElementSet
ElementSet::complement() const
{
    ElementSet r(*this);
    for (auto& w : r.mWords)
    {
        w = ~w;
    }
    r.clearPadding();
    return r;
}

std::vector<Element>
ElementSet::members() const
{
    std::vector<Element> out;
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        auto w = mWords[i];
        while (w != 0)
        {
            auto bit = static_cast<std::size_t>(std::countr_zero(w));
            out.push_back(static_cast<Element>(i * kWordBits + bit));
            w &= w - 1;
        }
    }
    return out;
}

ElementSet
ElementSet::slice(std::size_t offset, std::size_t length) const
{
    if (offset + length > mSize)
    {
        throw ParameterError("slice exceeds universe");
    }
    ElementSet r(length);
    if (offset % kWordBits == 0)
    {
        auto first = offset / kWordBits;
        for (std::size_t i = 0; i < r.mWords.size(); ++i)
        {
            r.mWords[i] = mWords[first + i];
        }
        r.clearPadding();
        return r;
    }
    for (std::size_t i = 0; i < length; ++i)
    {
        auto src = offset + i;
        if ((mWords[src / kWordBits] >> (src % kWordBits)) & 1U)
        {
            r.mWords[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        }
    }
    return r;
}

ElementSet
ElementSet::embed(std::size_t universeSize, std::size_t offset) const
{
    if (offset + mSize > universeSize)
    {
        throw ParameterError("embedding exceeds target universe");
    }
    ElementSet r(universeSize);
    for (auto e : members())
    {
        r.insert(static_cast<Element>(e + offset));
    }
    return r;
}

std::size_t
ElementSet::hash() const
{
    std::size_t h = std::hash<std::size_t>{}(mSize);
    for (auto w : mWords)
    {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
             (h >> 2);
    }
    return h;
}

std::string
ElementSet::toString() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto e : members())
    {
        if (!first)
        {
            os << ',';
        }
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace maskquorum
