// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace maskquorum
{

namespace
{
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
}

double
binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
    {
        return 0.0;
    }
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::int64_t i = 1; i <= k; ++i)
    {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

std::uint64_t
saturatingMul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
    {
        return 0;
    }
    if (a > kSat / b)
    {
        return kSat;
    }
    return a * b;
}

std::uint64_t
saturatingAdd(std::uint64_t a, std::uint64_t b)
{
    return a > kSat - b ? kSat : a + b;
}

std::uint64_t
saturatingPow(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
    {
        r = saturatingMul(r, base);
        if (r == kSat)
        {
            break;
        }
    }
    return r;
}

std::uint64_t
binomialSaturating(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
    {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
    {
        // r * (n - k + i) / i is exact at every step; divide first by the gcd
        // to delay overflow.
        std::uint64_t num = n - k + i;
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t rr = r / g;
        std::uint64_t ii = i / g;
        num /= ii;
        r = saturatingMul(rr, num);
        if (r == kSat)
        {
            return kSat;
        }
    }
    return r;
}

void
forEachCombination(std::uint32_t n, std::uint32_t k,
                   std::function<bool(std::span<std::uint32_t const>)> const& visit)
{
    if (k > n)
    {
        return;
    }
    std::vector<std::uint32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0U);
    while (true)
    {
        if (!visit(idx))
        {
            return;
        }
        // Advance to the next combination in lexicographic order.
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + static_cast<std::uint32_t>(i))
        {
            --i;
        }
        if (i < 0)
        {
            return;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j)
        {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<std::uint32_t>
sampleCombination(std::uint32_t n, std::uint32_t k, Rng& rng)
{
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0U);
    for (std::uint32_t i = 0; i < k; ++i)
    {
        auto j = i + static_cast<std::uint32_t>(rng.uniformBelow(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool
isPrime(std::int64_t q)
{
    if (q < 2)
    {
        return false;
    }
    for (std::int64_t d = 2; d * d <= q; ++d)
    {
        if (q % d == 0)
        {
            return false;
        }
    }
    return true;
}

} // namespace maskquorum
