// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace maskquorum
{

// Binomial coefficient in floating point; 0 when k > n.
double binomial(std::int64_t n, std::int64_t k);

// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomialSaturating(std::uint64_t n, std::uint64_t k);

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturatingAdd(std::uint64_t a, std::uint64_t b);
std::uint64_t saturatingPow(std::uint64_t base, std::uint64_t exp);

// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
// Stops early when `visit` returns false.
void forEachCombination(std::uint32_t n, std::uint32_t k,
                        std::function<bool(std::span<std::uint32_t const>)> const& visit);

// Uniform k-subset of {0..n-1}, sorted ascending.
std::vector<std::uint32_t> sampleCombination(std::uint32_t n, std::uint32_t k,
                                             Rng& rng);

bool isPrime(std::int64_t q);

} // namespace maskquorum
