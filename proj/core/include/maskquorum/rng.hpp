// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

namespace maskquorum
{

/// Counter-based random stream.
///
/// A stream is identified by (seed, trial); its draws depend on nothing else,
/// so Monte Carlo trials can be evaluated in any order or on any thread and
/// still produce the same aggregate. Internally this is SplitMix64 keyed by a
/// mix of the seed and the trial index.
class Rng
{
  public:
    constexpr explicit Rng(std::uint64_t seed, std::uint64_t trial = 0)
        : mSeed(seed), mTrial(trial), mState(mix(mix(seed) ^ (trial * kGamma2)))
    {
    }

    static constexpr Rng
    forTrial(std::uint64_t seed, std::uint64_t trial)
    {
        return Rng(seed, trial);
    }

    constexpr std::uint64_t
    seed() const
    {
        return mSeed;
    }

    constexpr std::uint64_t
    trial() const
    {
        return mTrial;
    }

    constexpr std::uint64_t
    nextU64()
    {
        mState += kGamma;
        return mix(mState);
    }

    // Uniform in [0, 1) with 53 bits of resolution.
    constexpr double
    uniform01()
    {
        return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound); bound must be positive.
    constexpr std::uint64_t
    uniformBelow(std::uint64_t bound)
    {
        // Rejection keeps the distribution exact.
        std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = nextU64();
        while (x >= limit)
        {
            x = nextU64();
        }
        return x % bound;
    }

    constexpr bool
    bernoulli(double p)
    {
        return uniform01() < p;
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kGamma2 = 0xd1b54a32d192ed03ULL;

    static constexpr std::uint64_t
    mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t mSeed;
    std::uint64_t mTrial;
    std::uint64_t mState;
};

} // namespace maskquorum
