// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "maskquorum/constructions.hpp"
#include "maskquorum/quorum_system.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace maskquorum
{

inline constexpr std::size_t kExactMaxUniverse = 25;

/// A crash probability F_p: the chance that, with every server crashing
/// independently with probability p, no quorum is fully alive.
struct EstimateResult
{
    enum class Kind
    {
        Exact,
        MonteCarlo
    };

    double value{0.0};
    Kind kind{Kind::Exact};
    // Monte Carlo only.
    std::uint64_t trials{0};
    double stdError{0.0};
    std::uint64_t seed{0};
};

/// Number of crash sets of each size that disable the system: counts[k] is
/// the number of k-element sets D with no quorum inside U \ D. Independent of
/// p, so one enumeration serves every p.
struct CrashProfile
{
    std::size_t n{0};
    std::vector<std::uint64_t> counts;

    double evaluate(double p) const;
};

using LivePredicate = std::function<bool(ElementSet const&)>;

// Enumerates all 2^n alive sets; n <= kExactMaxUniverse, else SizeError.
CrashProfile crashProfile(std::size_t n, LivePredicate const& live);
CrashProfile crashProfile(QuorumSystemHandle const& handle);
CrashProfile crashProfile(ExplicitQuorumSystem const& sys);

EstimateResult crashProbExact(QuorumSystemHandle const& handle, double p);
EstimateResult crashProbExact(ExplicitQuorumSystem const& sys, double p);

/// Fraction of `trials` crash configurations that disable the system. Trial t
/// draws its crash set from Rng(seed, t), so the result depends only on
/// (p, trials, seed) whatever the thread count. threads == 0 uses the
/// hardware concurrency.
EstimateResult crashProbMonteCarlo(std::size_t n, LivePredicate const& live,
                                   double p, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads = 0);
EstimateResult crashProbMonteCarlo(QuorumSystemHandle const& handle, double p,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads = 0);

////////////////////////////////////////////////////////////////////////////////
// Analytic bounds. Every value lies in [0, 1].
////////////////////////////////////////////////////////////////////////////////

/// An upper bound; `vacuous` is set when the formula reached 1 and was
/// clamped.
struct Bound
{
    double value{1.0};
    bool vacuous{true};
};

/// Lower bounds on F_p that hold for any b-masking system:
///   transversal  p^aMin
///   quorumMinus  p^(c - 2b)
///   masking      p^(b + 1), only when aMin <= (iMin + 1) / 2.
struct FpLowerBounds
{
    double transversal{0.0};
    double quorumMinus{0.0};
    std::optional<double> masking;
};

FpLowerBounds fpLowerBounds(SystemParams const& params, double p);

struct ThresholdG
{
    double exact{0.0};       // Pr(at least k - ell + 1 of k crash)
    double lemmaUpper{0.0};  // C(k, ell-1) p^(k-ell+1), not clamped
};

ThresholdG thresholdG(std::int64_t k, std::int64_t ell, double p);

// F(0) = p, F(h) = g(F(h-1)).
double rtFpRecurrence(std::int64_t k, std::int64_t ell, std::int64_t h, double p);

struct CriticalProbability
{
    double value{0.0};
    // Whether the root lies strictly below 1/2 (checked, not assumed).
    bool belowHalf{false};
};

// Root of g(p) = p in (0, 1) by bisection.
CriticalProbability rtCriticalProbability(std::int64_t k, std::int64_t ell,
                                          double tol = 1e-10);

// [C(k, ell-1) p]^((k-ell+1)^h); vacuous when p >= 1 / C(k, ell-1).
Bound rtFpUpper(std::int64_t k, std::int64_t ell, std::int64_t h, double p);

struct BoostFppBound
{
    // (q+1) exp(-b (1-4p)^2 / 2)
    Bound roundedForm;
    // (q+1) exp(-2 (4b+1) gamma^2), gamma = (b+1)/(4b+1) - p
    Bound chernoffForm;
};

// Requires p < 1/4 (ApplicabilityError otherwise).
BoostFppBound boostFppFpUpper(std::int64_t q, std::int64_t b, double p);

// (1 - (1-p)^side)^side: some crash in every row.
double mgridFpLower(std::int64_t side, double p);

// side (3p)^side / (1 - 3p) bounds the chance of no open left-right path.
// Requires p < 1/3.
Bound mpathLrFailureUpper(std::int64_t side, double p);

// ((1-p)/(pPrime-p))^r * tail, bounding 1 - Pr_p(interior of depth r).
Bound interiorBound(std::int64_t r, double p, double pPrime, double tail);

// 2 * interiorBound(r - 1, p, p', mpathLrFailureUpper(side, p')), with
// r = ceil(sqrt(2b+1)). Requires p < p' < 1/3.
Bound mpathFpUpper(std::int64_t side, std::int64_t b, double p, double pPrime);

// C(k, d+i) / C(k, d) <= C(k-d, i).
bool binomRatioCheck(std::int64_t k, std::int64_t d, std::int64_t i);

} // namespace maskquorum
