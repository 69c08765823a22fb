// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/availability.hpp"
#include "maskquorum/combinatorics.hpp"
#include "maskquorum/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

namespace maskquorum
{

namespace
{

void
checkProbability(double p, char const* what = "p")
{
    if (!(p >= 0.0 && p <= 1.0))
    {
        throw ParameterError(std::string(what) + " must lie in [0, 1]");
    }
}

Bound
clampUpper(double raw)
{
    if (!(raw < 1.0))
    {
        return {1.0, true};
    }
    return {std::max(0.0, raw), false};
}

unsigned
resolveThreads(unsigned threads)
{
    if (threads == 0)
    {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    return threads;
}

} // namespace

double
CrashProfile::evaluate(double p) const
{
    checkProbability(p);
    double total = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k)
    {
        if (counts[k] == 0)
        {
            continue;
        }
        total += static_cast<double>(counts[k]) *
                 std::pow(p, static_cast<double>(k)) *
                 std::pow(1.0 - p, static_cast<double>(n - k));
    }
    return std::clamp(total, 0.0, 1.0);
}

CrashProfile
crashProfile(std::size_t n, LivePredicate const& live)
{
    if (n > kExactMaxUniverse)
    {
        throw SizeError("exact crash probability enumerates 2^n configurations "
                        "and supports n <= " +
                        std::to_string(kExactMaxUniverse) + " (got n = " +
                        std::to_string(n) + "); use Monte Carlo instead");
    }
    CrashProfile profile;
    profile.n = n;
    profile.counts.assign(n + 1, 0);
    std::uint64_t const total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask)
    {
        if (!live(ElementSet::fromMask(n, mask)))
        {
            ++profile.counts[n - static_cast<std::size_t>(std::popcount(mask))];
        }
    }
    return profile;
}

CrashProfile
crashProfile(QuorumSystemHandle const& handle)
{
    return crashProfile(handle.universeSize(),
                        [&](ElementSet const& alive) { return handle.live(alive); });
}

CrashProfile
crashProfile(ExplicitQuorumSystem const& sys)
{
    auto const n = sys.universeSize();
    if (n > kExactMaxUniverse)
    {
        return crashProfile(n, [&](ElementSet const& a) { return sys.live(a); });
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(sys.quorumCount());
    for (auto const& q : sys.quorums())
    {
        masks.push_back(q.words().empty() ? 0 : q.words()[0]);
    }
    CrashProfile profile;
    profile.n = n;
    profile.counts.assign(n + 1, 0);
    std::uint64_t const total = std::uint64_t{1} << n;
    for (std::uint64_t alive = 0; alive < total; ++alive)
    {
        bool isLive = std::any_of(masks.begin(), masks.end(), [&](std::uint64_t q) {
            return (q & ~alive) == 0;
        });
        if (!isLive)
        {
            ++profile.counts[n - static_cast<std::size_t>(std::popcount(alive))];
        }
    }
    return profile;
}

EstimateResult
crashProbExact(QuorumSystemHandle const& handle, double p)
{
    checkProbability(p);
    return {crashProfile(handle).evaluate(p), EstimateResult::Kind::Exact, 0,
            0.0, 0};
}

EstimateResult
crashProbExact(ExplicitQuorumSystem const& sys, double p)
{
    checkProbability(p);
    return {crashProfile(sys).evaluate(p), EstimateResult::Kind::Exact, 0, 0.0,
            0};
}

EstimateResult
crashProbMonteCarlo(std::size_t n, LivePredicate const& live, double p,
                    std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    checkProbability(p);
    if (trials == 0)
    {
        throw ParameterError("Monte Carlo needs at least one trial");
    }
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(resolveThreads(threads), trials));
    std::vector<std::uint64_t> failures(threads, 0);
    auto worker = [&](unsigned w) {
        // Contiguous trial ranges; the count is order-independent.
        std::uint64_t begin = trials * w / threads;
        std::uint64_t end = trials * (w + 1) / threads;
        std::uint64_t local = 0;
        for (std::uint64_t t = begin; t < end; ++t)
        {
            auto crashed = sampleCrashSet(n, p, Rng::forTrial(seed, t));
            if (!live(crashed.complement()))
            {
                ++local;
            }
        }
        failures[w] = local;
    };
    if (threads == 1)
    {
        worker(0);
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
        {
            pool.emplace_back(worker, w);
        }
        for (auto& t : pool)
        {
            t.join();
        }
    }
    std::uint64_t fails = 0;
    for (auto f : failures)
    {
        fails += f;
    }
    EstimateResult r;
    r.kind = EstimateResult::Kind::MonteCarlo;
    r.trials = trials;
    r.seed = seed;
    r.value = static_cast<double>(fails) / static_cast<double>(trials);
    r.stdError = std::sqrt(r.value * (1.0 - r.value) / static_cast<double>(trials));
    return r;
}

EstimateResult
crashProbMonteCarlo(QuorumSystemHandle const& handle, double p,
                    std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    return crashProbMonteCarlo(
        handle.universeSize(),
        [&](ElementSet const& alive) { return handle.live(alive); }, p, trials,
        seed, threads);
}

FpLowerBounds
fpLowerBounds(SystemParams const& params, double p)
{
    checkProbability(p);
    FpLowerBounds out;
    out.transversal = std::pow(p, static_cast<double>(params.aMin));
    auto exponent = std::max<std::int64_t>(0, params.c - 2 * params.b);
    out.quorumMinus = std::pow(p, static_cast<double>(exponent));
    if (2 * params.aMin <= params.iMin + 1)
    {
        out.masking = std::pow(p, static_cast<double>(params.b + 1));
    }
    return out;
}

ThresholdG
thresholdG(std::int64_t k, std::int64_t ell, double p)
{
    if (!(k > ell && 2 * ell > k))
    {
        throw ParameterError("threshold block needs k > ell > k/2");
    }
    checkProbability(p);
    auto const d = k - ell + 1;
    double exact = 0.0;
    for (std::int64_t j = d; j <= k; ++j)
    {
        exact += binomial(k, j) * std::pow(p, static_cast<double>(j)) *
                 std::pow(1.0 - p, static_cast<double>(k - j));
    }
    return {std::clamp(exact, 0.0, 1.0),
            binomial(k, ell - 1) * std::pow(p, static_cast<double>(d))};
}

double
rtFpRecurrence(std::int64_t k, std::int64_t ell, std::int64_t h, double p)
{
    if (h < 0)
    {
        throw ParameterError("depth h must be non-negative");
    }
    double f = p;
    checkProbability(p);
    for (std::int64_t i = 0; i < h; ++i)
    {
        f = thresholdG(k, ell, f).exact;
    }
    return f;
}

CriticalProbability
rtCriticalProbability(std::int64_t k, std::int64_t ell, double tol)
{
    if (!(tol > 0.0))
    {
        throw ParameterError("tolerance must be positive");
    }
    auto excess = [&](double x) { return thresholdG(k, ell, x).exact - x; };
    // g(x) < x just above 0 and g(x) > x just below 1; find the crossing on
    // a coarse grid first.
    constexpr int kGrid = 1000;
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    double prevX = 1e-9;
    double prev = excess(prevX);
    for (int i = 1; i <= kGrid && !bracketed; ++i)
    {
        double x = i == kGrid ? 1.0 - 1e-9 : static_cast<double>(i) / kGrid;
        double v = excess(x);
        if (prev < 0.0 && v >= 0.0)
        {
            lo = prevX;
            hi = x;
            bracketed = true;
        }
        prevX = x;
        prev = v;
    }
    if (!bracketed)
    {
        throw NumericalError("could not bracket the fixed point of g");
    }
    while (hi - lo > tol)
    {
        double mid = 0.5 * (lo + hi);
        if (excess(mid) < 0.0)
        {
            lo = mid;
        }
        else
        {
            hi = mid;
        }
    }
    double root = 0.5 * (lo + hi);
    return {root, root < 0.5 && hi < 0.5};
}

Bound
rtFpUpper(std::int64_t k, std::int64_t ell, std::int64_t h, double p)
{
    if (!(k > ell && 2 * ell > k))
    {
        throw ParameterError("threshold block needs k > ell > k/2");
    }
    if (h < 0)
    {
        throw ParameterError("depth h must be non-negative");
    }
    checkProbability(p);
    double base = binomial(k, ell - 1) * p;
    if (base >= 1.0)
    {
        return {1.0, true};
    }
    double exponent = std::pow(static_cast<double>(k - ell + 1),
                               static_cast<double>(h));
    return clampUpper(std::pow(base, exponent));
}

BoostFppBound
boostFppFpUpper(std::int64_t q, std::int64_t b, double p)
{
    if (q < 2 || b < 0)
    {
        throw ParameterError("boostFPP bound needs q >= 2 and b >= 0");
    }
    if (!(p >= 0.0))
    {
        throw ParameterError("p must be non-negative");
    }
    if (!(p < 0.25))
    {
        throw ApplicabilityError(
            "boostFPP crash bound holds only for p < 1/4 (above it F_p tends "
            "to 1)");
    }
    auto const qd = static_cast<double>(q);
    auto const bd = static_cast<double>(b);
    double rounded = (qd + 1.0) * std::exp(-bd * (1.0 - 4.0 * p) * (1.0 - 4.0 * p) / 2.0);
    double gamma = (bd + 1.0) / (4.0 * bd + 1.0) - p;
    double chernoff = (qd + 1.0) * std::exp(-2.0 * (4.0 * bd + 1.0) * gamma * gamma);
    return {clampUpper(rounded), clampUpper(chernoff)};
}

double
mgridFpLower(std::int64_t side, double p)
{
    if (side < 1)
    {
        throw ParameterError("grid side must be positive");
    }
    checkProbability(p);
    auto const s = static_cast<double>(side);
    return std::pow(1.0 - std::pow(1.0 - p, s), s);
}

Bound
mpathLrFailureUpper(std::int64_t side, double p)
{
    if (side < 1)
    {
        throw ParameterError("grid side must be positive");
    }
    if (!(p >= 0.0))
    {
        throw ParameterError("p must be non-negative");
    }
    if (!(p < 1.0 / 3.0))
    {
        throw ApplicabilityError("left-right crossing bound holds only for "
                                 "p < 1/3");
    }
    auto const s = static_cast<double>(side);
    return clampUpper(s * std::pow(3.0 * p, s) / (1.0 - 3.0 * p));
}

Bound
interiorBound(std::int64_t r, double p, double pPrime, double tail)
{
    if (r < 0)
    {
        throw ParameterError("interior depth must be non-negative");
    }
    if (!(p >= 0.0 && p < pPrime && pPrime <= 1.0))
    {
        throw ParameterError("interior bound needs 0 <= p < p' <= 1");
    }
    if (!(tail >= 0.0 && tail <= 1.0))
    {
        throw ParameterError("tail probability must lie in [0, 1]");
    }
    if (tail == 0.0)
    {
        return {0.0, false};
    }
    double logValue = static_cast<double>(r) * std::log((1.0 - p) / (pPrime - p)) +
                      std::log(tail);
    return clampUpper(std::exp(std::min(logValue, 1.0)));
}

Bound
mpathFpUpper(std::int64_t side, std::int64_t b, double p, double pPrime)
{
    if (b < 0)
    {
        throw ParameterError("b must be non-negative");
    }
    if (!(p >= 0.0 && p < pPrime && pPrime < 1.0 / 3.0))
    {
        throw ApplicabilityError("M-Path crash bound needs 0 <= p < p' < 1/3");
    }
    auto const r = ceilSqrt(2 * b + 1);
    auto tail = mpathLrFailureUpper(side, pPrime);
    auto interior = interiorBound(r - 1, p, pPrime, tail.value);
    return clampUpper(2.0 * interior.value);
}

bool
binomRatioCheck(std::int64_t k, std::int64_t d, std::int64_t i)
{
    if (d < 0 || i < 0 || d + i > k || k > 60)
    {
        throw ParameterError("binomial ratio check needs 0 <= d, i, d + i <= k "
                             "<= 60");
    }
    __extension__ typedef unsigned __int128 Wide;
    auto ku = static_cast<std::uint64_t>(k);
    auto du = static_cast<std::uint64_t>(d);
    auto iu = static_cast<std::uint64_t>(i);
    Wide lhs = binomialSaturating(ku, du + iu);
    Wide rhs = static_cast<Wide>(binomialSaturating(ku, du)) *
               binomialSaturating(ku - du, iu);
    return lhs <= rhs;
}

} // namespace maskquorum
