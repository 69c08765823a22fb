// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/analysis.hpp"
#include "maskquorum/availability.hpp"
#include "maskquorum/composition.hpp"
#include "maskquorum/constructions.hpp"
#include "maskquorum/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace maskquorum;

namespace
{

ExplicitQuorumSystem
explicitOf(ConstructionSpec const& spec)
{
    return build(spec).materialize(1'000'000);
}

} // namespace

TEST_CASE("explicit composition examples")
{
    auto thr = explicitOf({ThresholdSpec{3, 2}});
    auto tt = composeExplicit(thr, thr);
    CHECK(tt.universeSize() == 9);
    CHECK(tt.quorumCount() == 27);
    CHECK(smallestQuorum(tt) == 4);
    CHECK(validateExplicit(tt).ok());

    auto fano = explicitOf({FPPSpec{2}});
    auto ft = composeExplicit(fano, thr);
    CHECK(ft.universeSize() == 21);
    CHECK(ft.quorumCount() == 189);
    auto brute = oracle::params(oracle::toMasks(ft));
    CHECK(brute.c == 6);
    CHECK(brute.iMin == 1);
    CHECK(brute.aMin == 6);

    // Copy i of the inner system sits at [i n_R, (i+1) n_R).
    ElementSet copy1(21, {3, 4});
    bool found = false;
    for (auto const& q : ft.quorums())
    {
        found = found || copy1.isSubsetOf(q);
    }
    CHECK(found);

    ExplicitQuorumSystem single(Universe(1), {ElementSet(1, {0})});
    auto same = composeExplicit(fano, single);
    CHECK(same.universeSize() == 7);
    CHECK(same.quorums() == fano.quorums());
}

TEST_CASE("nested outer quorums are deduplicated")
{
    ExplicitQuorumSystem outer(Universe(2), {ElementSet(2, {0}), ElementSet(2, {0, 1})});
    ExplicitQuorumSystem inner(Universe(1), {ElementSet(1, {0})});
    auto composed = composeExplicit(outer, inner);
    CHECK(composed.quorumCount() == 2);
    CHECK(compositionCount(outer, inner) == 2);
}

TEST_CASE("composition cap")
{
    auto thr = explicitOf({ThresholdSpec{4, 3}});
    auto tt = composeExplicit(thr, thr);
    CHECK(compositionCount(tt, thr) == 256ULL * 262144);
    try
    {
        (void)composeExplicit(tt, thr, 1000);
        FAIL("expected a size error");
    }
    catch (SizeError const& e)
    {
        CHECK(std::string(e.what()).find("67108864") != std::string::npos);
    }
}

TEST_CASE("parameter algebra examples")
{
    auto fpp3 = build({FPPSpec{3}}).params();
    auto thr = build({ThresholdSpec{77, 58}}).params();
    auto boost = composeParams(fpp3, thr);
    CHECK(boost.n == 1001);
    CHECK(boost.c == 232);
    CHECK(boost.iMin == 39);
    CHECK(boost.aMin == 80);
    CHECK(boost.f == 79);
    CHECK(boost.b == 19);

    auto t43 = build({ThresholdSpec{4, 3}}).params();
    auto rt2 = build({RTSpec{4, 3, 2}}).params();
    CHECK(composeParams(t43, t43) == rt2);
    CHECK(rt2.n == 16);
    CHECK(rt2.c == 9);
    CHECK(rt2.iMin == 4);
    CHECK(rt2.aMin == 4);
    CHECK(rt2.b == 1);

    auto one = SystemParams::derive(1, 1, 1, 1, 1.0);
    CHECK(composeParams(one, boost) == boost);
    CHECK(composeParams(boost, one) == boost);
}

TEST_CASE("brute-force parameters of compositions are multiplicative")
{
    std::vector<ConstructionSpec> parts{{ThresholdSpec{3, 2}}, {ThresholdSpec{4, 3}},
                                        {FPPSpec{2}}};
    for (auto const& outerSpec : parts)
    {
        for (auto const& innerSpec : parts)
        {
            CAPTURE(describe(outerSpec));
            CAPTURE(describe(innerSpec));
            auto outer = oracle::toMasks(explicitOf(outerSpec));
            auto inner = oracle::toMasks(explicitOf(innerSpec));
            auto composedSys = composeExplicit(explicitOf(outerSpec), explicitOf(innerSpec));
            auto composed = oracle::toMasks(composedSys);
            auto po = oracle::params(outer);
            auto pi = oracle::params(inner);
            // Plain subset search for a_min is out of reach at n = 49; the
            // branch and bound result stands in there.
            oracle::Params pc;
            if (composed.n <= 28)
            {
                pc = oracle::params(composed);
            }
            else
            {
                pc.c = smallestQuorum(composedSys);
                pc.iMin = smallestIntersection(composedSys);
                pc.aMin = static_cast<long>(minimumTransversal(composedSys).count());
            }
            CHECK(pc.c == po.c * pi.c);
            CHECK(pc.iMin == po.iMin * pi.iMin);
            CHECK(pc.aMin == po.aMin * pi.aMin);

            auto algebra = composeParams(build(outerSpec).params(), build(innerSpec).params());
            CHECK(algebra.n == composed.n);
            CHECK(algebra.c == pc.c);
            CHECK(algebra.iMin == pc.iMin);
            CHECK(algebra.aMin == pc.aMin);

            // Fairness is preserved.
            CHECK(checkFairness(composedSys).fair);
        }
    }
}

TEST_CASE("crash probability of a composition is s(r(p))")
{
    auto fano = explicitOf({FPPSpec{2}});
    auto thr = explicitOf({ThresholdSpec{3, 2}});
    auto composed = oracle::toMasks(composeExplicit(fano, thr));
    auto outerProfile = crashProfile(fano);
    auto innerProfile = crashProfile(thr);
    for (double p : {0.1, 0.25, 0.5})
    {
        double direct = oracle::crashProb(composed, p);
        double algebra = outerProfile.evaluate(innerProfile.evaluate(p));
        CHECK(std::abs(direct - algebra) <= 1e-9);
    }
}

TEST_CASE("load of a composition is the product of loads")
{
    auto fano = explicitOf({FPPSpec{2}});
    auto thr = explicitOf({ThresholdSpec{3, 2}});
    auto composed = composeExplicit(fano, thr);
    double product = loadLp(fano).load * loadLp(thr).load;
    CHECK(std::abs(loadLp(composed).load - product) <= 1e-6);
    CHECK(std::abs(product - 2.0 / 7.0) <= 1e-9);
}

TEST_CASE("composed handles")
{
    auto spec = ConstructionSpec::composed({FPPSpec{2}}, {ThresholdSpec{3, 2}});
    auto h = build(spec);
    CHECK(h.params() == composeParams(build({FPPSpec{2}}).params(),
                                      build({ThresholdSpec{3, 2}}).params()));
    CHECK(h.quorumCount() == 189);
    auto sys = h.materialize(1000);
    auto direct = composeExplicit(explicitOf({FPPSpec{2}}), explicitOf({ThresholdSpec{3, 2}}));
    CHECK(sys.quorums() == direct.quorums());

    // Composition over a composition.
    auto deep = build(ConstructionSpec::composed(spec, {ThresholdSpec{3, 2}}));
    CHECK(deep.params().n == 63);
    CHECK(deep.params().c == 12);
    for (std::uint64_t t = 0; t < 500; ++t)
    {
        auto alive = sampleCrashSet(63, 0.3, Rng(71, t)).complement();
        bool liveDeep = deep.live(alive);
        // Evaluate by hand: each 3-block is live with 2 of 3, each 9-block
        // with two live 3-blocks, then the Fano lines over the 7 blocks.
        ElementSet blocks(7);
        for (Element b = 0; b < 7; ++b)
        {
            int liveInner = 0;
            for (Element i = 0; i < 3; ++i)
            {
                int aliveHere = 0;
                for (Element j = 0; j < 3; ++j)
                {
                    aliveHere += alive.contains(b * 9 + i * 3 + j);
                }
                liveInner += aliveHere >= 2;
            }
            if (liveInner >= 2)
            {
                blocks.insert(b);
            }
        }
        REQUIRE(liveDeep == fppLines(2).live(blocks));
    }
}
