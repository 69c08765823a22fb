// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/analysis.hpp"
#include "maskquorum/availability.hpp"
#include "maskquorum/constructions.hpp"
#include "maskquorum/paths.hpp"

#include <benchmark/benchmark.h>

using namespace maskquorum;

namespace
{

void
BM_MaxDisjointPaths(benchmark::State& state)
{
    auto side = static_cast<std::size_t>(state.range(0));
    TriGrid grid(side);
    std::uint64_t t = 0;
    for (auto _ : state)
    {
        auto alive = sampleCrashSet(side * side, 0.1, Rng(3, t++)).complement();
        benchmark::DoNotOptimize(maxDisjointPaths(grid, alive, Orientation::LeftRight));
    }
}
BENCHMARK(BM_MaxDisjointPaths)->Arg(9)->Arg(32)->Arg(64);

void
BM_LivePredicate(benchmark::State& state, ConstructionSpec spec)
{
    auto h = build(spec);
    auto n = h.universeSize();
    std::uint64_t t = 0;
    for (auto _ : state)
    {
        auto alive = sampleCrashSet(n, 0.125, Rng(5, t++)).complement();
        benchmark::DoNotOptimize(h.live(alive));
    }
}
BENCHMARK_CAPTURE(BM_LivePredicate, mgrid_32_15, ConstructionSpec{MGridSpec{32, 15}});
BENCHMARK_CAPTURE(BM_LivePredicate, rt_4_3_5, ConstructionSpec{RTSpec{4, 3, 5}});
BENCHMARK_CAPTURE(BM_LivePredicate, boostfpp_3_19, ConstructionSpec{BoostFPPSpec{3, 19}});
BENCHMARK_CAPTURE(BM_LivePredicate, mpath_32_7, ConstructionSpec{MPathSpec{32, 7}});

void
BM_SampleQuorum(benchmark::State& state, ConstructionSpec spec)
{
    auto h = build(spec);
    std::uint64_t t = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(h.sampleQuorum(Rng(9, t++)));
    }
}
BENCHMARK_CAPTURE(BM_SampleQuorum, mgrid_32_15, ConstructionSpec{MGridSpec{32, 15}});
BENCHMARK_CAPTURE(BM_SampleQuorum, mpath_32_7, ConstructionSpec{MPathSpec{32, 7}});

void
BM_MonteCarlo(benchmark::State& state)
{
    auto h = build({MPathSpec{32, 7}});
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(crashProbMonteCarlo(h, 0.125, 1000, 1, 1));
    }
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

void
BM_LoadLp(benchmark::State& state)
{
    auto sys = build({FPPSpec{static_cast<std::int64_t>(state.range(0))}}).materialize(10'000);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(loadLp(sys));
    }
}
BENCHMARK(BM_LoadLp)->Arg(2)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void
BM_MinimumTransversal(benchmark::State& state)
{
    auto sys = build({FPPSpec{static_cast<std::int64_t>(state.range(0))}}).materialize(10'000);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(minimumTransversal(sys));
    }
}
BENCHMARK(BM_MinimumTransversal)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void
BM_CrashProfile(benchmark::State& state)
{
    auto sys = build({RTSpec{4, 3, 2}}).materialize(10'000);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(crashProfile(sys));
    }
}
BENCHMARK(BM_CrashProfile)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
