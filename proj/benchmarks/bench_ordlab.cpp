#include "ordlab/checks.hpp"
#include "ordlab/equivalence.hpp"
#include "ordlab/realization.hpp"

#include <benchmark/benchmark.h>

using namespace ordlab;

static void BM_GroupMul(benchmark::State& state) {
    BallEnumeration B = ball(5, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        const GroupElement& g = B.elements[i % B.elements.size()];
        const GroupElement& h = B.elements[(i * 7 + 3) % B.elements.size()];
        benchmark::DoNotOptimize(mul(g, h));
        ++i;
    }
}
BENCHMARK(BM_GroupMul);

static void BM_Ball(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BallEnumeration B = ball(radius, 2);
        benchmark::DoNotOptimize(B.elements.size());
    }
    state.SetLabel(std::to_string(ball(radius, 2).elements.size()) + " elements");
}
BENCHMARK(BM_Ball)->Arg(4)->Arg(6)->Arg(8);

static void BM_MemberQuadratic(benchmark::State& state) {
    ConeDescriptor c = make_cone(ConeTag::p_plus, BasePoint(make_sqrt(2)));
    BallEnumeration B = ball(6, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(member(c, B.elements[i % B.elements.size()]));
        ++i;
    }
}
BENCHMARK(BM_MemberQuadratic);

static void BM_RealizationStage(benchmark::State& state) {
    ConeDescriptor c = make_cone(ConeTag::q_pp, BasePoint(Rat(1, 3)));
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        RealizationStage st = build_stage(c, N, 2);
        benchmark::DoNotOptimize(st.tags.back());
    }
}
BENCHMARK(BM_RealizationStage)->Arg(32)->Arg(64);

static void BM_ReduceTailEq(benchmark::State& state) {
    for (auto _ : state) {
        TailDecision d = tail_equivalent(reduce(BasePoint(Rat(1, 3)), 2),
                                         reduce(BasePoint(Rat(5, 12)), 2));
        benchmark::DoNotOptimize(d.kind);
    }
}
BENCHMARK(BM_ReduceTailEq);

static void BM_Identify(benchmark::State& state) {
    ConeDescriptor c = make_cone(ConeTag::q_pp, BasePoint(Rat(1, 3)));
    ConeOracle o = oracle_of(c);
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IdentifyResult res = identify(o, radius, 4, 2);
        benchmark::DoNotOptimize(res.tags.size());
    }
}
BENCHMARK(BM_Identify)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
