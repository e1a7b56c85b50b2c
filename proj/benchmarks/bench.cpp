#include <benchmark/benchmark.h>

#include <random>

#include "toricstab/corpus.hpp"
#include "toricstab/threshold.hpp"
#include "toricstab/zariski.hpp"

using namespace toric;

namespace {

IVec iv3(long a, long b, long c) { return IVec{Int(a), Int(b), Int(c)}; }

ToricDivisor threefold_divisor() {
    auto fan = corpus::p1_times_f1();
    return make_divisor(fan, QVec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(2), Rat(1)});
}

void BM_MomentPolytope(benchmark::State& state) {
    ToricDivisor d = threefold_divisor();
    for (auto _ : state) benchmark::DoNotOptimize(moment_polytope(d));
}
BENCHMARK(BM_MomentPolytope);

void BM_FlagChain(benchmark::State& state) {
    auto fan = corpus::p1_times_f1();
    std::vector<IVec> seeds = {iv3(1, 3, -1), iv3(1, 0, 0), iv3(0, 0, -1)};
    for (auto _ : state) benchmark::DoNotOptimize(build_flag_chain(*fan, seeds));
}
BENCHMARK(BM_FlagChain);

void BM_OkounkovBody(benchmark::State& state) {
    auto fan = corpus::p1_times_f1();
    ToricDivisor d = threefold_divisor();
    FlagChain fl = build_flag_chain(*fan, {iv3(1, 3, -1), iv3(1, 0, 0), iv3(0, 0, -1)});
    for (auto _ : state) benchmark::DoNotOptimize(okounkov_body(d, fl));
}
BENCHMARK(BM_OkounkovBody);

void BM_ZariskiPath(benchmark::State& state) {
    auto fan = corpus::hirzebruch(1);
    ToricDivisor l = make_divisor(fan, QVec{Rat(0), Rat(0), Rat(-1), Rat(3)});
    FlagChain fl = build_flag_chain(*fan, {IVec{Int(0), Int(1)}, IVec{Int(-1), Int(1)}});
    for (auto _ : state) benchmark::DoNotOptimize(s_via_surface_zariski(l, fl));
}
BENCHMARK(BM_ZariskiPath);

void BM_CoupledDelta(benchmark::State& state) {
    auto fan = corpus::hirzebruch(1);
    BoundaryData b0 = make_boundary(fan, QVec(4, Rat(0)));
    ToricDivisor l = make_divisor(fan, QVec{Rat(0), Rat(0), Rat(1), Rat(2)});
    std::vector<std::vector<IVec>> flags;
    for (const auto& mc : fan->max_cones)
        flags.push_back({fan->rays[mc[0]], fan->rays[mc[1]]});
    CoupledProblem p = make_problem(fan, b0, {{Rat(1), l}}, {}, flags);
    for (auto _ : state) benchmark::DoNotOptimize(coupled_thresholds(p));
}
BENCHMARK(BM_CoupledDelta);

void BM_RandomPolygonMass(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    std::vector<QVec> pts;
    for (int i = 0; i < 12; ++i) {
        QVec v(2);
        for (int j = 0; j < 2; ++j) v[j] = make_rat(coord(rng), 1 + (int)(rng() % 3));
        pts.push_back(v);
    }
    Polytope poly = vertices_from_halfspaces(2, hull_halfspaces(2, pts));
    for (auto _ : state) benchmark::DoNotOptimize(volume_and_barycenter(poly));
}
BENCHMARK(BM_RandomPolygonMass);

} // namespace

BENCHMARK_MAIN();
