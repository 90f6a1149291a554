#include <benchmark/benchmark.h>

#include <random>

#include <k3gon/oracle.hpp>

using namespace k3gon;

namespace {

PolarizedDatum elms(Int n) {
    return validate_datum(validate_lattice({{2 * n, 1}, {1, -2}}), DivClass{{1, 0}}, DivClass{{2, 1}});
}

void BM_RootsRankThree(benchmark::State& state) {
    Lattice lat = validate_lattice({{2, 0, 0}, {0, -2, 0}, {0, 0, -2}});
    DivClass A{{5, 1, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(roots_positive(lat, A, state.range(0)));
}
BENCHMARK(BM_RootsRankThree)->Arg(10)->Arg(40)->Arg(160);

void BM_EnumerateVsBox(benchmark::State& state) {
    Lattice lat = validate_lattice({{4, 1, 0}, {1, -2, 1}, {0, 1, -4}});
    EnumQuery q{DivClass{{1, 0, 0}}, IntRange::between(-8, 8), IntRange::between(-10, 4)};
    if (state.range(0) == 0) {
        for (auto _ : state) benchmark::DoNotOptimize(classes_matching(q, lat));
    } else {
        Int r = certified_radius(lat, q).radius;
        for (auto _ : state) benchmark::DoNotOptimize(box_classes(lat, {r, q}));
    }
}
BENCHMARK(BM_EnumerateVsBox)->Arg(0)->Arg(1);

void BM_ClassifyElms(benchmark::State& state) {
    PolarizedDatum d = elms(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(BM_ClassifyElms)->Arg(1)->Arg(5)->Arg(25)->Arg(100);

void BM_ClassifyDoublePlane(benchmark::State& state) {
    PolarizedDatum d = validate_datum(validate_lattice({{2}}), DivClass{{1}}, DivClass{{3}});
    for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(BM_ClassifyDoublePlane);

void BM_ElmsScan(benchmark::State& state) {
    for (auto _ : state)
        for (Int n = 1; n <= state.range(0); ++n) benchmark::DoNotOptimize(detect_generalized_elms(elms(n)));
}
BENCHMARK(BM_ElmsScan)->Arg(25);

void BM_CliffordFastVsOracle(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<PolarizedDatum> data;
    for (int i = 0; i < 20; ++i) data.push_back(*random_datum(rng));
    for (auto _ : state)
        for (const auto& d : data) {
            if (state.range(0) == 0)
                benchmark::DoNotOptimize(clifford_index(d));
            else
                benchmark::DoNotOptimize(clifford_oracle(d));
        }
}
BENCHMARK(BM_CliffordFastVsOracle)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
