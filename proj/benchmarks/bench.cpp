#include "zacyclic/constructions.hpp"
#include "zacyclic/homology.hpp"
#include "zacyclic/realization.hpp"

#include <benchmark/benchmark.h>

using namespace zac;

static void BM_boundary_snf(benchmark::State& state) {
    auto K = the_23_vertex_complex();
    auto d2 = boundary_matrix(K, 2);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d2));
}
BENCHMARK(BM_boundary_snf);

static void BM_homology_complex23(benchmark::State& state) {
    auto K = the_23_vertex_complex();
    for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_all(K));
}
BENCHMARK(BM_homology_complex23);

static void BM_quotient_twist1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(weber_seifert_quotient(1));
}
BENCHMARK(BM_quotient_twist1);

static void BM_search_box4(benchmark::State& state) {
    auto S = shaded_complex();
    auto action = match_action(S, std::nullopt, 3);
    for (auto _ : state) benchmark::DoNotOptimize(search_coordinates(S, action, 4));
}
BENCHMARK(BM_search_box4)->Unit(benchmark::kMillisecond);

static void BM_verify_embedding_r3(benchmark::State& state) {
    auto S = shaded_complex();
    auto action = match_action(S, std::nullopt, 3);
    auto coords = search_coordinates(S, action, 4);
    for (auto _ : state) benchmark::DoNotOptimize(verify_embedding(S, *coords));
}
BENCHMARK(BM_verify_embedding_r3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
