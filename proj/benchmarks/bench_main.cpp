#include <random>

#include <benchmark/benchmark.h>

#include "algebras.hpp"
#include "random_presheaf.hpp"

#include "cohesion/algfin.hpp"
#include "cohesion/aufhebung.hpp"
#include "cohesion/cohesion.hpp"
#include "cohesion/io.hpp"
#include "cohesion/kan.hpp"
#include "cohesion/levels.hpp"

using namespace cohesion;

namespace {

CategoryPtr karoubi_m() {
    static const CategoryPtr k = share(load_category_fixture("karoubi_m"));
    return k;
}

std::vector<Presheaf> sample(std::size_t max_elements, int n = 16) {
    std::mt19937 rng(5);
    std::vector<Presheaf> out;
    for (int i = 0; i < n; ++i) out.push_back(testsupport::random_presheaf(karoubi_m(), rng, max_elements));
    return out;
}

void BM_KaroubiEnvelope(benchmark::State& state) {
    const auto m = share(load_category_fixture("graphic_m"));
    for (auto _ : state) benchmark::DoNotOptimize(karoubi_envelope(m));
}
BENCHMARK(BM_KaroubiEnvelope);

void BM_EnumerateIdempotentIdeals(benchmark::State& state) {
    const auto k = karoubi_m();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_idempotent_ideals(k));
}
BENCHMARK(BM_EnumerateIdempotentIdeals);

void BM_LevelEpsilon(benchmark::State& state) {
    const auto k = karoubi_m();
    for (auto _ : state) benchmark::DoNotOptimize(level_epsilon(k));
}
BENCHMARK(BM_LevelEpsilon);

void BM_Skeleton(benchmark::State& state) {
    const auto xs = sample(static_cast<std::size_t>(state.range(0)));
    const auto sub = unique_point_objects(karoubi_m());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(skeleton(sub, xs[i++ % xs.size()]));
}
BENCHMARK(BM_Skeleton)->Arg(2)->Arg(4);

void BM_Coskeleton(benchmark::State& state) {
    const auto xs = sample(static_cast<std::size_t>(state.range(0)));
    const auto sub = unique_point_objects(karoubi_m());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(coskeleton(sub, xs[i++ % xs.size()]));
}
BENCHMARK(BM_Coskeleton)->Arg(2)->Arg(4);

void BM_SheafCheck(benchmark::State& state) {
    const auto xs = sample(3);
    const auto t = topology_of_ideal(pseudo_constant_ideal(karoubi_m()));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sheaf_check(t, xs[i++ % xs.size()]));
}
BENCHMARK(BM_SheafCheck);

void BM_CountNaturalTransformations(benchmark::State& state) {
    const auto xs = sample(3);
    for (auto _ : state)
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) benchmark::DoNotOptimize(count_natural_transformations(xs[i], xs[i + 1]));
}
BENCHMARK(BM_CountNaturalTransformations);

void BM_AufhebungSearch(benchmark::State& state) {
    const auto k = karoubi_m();
    const Level eps(pseudo_constant_ideal(k));
    const auto witnesses = default_witnesses(k);
    for (auto _ : state) benchmark::DoNotOptimize(aufhebung_search(eps, witnesses));
}
BENCHMARK(BM_AufhebungSearch);

void BM_WeilReport(benchmark::State& state) {
    const auto a = testsupport::three_factors();
    for (auto _ : state) benchmark::DoNotOptimize(is_weil(a));
}
BENCHMARK(BM_WeilReport);

}  // namespace

BENCHMARK_MAIN();
