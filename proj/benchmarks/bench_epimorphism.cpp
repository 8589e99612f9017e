#include <benchmark/benchmark.h>

#include "tav/epi_search.hpp"
#include "tav/knot_table.hpp"
#include "tav/tav_scan.hpp"

using namespace tav;

namespace {

const KnotTable& knots()
{
    static const KnotTable t = load_knot_table(std::string(TAV_BENCH_DATA_DIR) + "/knots.jsonl");
    return t;
}

const Catalog& catalog()
{
    static const Catalog c = load_catalog(std::string(TAV_BENCH_DATA_DIR) + "/groups.jsonl");
    return c;
}

const char* kKnots[] = {"3_1", "9_46", "10_166"};
const char* kGroups[] = {"24-S4", "60-A5", "96-C2^2_S4"};

} // namespace

static void BM_OrbitReps(benchmark::State& state)
{
    KnotPresentation p = knots().resolve(kKnots[state.range(0)]);
    const FiniteGroup& g = *catalog().find(kGroups[state.range(1)]).group;
    size_t n = 0;
    for (auto _ : state)
        n = enumerate_orbit_reps(p, g, {}).size();
    state.SetLabel(std::string(kKnots[state.range(0)]) + " -> " + kGroups[state.range(1)] + ", " +
                   std::to_string(n) + " orbits");
}
BENCHMARK(BM_OrbitReps)->ArgsProduct({{0, 1, 2}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

static void BM_AllHoms(benchmark::State& state)
{
    KnotPresentation p = knots().resolve("9_46");
    const FiniteGroup& g = *catalog().find("24-S4").group;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_homs(p, g, false, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_AllHoms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ScanTo30(benchmark::State& state)
{
    ScanOptions opt;
    opt.max_order = 30;
    const char* k = state.range(0) ? "9_46" : "4_1";
    for (auto _ : state)
        benchmark::DoNotOptimize(tav_scan(k, knots(), catalog(), opt));
    state.SetLabel(k);
}
BENCHMARK(BM_ScanTo30)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ClassifyCatalog(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_catalog(catalog(), 1, 120));
}
BENCHMARK(BM_ClassifyCatalog)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
