#include <benchmark/benchmark.h>

#include <random>

#include "tav/catalog.hpp"
#include "tav/determinant.hpp"
#include "tav/fox.hpp"
#include "tav/knot_table.hpp"

using namespace tav;

namespace {

PolyMatrix random_matrix(size_t n, int64_t deg, uint64_t seed)
{
    std::mt19937_64 r(seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int64_t> exp(0, deg);
    PolyMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (int k = 0; k < 2; ++k)
                m.at(i, j) += LaurentPoly::monomial(coeff(r), exp(r));
    return m;
}

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

// numerator of the vanishing 9_46 / S4 pair in the regular representation
const PolyMatrix& wada_946()
{
    static const PolyMatrix m = [] {
        KnotPresentation p = knots().resolve("9_46");
        const CatalogEntry& e = catalog().find("24-S4");
        std::vector<size_t> im = parse_hom_spec("x1=e1,x2=e16,x3=e17,x4=e1,x5=e18,x6=e16,x7=e20,x8=e17,x9=e19", p,
                                                *e.group);
        return wada_matrix(make_setup(p, *e.group, im, nullptr)).numerator;
    }();
    return m;
}

} // namespace

static void BM_DetExactRandom(benchmark::State& state)
{
    PolyMatrix m = random_matrix(static_cast<size_t>(state.range(0)), 3, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(det_exact(m));
}
BENCHMARK(BM_DetExactRandom)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_DetScreenRandom(benchmark::State& state)
{
    PolyMatrix m = random_matrix(static_cast<size_t>(state.range(0)), 3, 43);
    for (auto _ : state)
        benchmark::DoNotOptimize(det_is_zero(m, DetMode::Screen));
}
BENCHMARK(BM_DetScreenRandom)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_Wada946(benchmark::State& state)
{
    DetMode mode = state.range(0) ? DetMode::Certify : DetMode::Screen;
    DetOptions opt;
    opt.presolve = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(det_is_zero(wada_946(), mode, opt));
    state.SetLabel(std::string(mode_name(mode)) + (opt.presolve ? " presolve" : " plain"));
}
BENCHMARK(BM_Wada946)->Args({0, 1})->Args({1, 1})->Args({0, 0})->Unit(benchmark::kMillisecond);

static void BM_ClassicalAlexander(benchmark::State& state)
{
    KnotPresentation p = knots().resolve("10_166");
    for (auto _ : state)
        benchmark::DoNotOptimize(classical_alexander(p));
}
BENCHMARK(BM_ClassicalAlexander)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
