#include <benchmark/benchmark.h>

#include "uecsm/campaign.hpp"
#include "uecsm/decide.hpp"
#include "uecsm/eigen.hpp"
#include "uecsm/fixtures.hpp"
#include "uecsm/random.hpp"

namespace {

using namespace uecsm;

void BM_HermitianEigen(benchmark::State& state) {
    RandomStream rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix g = sample_ginibre(n, rng);
    ComplexMatrix herm(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) herm(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(herm));
}
BENCHMARK(BM_HermitianEigen)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_Test3x3Triangular(benchmark::State& state) {
    const ComplexMatrix t = state.range(0) ? fixtures::triangular_uecsm() : fixtures::triangular_not_uecsm();
    for (auto _ : state) benchmark::DoNotOptimize(test_3x3(t));
}
BENCHMARK(BM_Test3x3Triangular)->Arg(1)->Arg(0);

void BM_TestGenericGinibre(benchmark::State& state) {
    RandomStream rng(2);
    const ComplexMatrix t = sample_ginibre(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(test_generic(t));
}
BENCHMARK(BM_TestGenericGinibre)->Arg(3)->Arg(4)->Arg(6);

void BM_TestGenericPartialIsometry(benchmark::State& state) {
    RandomStream rng(3);
    const ComplexMatrix t = sample_partial_isometry(4, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(test_generic(t));
}
BENCHMARK(BM_TestGenericPartialIsometry);

void BM_Campaign(benchmark::State& state) {
    CampaignConfig cfg;
    cfg.trials = 1000;
    cfg.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cfg));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * cfg.trials));
}
BENCHMARK(BM_Campaign)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
