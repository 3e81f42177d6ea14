#include <benchmark/benchmark.h>

#include "mspg/constructors.h"
#include "mspg/harness.h"
#include "mspg/lattice.h"
#include "mspg/permutability.h"

namespace {

void BM_SchreierSims(benchmark::State &state) {
  auto gens = mspg::symmetric(state.range(0)).generators();
  for (auto _ : state) {
    mspg::Group g(state.range(0), gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims)->Arg(5)->Arg(8)->Arg(12);

void BM_Lattice(benchmark::State &state, mspg::Group const &g, mspg::LatticeMethod method) {
  for (auto _ : state) {
    mspg::SubgroupLattice lat(g, {mspg::kDefaultLatticeCap, method});
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK_CAPTURE(BM_Lattice, S4_cyclic_extension, mspg::symmetric(4),
                  mspg::LatticeMethod::kCyclicExtension);
BENCHMARK_CAPTURE(BM_Lattice, S4_subset_closure, mspg::symmetric(4),
                  mspg::LatticeMethod::kSubsetClosure);
BENCHMARK_CAPTURE(BM_Lattice, A5_cyclic_extension, mspg::alternating(5),
                  mspg::LatticeMethod::kCyclicExtension);

// msp over every factorization of S4 x C2, fresh engine each time
void BM_MspAllFactorizations(benchmark::State &state) {
  mspg::SubgroupLattice lat(mspg::direct_product(mspg::symmetric(4), mspg::cyclic(2)));
  auto fs = mspg::enumerate_factorizations(lat, false);
  for (auto _ : state) {
    mspg::PermutabilityEngine eng(lat);
    std::size_t n = 0;
    for (auto [a, b] : fs)
      n += eng.msp_holds(a, b) ? 1 : 0;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_MspAllFactorizations)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State &state) {
  mspg::CampaignConfig config;
  config.max_order = state.range(0);
  auto catalog = mspg::campaign_catalog(config);
  for (auto _ : state)
    benchmark::DoNotOptimize(mspg::run_campaign(config, catalog).total_violations());
}
BENCHMARK(BM_Campaign)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
