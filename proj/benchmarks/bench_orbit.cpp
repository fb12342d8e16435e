#include <benchmark/benchmark.h>

#include "mcg/bsgs.hpp"
#include "mcg/gensets.hpp"
#include "mcg/order.hpp"

using namespace mcg;

namespace {

void BM_orbit(benchmark::State& state) {
  int g = int(state.range(0));
  surface::Model m(g);
  auto gens = gensets::twist_pair_set(m);
  for (auto _ : state) {
    auto [pts, sv] = cert::orbit(gens, 1u);
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_orbit)->Arg(11)->Arg(15)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_group_order(benchmark::State& state) {
  int g = int(state.range(0));
  surface::Model m(g);
  auto gens = gensets::twist_pair_set(m);
  cert::OrderOptions opts;
  opts.target = cert::expected_order(m.cfg());
  for (auto _ : state) {
    auto res = cert::group_order(gens, opts);
    benchmark::DoNotOptimize(res.order);
  }
}
BENCHMARK(BM_group_order)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
