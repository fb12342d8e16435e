#include <benchmark/benchmark.h>

#include <random>

#include "mcg/gf2.hpp"
#include "mcg/surface.hpp"

using namespace mcg;

namespace {

gf2::Matrix random_isometry(const surface::Model& m, std::mt19937_64& rng, int len) {
  std::vector<gf2::Matrix> gens = {m.rotation(), m.reflection1(), m.transposition_u(1),
                                   m.twist({surface::CurveFamily::A, 1}),
                                   m.twist({surface::CurveFamily::B, 1})};
  gf2::Matrix f = gf2::Matrix::identity(m.dim());
  for (int k = 0; k < len; ++k) f = mat_mul(f, gens[rng() % gens.size()]);
  return f;
}

void BM_mat_mul(benchmark::State& state) {
  int g = int(state.range(0));
  surface::Model m(g);
  std::mt19937_64 rng(1);
  auto a = random_isometry(m, rng, 30), b = random_isometry(m, rng, 30);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::mat_mul(a, b));
}
BENCHMARK(BM_mat_mul)->Arg(9)->Arg(21)->Arg(36)->Arg(64);

void BM_mat_inverse(benchmark::State& state) {
  int g = int(state.range(0));
  surface::Model m(g);
  std::mt19937_64 rng(2);
  auto a = random_isometry(m, rng, 40);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::mat_inverse(a));
}
BENCHMARK(BM_mat_inverse)->Arg(9)->Arg(21)->Arg(36);

void BM_transvection(benchmark::State& state) {
  int g = int(state.range(0));
  surface::Model m(g);
  auto cls = m.curve_class({surface::CurveFamily::A, 2});
  for (auto _ : state) benchmark::DoNotOptimize(gf2::transvection(cls));
}
BENCHMARK(BM_transvection)->Arg(9)->Arg(36);

}  // namespace

BENCHMARK_MAIN();
