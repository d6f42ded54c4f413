#include <benchmark/benchmark.h>

#include "dualkit/duality.hpp"
#include "dualkit/generators.hpp"

using namespace dualkit;

namespace {

BoxAlgebra three_atom_identity() {
  std::vector<Mask> box(8);
  for (Mask x = 0; x < 8; ++x) box[x] = x;
  return BoxAlgebra(WorldSet({"a", "b", "c"}), std::move(box));
}

void BM_validate_algebra(benchmark::State& state) {
  const BoxAlgebra a = three_atom_identity();
  for (auto _ : state)
    benchmark::DoNotOptimize(validate_algebra(a, Kappa::all()).normal());
}
BENCHMARK(BM_validate_algebra);

void BM_G_obj(benchmark::State& state) {
  const MRFrame m = *fixture("FX3_triple").m1;
  for (auto _ : state) benchmark::DoNotOptimize(functor_G_obj(m).box_table().size());
}
BENCHMARK(BM_G_obj);

void BM_F_obj(benchmark::State& state) {
  const BoxAlgebra a = three_atom_identity();
  const Caps caps = round_trip_caps();
  for (auto _ : state) benchmark::DoNotOptimize(functor_F_obj(a, caps).rels().size());
}
BENCHMARK(BM_F_obj);

void BM_verify_tau(benchmark::State& state) {
  const BoxAlgebra a = three_atom_identity();
  for (auto _ : state) benchmark::DoNotOptimize(verify_tau(a).ok);
}
BENCHMARK(BM_verify_tau);

void BM_verify_theta(benchmark::State& state) {
  const MRFrame m = close_under_intersection(*fixture("FX3_triple").m1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theta(m).ok);
}
BENCHMARK(BM_verify_theta);

} // namespace

BENCHMARK_MAIN();
