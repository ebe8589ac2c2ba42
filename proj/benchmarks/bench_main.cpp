#include <benchmark/benchmark.h>

#include <random>

#include "pjordan/sweep.hpp"

using namespace pjordan;

namespace {

oracle::GfpMatrix random_matrix(int p, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> res(0, p - 1);
  auto m = oracle::GfpMatrix::zero(p, n);
  for (auto& v : m.e) v = static_cast<std::uint8_t>(res(rng));
  return m;
}

void BM_rank_gfp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = random_matrix(7, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::rank(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_rank_gfp)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Complexity();

void BM_jordan_type_sym3(benchmark::State& state) {
  auto cls = validate_class({GroupFamily::A, 5}, 5, {3, 1, 1, 1});
  auto mat = oracle::construction_matrix(cls, oracle::parse_construction("S3"));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::jordan_type(mat));
}
BENCHMARK(BM_jordan_type_sym3);

void BM_sym_power_build(benchmark::State& state) {
  auto base = oracle::jordan_matrix(5, {4, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sym_power(base, 4));
}
BENCHMARK(BM_sym_power_build);

void BM_freudenthal_a4(benchmark::State& state) {
  auto rs = build_root_system({GroupFamily::A, 4});
  Weight w{{4, 0, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(char0::character(rs, w));
}
BENCHMARK(BM_freudenthal_a4);

void BM_weyl_orbit_spin(benchmark::State& state) {
  auto rs = build_root_system({GroupFamily::B, 5});
  Weight w = fundamental_weight(5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_orbit(rs, w));
}
BENCHMARK(BM_weyl_orbit_spin);

void BM_tensor_rule(benchmark::State& state) {
  for (auto _ : state)
    for (int a = 1; a <= 11; ++a)
      for (int b = a; b <= 11; ++b) benchmark::DoNotOptimize(modp::tensor_blocks_mod_p(a, b, 11));
}
BENCHMARK(BM_tensor_rule);

}  // namespace

BENCHMARK_MAIN();
