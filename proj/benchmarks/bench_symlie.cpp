#include <vector>

#include <benchmark/benchmark.h>

#include "sampling.hpp"
#include "symlie/forms.hpp"
#include "symlie/moduli.hpp"
#include "symlie/symplectic.hpp"

using namespace symlie;

namespace {

constexpr int kPool = 32;

std::vector<Matrix> matrices(std::size_t dim) {
  cli::Sampler s(7);
  std::vector<Matrix> out;
  for (int i = 0; i < kPool; ++i) out.push_back(s.invertible(dim));
  return out;
}

std::vector<TwoForm> forms(std::size_t dim) {
  cli::Sampler s(8);
  std::vector<TwoForm> out;
  for (int i = 0; i < kPool; ++i) out.push_back(s.nondegenerate_form(dim));
  return out;
}

void BM_SymplecticQr(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SymplecticContext ctx(n);
  const auto pool = matrices(2 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_qr(ctx, pool[i++ % pool.size()]));
}
BENCHMARK(BM_SymplecticQr)->DenseRange(1, 6);

void BM_ReduceHeis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pool = matrices(2 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_heis(n, pool[i++ % pool.size()]));
}
BENCHMARK(BM_ReduceHeis)->DenseRange(2, 6);

void BM_ReduceRh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pool = matrices(2 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_rh(n, pool[i++ % pool.size()]));
}
BENCHMARK(BM_ReduceRh)->DenseRange(1, 6);

void BM_MilnorFrameHeis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pool = forms(2 * n);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(milnor_frame(Family::HEIS, n, pool[i++ % pool.size()]));
}
BENCHMARK(BM_MilnorFrameHeis)->DenseRange(2, 5);

void BM_CocycleSpace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LieAlgebra g = build_family(Family::HEIS, n);
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_space(g));
}
BENCHMARK(BM_CocycleSpace)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
