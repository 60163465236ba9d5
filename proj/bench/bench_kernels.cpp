// Serial reference against the OpenMP paths: exact matrix product and
// campaign runner.

#include <benchmark/benchmark.h>

#include "projcalc/exact/kernels.hpp"
#include "projcalc/harness/campaign.hpp"
#include "projcalc/statements.hpp"

namespace {

using namespace projcalc;

exact::ExactMatrix dense(std::size_t n, std::uint64_t seed) {
  harness::Rng rng(seed);
  return harness::random_matrix<ExactBackend>(n, n, rng);
}

void BM_ExactMultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense(n, 1), b = dense(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact::kernels::multiply_serial(a, b));
}

void BM_ExactMultiplyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense(n, 1), b = dense(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact::kernels::multiply_parallel(a, b));
}

harness::CampaignConfig config(BackendKind backend) {
  harness::CampaignConfig c;
  c.backend = backend;
  c.dims = {2, 3, 4};
  c.trials_per_dim = 4;
  c.seed = 11;
  c.theorems = all_statement_ids();
  return c;
}

void BM_CampaignSerial(benchmark::State& state) {
  const auto c = config(state.range(0) == 0 ? BackendKind::exact : BackendKind::floating);
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_campaign_serial(c));
}

void BM_CampaignParallel(benchmark::State& state) {
  const auto c = config(state.range(0) == 0 ? BackendKind::exact : BackendKind::floating);
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_campaign(c));
}

}  // namespace

BENCHMARK(BM_ExactMultiplySerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactMultiplyParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
// Arg 0 = exact backend, 1 = float backend.
BENCHMARK(BM_CampaignSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
