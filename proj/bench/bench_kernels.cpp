// Serial reference against the OpenMP version of each exhaustive kernel.

#include <benchmark/benchmark.h>

#include "wordlab/kernels.hpp"
#include "wordlab/word.hpp"

namespace {

using namespace wordlab;

void fair_count_serial(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::fair_count_brute_serial(n));
  }
}

void fair_count_parallel(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::fair_count_brute_parallel(n));
  }
}

void signatures_serial(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::signature_count_serial(n));
  }
}

void signatures_parallel(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::signature_count_parallel(n));
  }
}

void tm_audit_serial(benchmark::State& state) {
  auto const w = thue_morse_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::max_factor_fair_length_serial(w.view()));
  }
}

void tm_audit_parallel(benchmark::State& state) {
  auto const w = thue_morse_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::max_factor_fair_length_parallel(w.view()));
  }
}

}  // namespace

BENCHMARK(fair_count_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(fair_count_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(signatures_serial)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(signatures_parallel)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(tm_audit_serial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(tm_audit_parallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
