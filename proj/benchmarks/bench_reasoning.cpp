#include <benchmark/benchmark.h>

#include <random>

#include "aba/compliance.hpp"
#include "aba/parser.hpp"
#include "aba/related.hpp"

namespace {

using namespace aba;

// A ring of mutually objecting assumptions with a sprinkling of two-premise
// rules and preferences; scales the exact-enumeration paths.
Framework ring_framework(int n, unsigned seed) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  FrameworkBuilder b;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i));
    b.assumption(names.back());
    b.contrary(names.back(), "c" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    b.rule("c" + std::to_string((i + 1) % n), {names[i]});
    if (pick(0, 1)) b.rule("c" + std::to_string(pick(0, n - 1)), {names[i], names[pick(0, n - 1)]});
    if (pick(0, 2) == 0) {
      int j = pick(0, n - 1);
      if (j != i) b.prefer(names[i], names[j], false);
    }
  }
  return b.build();
}

void bm_support_families(benchmark::State& state) {
  Framework f = ring_framework(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(support_families(f));
}
BENCHMARK(bm_support_families)->Arg(8)->Arg(12)->Arg(16);

void bm_extensions_preferred(benchmark::State& state) {
  Framework f = ring_framework(static_cast<int>(state.range(0)), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(extensions(f, Semantics::preferred, Mode::preference_aware));
}
BENCHMARK(bm_extensions_preferred)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

void bm_grounded_fixpoint(benchmark::State& state) {
  Framework f = ring_framework(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(grounded_fixpoint(f));
}
BENCHMARK(bm_grounded_fixpoint)->Arg(10)->Arg(14);

void bm_weak_contraposition(benchmark::State& state) {
  Framework f = ring_framework(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(check_wcp(f));
}
BENCHMARK(bm_weak_contraposition)->Arg(10)->Arg(14);

void bm_argument_view(benchmark::State& state) {
  Framework f = ring_framework(static_cast<int>(state.range(0)), 19);
  for (auto _ : state) benchmark::DoNotOptimize(build_arguments(f));
}
BENCHMARK(bm_argument_view)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
