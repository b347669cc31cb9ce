#include <benchmark/benchmark.h>

#include "cfmix/builder.hpp"
#include "cfmix/verify.hpp"

using namespace cfmix;

namespace {

Group group_for(int kind) {
  switch (kind) {
    case 0: return Group(GroupDescriptor::integer_lattice(1));
    case 1: return Group(GroupDescriptor::integer_lattice(2));
    default: return Group(GroupDescriptor::finite_sum({}, {2, 3}));
  }
}

void BM_Build(benchmark::State& state) {
  const Group g = group_for(static_cast<int>(state.range(0)));
  const int depth = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_sequence(g, depth, default_growth_profile(depth)));
  state.SetLabel(g.descriptor().name());
}
BENCHMARK(BM_Build)->ArgsProduct({{0, 1, 2}, {3, 6}})->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  const Group g = group_for(static_cast<int>(state.range(0)));
  const auto seq = build_sequence(g, 6, default_growth_profile(6));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(seq));
  state.SetLabel(g.descriptor().name());
}
BENCHMARK(BM_VerifyAll)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_LeastEscape(benchmark::State& state) {
  const Group g = group_for(0);
  const auto seq = build_sequence(g, 3, default_growth_profile(3));
  const GroupElement x(g, {1});
  for (auto _ : state) benchmark::DoNotOptimize(least_escape_exponent(x, seq.FC(2), seq.FC(2), &seq.F(3), 1 << 20));
}
BENCHMARK(BM_LeastEscape);

}  // namespace
