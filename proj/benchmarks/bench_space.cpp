#include <benchmark/benchmark.h>

#include <random>

#include "cfmix/builder.hpp"
#include "cfmix/cf_space.hpp"

using namespace cfmix;

namespace {

const CFSequence& z1() {
  static const CFSequence seq =
      build_sequence(Group(GroupDescriptor::integer_lattice(1)), 6, default_growth_profile(6));
  return seq;
}

const CFSequence& z2() {
  static const CFSequence seq =
      build_sequence(Group(GroupDescriptor::integer_lattice(2)), 6, default_growth_profile(6));
  return seq;
}

void BM_ProductDisjoint(benchmark::State& state) {
  const auto& seq = z2();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_disjoint(seq.F(n), seq.C_set(n + 1)));
  state.counters["blocks"] = static_cast<double>(seq.F(n).part_count());
}
BENCHMARK(BM_ProductDisjoint)->DenseRange(1, 5);

void BM_Contains(benchmark::State& state) {
  const auto& seq = z2();
  const auto& F = seq.F(5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-5000, 5000);
  std::vector<GroupElement> probes;
  for (int i = 0; i < 1024; ++i) probes.emplace_back(seq.group(), std::vector<std::int64_t>{d(rng), d(rng)});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(F.contains(probes[i++ & 1023]));
}
BENCHMARK(BM_Contains);

void BM_ActWindow(benchmark::State& state) {
  const auto& seq = z1();
  const auto X = Window::tower(seq, 1);
  const GroupElement g(seq.group(), {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(act_window(seq, g, X, 6));
}
BENCHMARK(BM_ActWindow)->Arg(1)->Arg(39)->Arg(1000)->Arg(100000);

void BM_IntersectMeasure(benchmark::State& state) {
  const auto& seq = z1();
  const auto X = Window::tower(seq, 1);
  const GroupElement g(seq.group(), {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(intersect_measure(seq, g, X, X, 6));
}
BENCHMARK(BM_IntersectMeasure)->Arg(1)->Arg(39)->Arg(1000)->Arg(100000);

}  // namespace
