#include <benchmark/benchmark.h>

#include "cfmix/builder.hpp"
#include "cfmix/estimators.hpp"
#include "cfmix/poisson.hpp"

using namespace cfmix;

namespace {

const CFSequence& z1() {
  static const CFSequence seq =
      build_sequence(Group(GroupDescriptor::integer_lattice(1)), 6, default_growth_profile(6));
  return seq;
}

Window level2(std::size_t n) {
  const auto words = z1().F(2).elements();
  std::vector<Cylinder> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back({2, words[i]});
  return Window::from_cylinders(z1(), parts);
}

void BM_Sample(benchmark::State& state) {
  const PoissonSampler s(z1(), level2(static_cast<std::size_t>(state.range(0))), static_cast<int>(state.range(1)));
  auto rng = rng_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(rng));
  state.counters["mean"] = s.mean();
}
BENCHMARK(BM_Sample)->ArgsProduct({{3, 12, 48}, {2, 6}});

void BM_Push(benchmark::State& state) {
  const auto& seq = z1();
  const PoissonSampler s(seq, level2(12), 6);
  const auto c = s.sample(3);
  const GroupElement g(seq.group(), {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(push_configuration(seq, g, c));
}
BENCHMARK(BM_Push)->Arg(1)->Arg(1000);

void BM_MixingMonteCarlo(benchmark::State& state) {
  const auto& seq = z1();
  const CountEvent A{Window::tower(seq, 1), 0};
  const GroupElement g(seq.group(), {7});
  MonteCarloOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mixing_correlation_mc(seq, g, A, A, 10000, 6, 5, opt));
}
BENCHMARK(BM_MixingMonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
