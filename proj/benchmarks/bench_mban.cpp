#include <benchmark/benchmark.h>

#include <random>

#include "mban/dynamics.hpp"
#include "mban/enumerate.hpp"
#include "mban/families.hpp"
#include "mban/verify.hpp"

using namespace mban;

static void BM_StepWord(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MajorityNetwork net(complementary_left_right(n));
  std::uint64_t x = 0x5555555555555555ULL & ((std::uint64_t{1} << n) - 1);
  for (auto _ : state) {
    x = net.step_word(x) ^ 0x2AULL;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_StepWord)->Arg(7)->Arg(13)->Arg(31)->Arg(63);

static void BM_StepWide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MajorityNetwork net(complementary_circle_triangle(n));
  const Configuration x = sample_configuration(n, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(net.step(x));
}
BENCHMARK(BM_StepWide)->Arg(101)->Arg(257);

static void BM_Evolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MajorityNetwork net(two_intersecting_cycles(n, default_cross_point(n)));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(evolve(net, sample_configuration(n, 3, i++)));
}
BENCHMARK(BM_Evolve)->Arg(13)->Arg(101);

static void BM_VerifyExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MajorityNetwork net(complementary_left_right(n));
  for (auto _ : state) benchmark::DoNotOptimize(verify_dct_exhaustive(net));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_VerifyExhaustive)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_TableSolves(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<std::vector<std::uint32_t>> tables;
  for (int i = 0; i < 256; ++i) tables.push_back(transition_table(MajorityNetwork(decode({5, rng() >> 39}))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solves_dct(tables[i++ % tables.size()], 5));
}
BENCHMARK(BM_TableSolves);

static void BM_Canonicalize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Canonicalizer canon(n);
  std::mt19937_64 rng(9);
  const std::uint64_t mask = (std::uint64_t{1} << (n * n)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(canon.canonical(rng() & mask));
}
BENCHMARK(BM_Canonicalize)->Arg(3)->Arg(5)->Arg(7);

static void BM_CanonicalBruteForce(benchmark::State& state) {
  std::mt19937_64 rng(9);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(GraphCode{5, rng() >> 39}));
}
BENCHMARK(BM_CanonicalBruteForce);

BENCHMARK_MAIN();
