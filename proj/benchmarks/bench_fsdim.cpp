#include <benchmark/benchmark.h>

#include "fsdim/dimension.hpp"
#include "fsdim/infocontent.hpp"
#include "fsdim/pool.hpp"
#include "fsdim/precision.hpp"
#include "fsdim/separator.hpp"

using namespace fsdim;

namespace {

const std::vector<Fst>& pool() {
  static const std::vector<Fst> p = gen_pool({1, 64, 4, 2, 2});
  return p;
}

void BM_KtIdentity(benchmark::State& state) {
  Fst t = make_identity(2);
  Digits w = DigitStream::champernowne(2).prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kt(t, w, w.size() * 4 + 8));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KtIdentity)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_KtPool(benchmark::State& state) {
  Digits w = DigitStream::champernowne(2).prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Fst& t : pool()) benchmark::DoNotOptimize(kt(t, w, w.size() * 4 + 8));
  }
}
BENCHMARK(BM_KtPool)->Arg(8)->Arg(64)->Arg(512);

void BM_KdeltaIdentityRational(benchmark::State& state) {
  Fst t = make_identity(2);
  DigitStream x = DigitStream::from_rational(Rational(1) / 3, 2);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kdelta(t, grid_query(x, n, t)));
}
BENCHMARK(BM_KdeltaIdentityRational)->RangeMultiplier(4)->Range(16, 4096);

void BM_KdeltaHuffmanChampernowne(benchmark::State& state) {
  DigitStream x = DigitStream::champernowne(2);
  Fst t = make_block_huffman(x, 1024, 4, 2);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kdelta(t, grid_query(x, n, t)));
}
BENCHMARK(BM_KdeltaHuffmanChampernowne)->RangeMultiplier(4)->Range(16, 4096);

void BM_KdeltaPool(benchmark::State& state) {
  DigitStream x = DigitStream::from_rational(Rational(5) / 24, 2);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    for (const Fst& t : pool()) benchmark::DoNotOptimize(kdelta(t, grid_query(x, n, t)));
  }
}
BENCHMARK(BM_KdeltaPool)->Arg(6)->Arg(24)->Arg(96);

void BM_KdeltaOracle(benchmark::State& state) {
  DigitStream x = DigitStream::from_rational(Rational(1) / 3, 2);
  for (auto _ : state) {
    for (const Fst& t : pool()) {
      PrecisionQuery q = grid_query(x, 6, t);
      benchmark::DoNotOptimize(kdelta_oracle(t, q, static_cast<std::size_t>(state.range(0))));
    }
  }
}
BENCHMARK(BM_KdeltaOracle)->Arg(8)->Arg(12);

void BM_Profile(benchmark::State& state) {
  std::vector<Fst> family{make_identity(2), make_periodic_decoder(Digits{0, 1}, 4, 2)};
  DigitStream x = DigitStream::from_rational(Rational(1) / 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kdelta_profile(family, x, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Profile)->Arg(60)->Arg(240);

void BM_NormalityChampernowne(benchmark::State& state) {
  NormalityOptions o;
  o.n_max = static_cast<std::size_t>(state.range(0));
  DigitStream x = DigitStream::champernowne(2);
  for (auto _ : state) benchmark::DoNotOptimize(normality_report(x, o));
}
BENCHMARK(BM_NormalityChampernowne)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_KtfTargeted(benchmark::State& state) {
  DigitStream x = DigitStream::from_rational(Rational(1) / 3, 2);
  auto f = SeparatorEnumerator::targeted(x);
  Fst t = make_identity(2);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ktf_delta(t, f, x, inverse_power(2, n), 20));
}
BENCHMARK(BM_KtfTargeted)->Arg(8)->Arg(60);

}  // namespace
BENCHMARK_MAIN();
