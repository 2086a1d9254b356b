#include <benchmark/benchmark.h>

#include <random>

#include "spinrsk/characters.hpp"
#include "spinrsk/symplectic_rsk.hpp"

using namespace spinrsk;

namespace {

ColumnTuple random_tuple(const GradedAlphabet& a, int ell, int cap, std::mt19937& rng) {
  const auto cols = enumerate_columns(a, cap);
  ColumnTuple t;
  for (int k = 0; k < 2 * ell; ++k) t.cols.push_back(cols[rng() % cols.size()]);
  return t;
}

void BM_SymplecticRsk(benchmark::State& state) {
  const auto a = GradedAlphabet::super(2, 2);
  const int ell = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::vector<ColumnTuple> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(random_tuple(a, ell, 3, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_rsk(inputs[i++ % inputs.size()], a));
}
BENCHMARK(BM_SymplecticRsk)->Arg(1)->Arg(2)->Arg(3);

void BM_SymplecticRskRoundTrip(benchmark::State& state) {
  const auto a = GradedAlphabet::barred(3);
  std::mt19937 rng(2);
  std::vector<SymplecticPair> outputs;
  for (int k = 0; k < 64; ++k) outputs.push_back(symplectic_rsk(random_tuple(a, 2, -1, rng), a));
  std::size_t i = 0;
  for (auto _ : state) {
    const SymplecticPair& r = outputs[i++ % outputs.size()];
    benchmark::DoNotOptimize(symplectic_rsk_inverse(r.p, r.q, a));
  }
}
BENCHMARK(BM_SymplecticRskRoundTrip);

void BM_DualSpinor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_dual_spinor(n, 2));
}
BENCHMARK(BM_DualSpinor)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
