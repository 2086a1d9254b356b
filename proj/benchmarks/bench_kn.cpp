#include <benchmark/benchmark.h>

#include <random>

#include "spinrsk/kn.hpp"

using namespace spinrsk;

namespace {

std::vector<Word> random_words(int n, int len, int count) {
  const auto a = GradedAlphabet::symplectic(n);
  std::mt19937 rng(3);
  std::vector<Word> out;
  for (int k = 0; k < count; ++k) {
    Word w;
    for (int j = 0; j < len; ++j) w.push_back(a.at(static_cast<int>(rng() % static_cast<unsigned>(a.size()))));
    out.push_back(std::move(w));
  }
  return out;
}

void BM_KnInsertion(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const auto words = random_words(4, len, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kn_P(words[i++ % words.size()], 4));
  state.SetComplexityN(len);
}
BENCHMARK(BM_KnInsertion)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_KnByCrystal(benchmark::State& state) {
  const auto words = random_words(4, static_cast<int>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kn_P_by_crystal(words[i++ % words.size()], 4));
}
BENCHMARK(BM_KnByCrystal)->Arg(8)->Arg(16);

}  // namespace
