#include <benchmark/benchmark.h>

#include "heiscat/bimodel.hpp"
#include "heiscat/diagcat.hpp"
#include "heiscat/heisenberg.hpp"
#include "heiscat/nilcoxeter.hpp"
#include "heiscat/symfunc.hpp"
#include "heiscat/weyl.hpp"

using namespace heiscat;

// Schur times Schur at total degree 2 * range(0), transition tables warm.
static void BM_SchurProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const SymFunc a = s_basis({d - 1, 1});
  const SymFunc b = s_basis(Partition::column(d));
  multiply(a, b);  // fills the transition tables
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_SchurProduct)->DenseRange(2, 6);

static void BM_ConvertSchurToMonomial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SymFunc f(Basis::schur);
  for (const Partition& lambda : partitions_of(d)) f = f + s_basis(lambda);
  convert(f, Basis::monomial);
  for (auto _ : state) benchmark::DoNotOptimize(convert(f, Basis::monomial));
}
BENCHMARK(BM_ConvertSchurToMonomial)->DenseRange(4, 10, 2);

static void BM_WeylMultiply(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  const WeylElement u = WeylElement::monomial(e, e);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_multiply(u, u));
}
BENCHMARK(BM_WeylMultiply)->RangeMultiplier(2)->Range(2, 32);

static void BM_HeisNormalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  HeisWord word;
  for (int i = 1; i <= n; ++i) {
    word.push_back(HeisLetter::Hstar(i));
    word.push_back(HeisLetter::E(i));
  }
  for (auto _ : state) benchmark::DoNotOptimize(heis_normalize(word));
}
BENCHMARK(BM_HeisNormalize)->DenseRange(1, 4);

static void BM_BimoduleIso(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bimodule_iso(n));
}
BENCHMARK(BM_BimoduleIso)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_DiagramToMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Morphism braid = Morphism::parse("sig:UUU; x1; x2; x1");
  for (auto _ : state) benchmark::DoNotOptimize(diagram_to_map(braid, n));
}
BENCHMARK(BM_DiagramToMap)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Simplify(benchmark::State& state) {
  const Morphism m = Morphism::parse("sig:DU; x1; x1; x1; x1");
  for (auto _ : state) benchmark::DoNotOptimize(simplify(m));
}
BENCHMARK(BM_Simplify)->Unit(benchmark::kMillisecond);

static void BM_K0Relations(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_k0_relations(m, m));
}
BENCHMARK(BM_K0Relations)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// Transition table copied out of the cache into nested vectors.
static void BM_TransitionTableCopy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transition_to_monomial(Basis::schur, d));
}
BENCHMARK(BM_TransitionTableCopy)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
