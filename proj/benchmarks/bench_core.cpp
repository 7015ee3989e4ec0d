#include "partcat/candidates.hpp"
#include "partcat/maps.hpp"
#include "partcat/tensor_rep.hpp"
#include "partcat/text.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace partcat;

namespace {

LinComb<Rational> at7(const char* expr) {
  Specialization s;
  s.bindings[vars::kDelta] = 7;
  return toRational(specialize(parseLinComb(expr), s));
}

void Enumerate(benchmark::State& st) {
  const auto l = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate(l));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * bell(l)));
}
BENCHMARK(Enumerate)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void RankUnrank(benchmark::State& st) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(0, bell(kRankCap) - 1);
  for (auto _ : st) benchmark::DoNotOptimize(rank(unrank(kRankCap, pick(rng))));
}
BENCHMARK(RankUnrank);

void ComposeViaWords(benchmark::State& st) {
  const Algebra<Rational> A(Rational(7));
  const auto g = at7("d^2*aaaa - d*aaab - d*abbb - d*abaa - d*aaba + abac + abcb");
  for (auto _ : st) benchmark::DoNotOptimize(A.composeViaWords(g, g, 2, 2, 2));
}
BENCHMARK(ComposeViaWords)->Unit(benchmark::kMicrosecond);

// closure of the P image of the 3-block at d = 7; range = length bound, jobs
void ClosureC1(benchmark::State& st) {
  const auto g = at7("d^2*aaa - d*abb - d*aab - d*aba + 2*abc");
  ClosureOptions o;
  o.lengthBound = static_cast<std::size_t>(st.range(0));
  o.jobs = static_cast<unsigned>(st.range(1));
  for (auto _ : st) {
    Closure<Rational> run(Algebra<Rational>(Rational(7)), o);
    run.run({g});
    benchmark::DoNotOptimize(run.approx().dims());
  }
}
BENCHMARK(ClosureC1)->Args({6, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

void ClosureSymbolic(benchmark::State& st) {
  const auto g = parseLinComb("d^2*aaa - d*abb - d*aab - d*aba + 2*abc");
  ClosureOptions o;
  o.lengthBound = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    Closure<Coeff> run(Algebra<Coeff>(Coeff::delta()), o);
    run.run({g});
    benchmark::DoNotOptimize(run.approx().dims());
  }
}
BENCHMARK(ClosureSymbolic)->Arg(6)->Unit(benchmark::kMillisecond);

void ProjectP(benchmark::State& st) {
  const Algebra<Coeff> A(Coeff::delta());
  const auto v = parseLinComb("aaaabb");
  for (auto _ : st) benchmark::DoNotOptimize(projectP(A, v));
}
BENCHMARK(ProjectP)->Unit(benchmark::kMicrosecond);

void MatrixOf(benchmark::State& st) {
  const auto p = Partition::fromWord("abcabcaa");
  const auto N = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(matrixOf(p, N));
}
BENCHMARK(MatrixOf)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void ThreePointDerivation(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(deriveThreePoint());
}
BENCHMARK(ThreePointDerivation)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
