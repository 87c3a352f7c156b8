#include <benchmark/benchmark.h>

#include "primform/catalog.hpp"
#include "primform/frobenius.hpp"
#include "primform/mirror.hpp"

using namespace primform;

namespace {

const Catalog& catalog() {
  static const Catalog c = load_catalog(PRIMFORM_BENCH_CATALOG);
  return c;
}

const char* const kNames[] = {"A4", "P8", "Q10", "U12", "E14"};

void BM_MilnorData(benchmark::State& state) {
  const auto f = catalog().find(kNames[state.range(0)]).weighted();
  for (auto _ : state) benchmark::DoNotOptimize(MilnorData::compute(f));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_MilnorData)->DenseRange(0, 4);

void BM_SolveStar(benchmark::State& state) {
  const auto f = catalog().find(kNames[state.range(0)]).weighted();
  const auto md = MilnorData::compute(f);
  const auto st = build_unfolding(f, md, static_cast<int>(state.range(1)));
  for (auto _ : state) {
    Reducer reducer(md);
    benchmark::DoNotOptimize(solve_star(st, reducer));
  }
  state.SetLabel(std::string(kNames[state.range(0)]) + " N=" + std::to_string(state.range(1)));
}
BENCHMARK(BM_SolveStar)->ArgsProduct({{0, 1, 2, 3, 4}, {3, 4, 5}})->Unit(benchmark::kMillisecond);

void BM_Prepotential(benchmark::State& state) {
  const auto f = catalog().find(kNames[state.range(0)]).weighted();
  const auto md = MilnorData::compute(f);
  const auto r = solve_star(build_unfolding(f, md, 4));
  for (auto _ : state) benchmark::DoNotOptimize(build_frobenius(r, md));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Prepotential)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Wdvv(benchmark::State& state) {
  const auto f = catalog().find(kNames[state.range(0)]).weighted();
  const auto md = MilnorData::compute(f);
  const int order = static_cast<int>(state.range(1));
  const auto fd = build_frobenius(solve_star(build_unfolding(f, md, order)), md);
  for (auto _ : state) benchmark::DoNotOptimize(wdvv_check(fd.prepotential, md.eta(), order));
  state.SetLabel(std::string(kNames[state.range(0)]) + " N=" + std::to_string(order));
}
BENCHMARK(BM_Wdvv)->ArgsProduct({{3, 4}, {4, 5}})->Unit(benchmark::kMillisecond);

void BM_StarDefect(benchmark::State& state) {
  const auto f = catalog().find("U12").weighted();
  const auto md = MilnorData::compute(f);
  const auto st = build_unfolding(f, md, 4);
  const auto r = solve_star(st);
  for (auto _ : state) benchmark::DoNotOptimize(star_defect(st, r));
}
BENCHMARK(BM_StarDefect)->Unit(benchmark::kMillisecond);

void BM_DiagonalSymmetries(benchmark::State& state) {
  std::vector<InvertiblePolynomial> ws;
  for (const auto& e : catalog().family("exceptional")) ws.push_back(InvertiblePolynomial::from_poly(e->polynomial, e->variables));
  for (auto _ : state)
    for (const auto& w : ws) benchmark::DoNotOptimize(diagonal_symmetries(w));
}
BENCHMARK(BM_DiagonalSymmetries);

}  // namespace

BENCHMARK_MAIN();
