#include <benchmark/benchmark.h>

#include "lrq/coeffs.hpp"
#include "lrq/ktableau.hpp"
#include "lrq/symfunc.hpp"

namespace {

void BM_EnumerateReferenceCase(benchmark::State& state) {
  lrq::SkewShape shape({3, 2}, {1});
  for (auto _ : state) {
    auto tabs = lrq::enumerate_ktableaux(shape, {3, 2}, {1}, 2, true);
    benchmark::DoNotOptimize(tabs);
  }
}
BENCHMARK(BM_EnumerateReferenceCase);

void BM_CoeffOracle(benchmark::State& state) {
  lrq::CoeffKey key{2, {1}, {3, 2}, {1}, {3, 2}};
  for (auto _ : state) {
    auto c = lrq::coeff_oracle(key);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CoeffOracle);

void BM_CrossValidateGrid(benchmark::State& state) {
  int max_size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = lrq::cross_validate(max_size, 2);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CrossValidateGrid)->Arg(3)->Arg(4);

void BM_SchurLower(benchmark::State& state) {
  lrq::SymFunc f =
      lrq::to_basis(lrq::SymFunc::basis_element(lrq::Basis::s, {3, 2, 1}),
                    lrq::Basis::p);
  for (auto _ : state) {
    auto g = lrq::schur_lower({2, 1}, f, 2);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_SchurLower);

}  // namespace

BENCHMARK_MAIN();
