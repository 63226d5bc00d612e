#include <benchmark/benchmark.h>

#include <random>

#include "yaxl/constructions.hpp"
#include "yaxl/enumerate.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solutions.hpp"
#include "yaxl/transform.hpp"

using namespace yaxl;

namespace {

  void BM_RelativeInverse(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64                      rng(1);
    std::uniform_int_distribution<Point> d(0, static_cast<Point>(n - 1));
    std::vector<FnMap>                   maps;
    for (int i = 0; i < 256; ++i) {
      std::vector<Point> img(n);
      for (auto& v : img) v = d(rng);
      maps.emplace_back(std::move(img));
    }
    std::size_t i = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(relative_inverse(maps[i++ % maps.size()]));
    }
  }
  BENCHMARK(BM_RelativeInverse)->Arg(4)->Arg(16)->Arg(64);

  void BM_CrossTabulate(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cross_tabulate(n));
  }
  BENCHMARK(BM_CrossTabulate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

  void BM_IsSolution(benchmark::State& state) {
    auto const    n = static_cast<std::size_t>(state.range(0));
    SolutionTable s = derived_map(*quasi_rack_structure(dihedral_quandle(n)));
    for (auto _ : state) benchmark::DoNotOptimize(is_solution(s));
  }
  BENCHMARK(BM_IsSolution)->Arg(5)->Arg(9)->Arg(15);

  void BM_CanonicalForm(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Magma      m = dihedral_quandle(n);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m));
  }
  BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
