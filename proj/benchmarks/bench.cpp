#include <benchmark/benchmark.h>

#include "support.hpp"
#include "valred/lattice.hpp"
#include "valred/reductor.hpp"

using namespace valred;
using namespace valred::testing;

static void BM_NormalFormSl2(benchmark::State& state) {
  const Presentation p = usl2();
  const auto raw = p.parse_element("e^3*h*f^3");
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p, raw));
}
BENCHMARK(BM_NormalFormSl2);

static void BM_NormalFormWeyl(benchmark::State& state) {
  const Presentation p = weyl_a1();
  std::string text = "D";
  for (int i = 1; i < state.range(0); ++i) text += (i % 2) ? "*X" : "*D";
  const auto raw = p.parse_element(text);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p, raw));
}
BENCHMARK(BM_NormalFormWeyl)->Arg(4)->Arg(8)->Arg(12);

static void BM_Triangularize(benchmark::State& state) {
  const ValuedField f = ValuedField::rationals(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    Vector v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(f.from_int(static_cast<long>((i * 7 + j * j * 3 + 1) % 19) - 9));
    gens.push_back(std::move(v));
  }
  for (auto _ : state) benchmark::DoNotOptimize(triangularize(Lattice::finitely_generated(f, n, gens)));
}
BENCHMARK(BM_Triangularize)->Arg(4)->Arg(8)->Arg(16);

static void BM_BuildReductorWeyl(benchmark::State& state) {
  const Presentation p = weyl_a1();
  for (auto _ : state) benchmark::DoNotOptimize(build_reductor(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildReductorWeyl)->Arg(4)->Arg(6);

static void BM_BuildReductorSl2(benchmark::State& state) {
  const Presentation p = usl2();
  for (auto _ : state) benchmark::DoNotOptimize(build_reductor(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildReductorSl2)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
