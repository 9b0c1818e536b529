#include <benchmark/benchmark.h>

#include "amalgam/constructors.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/kernels.hpp"

using namespace amalgam;

namespace {

const Ring& r63() {
  static const Ring r = mk_truncated_poly(2, 2, 3);
  return r;
}

const Ring& z30() {
  static const Ring r = mk_zmod(30);
  return r;
}

template <auto Scan>
void axioms(benchmark::State& state) {
  const auto& t = r63().tables();
  for (auto _ : state) benchmark::DoNotOptimize(Scan(t));
}

// Z30 is Gauss, so the search never stops early.
template <auto Search>
void gauss(benchmark::State& state) {
  IdealLattice l(z30());
  const auto t = l.content_tables();
  kernels::GaussSearch s{1, static_cast<unsigned>(state.range(0)), 0};
  for (auto _ : state) {
    auto out = Search(t, s);
    benchmark::DoNotOptimize(out);
    state.counters["pairs"] = static_cast<double>(out.pairs);
  }
}

template <auto Census>
void census(benchmark::State& state) {
  IdealLattice l(r63());
  const auto ops = l.ops();
  for (auto _ : state) {
    auto out = Census(ops, false);
    benchmark::DoNotOptimize(out);
    state.counters["triples"] = static_cast<double>(out.triples);
  }
}

}  // namespace

BENCHMARK(axioms<kernels::ring_axioms_serial>)->Name("ring_axioms/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(axioms<kernels::ring_axioms_parallel>)->Name("ring_axioms/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(gauss<kernels::gauss_search_serial>)->Name("gauss_search/serial")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(gauss<kernels::gauss_search_parallel>)->Name("gauss_search/parallel")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(census<kernels::census_serial>)->Name("census/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(census<kernels::census_parallel>)->Name("census/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
