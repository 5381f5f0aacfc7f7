// Serial reference against the OpenMP evaluation loop on the same suites.
#include <benchmark/benchmark.h>

#include "bihom/constructions.hpp"
#include "bihom/identity.hpp"
#include "support.hpp"

using namespace bihom;

namespace {

const SuiteInstance& octonion_suite() {
  static const SuiteInstance s = make_suite(fixture("O8"), "alternative");
  return s;
}

const SuiteInstance& graded_quadri_suite() {
  static const SuiteInstance s = quadri_suite(quadri_from_commuting_rbs(
      testing::go11_bihom(), testing::go11_rota_baxter(), testing::go11_rota_baxter()));
  return s;
}

const SuiteInstance& graded_pre_alt_suite() {
  static const SuiteInstance s =
      pre_alternative_suite(split_by_rb_alt(testing::go11_bihom(), testing::go11_rota_baxter()));
  return s;
}

template <const SuiteInstance& (*Suite)(), bool Parallel>
void bm_suite(benchmark::State& state) {
  const SuiteInstance& suite = Suite();
  const RunOptions options{false, false, 16};
  for (auto _ : state) {
    Report r = Parallel ? run(suite, options) : run_serial(suite, options);
    benchmark::DoNotOptimize(r);
  }
  state.counters["evaluations"] = static_cast<double>(run_serial(suite, options).evaluations);
}

}  // namespace

BENCHMARK(bm_suite<octonion_suite, false>)->Name("octonion_alternative/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_suite<octonion_suite, true>)->Name("octonion_alternative/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_suite<graded_pre_alt_suite, false>)->Name("graded_pre_alternative/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_suite<graded_pre_alt_suite, true>)->Name("graded_pre_alternative/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_suite<graded_quadri_suite, false>)->Name("graded_quadri/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_suite<graded_quadri_suite, true>)->Name("graded_quadri/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
