#include <benchmark/benchmark.h>

#include <random>

#include "flagcert/canonical.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/coefficient_table.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/psd.hpp"
#include "flagcert/verify.hpp"

namespace {

const flagcert::Certificate& shipped() {
  static const auto cert = flagcert::load_certificate_file(std::string(FLAGCERT_DATA_DIR) + "/appendix.cert");
  return cert;
}

flagcert::ColouredGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  flagcert::ColouredGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_colour(u, v, static_cast<flagcert::Colour>(1 + rng() % 3));
  }
  return g;
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(flagcert::canonical_key(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 10);

void BM_EnumerateModels(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(flagcert::enumerate_models(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_EnumerateModels)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CoefficientTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(flagcert::coefficient_table(shipped(), static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_CoefficientTable)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto table = flagcert::coefficient_table(shipped(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(flagcert::verify(shipped(), table));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_PsdCheck(benchmark::State& state) {
  const auto& q = shipped().blocks[static_cast<std::size_t>(state.range(0))].q;
  for (auto _ : state) benchmark::DoNotOptimize(flagcert::psd_check(q));
}
BENCHMARK(BM_PsdCheck)->DenseRange(0, 9);

}  // namespace
BENCHMARK_MAIN();
