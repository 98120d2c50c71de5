#include <benchmark/benchmark.h>

#include "cubiccert/cubic_surface.hpp"
#include "cubiccert/fourfold.hpp"
#include "cubiccert/resultant.hpp"
#include "cubiccert/skmap.hpp"
#include "cubiccert/typecalc.hpp"

using namespace cubiccert;

namespace {

const CubicForm& fermat() {
  static const CubicForm f = parse_form("x0^3 + x1^3 + x2^3");
  return f;
}

void BM_FindLines(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_lines(fermat(), p));
}
BENCHMARK(BM_FindLines)->Arg(13)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_WitnessScan(benchmark::State& state) {
  const auto lines = find_lines(fermat(), 13);
  const bool all = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(scan_disjoint_witnesses(lines, fermat(), lines, fermat(), all));
}
BENCHMARK(BM_WitnessScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Macaulay(benchmark::State& state) {
  const Polynomial f = parse_form("x0^3 + 2*x1^3 - x2^3 + x0*x1*x2").poly();
  const Polynomial a = partial_derivative(f, 0), b = partial_derivative(f, 1), c = partial_derivative(f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(macaulay_resultant_q3(a, b, c));
}
BENCHMARK(BM_Macaulay)->Unit(benchmark::kMicrosecond);

// Every signature with blocks of at most 3 and 4 to 12 variables, both routes.
void BM_CertifyAllTypes(benchmark::State& state) {
  std::vector<TypeSignature> types;
  for (int total = 4; total <= 12; ++total) {
    for (auto& t : enumerate_signatures(total, 3)) types.push_back(std::move(t));
  }
  for (auto _ : state) {
    for (const auto& t : types) {
      benchmark::DoNotOptimize(certify_uct(t));
      if (t.total() % 2 == 0) benchmark::DoNotOptimize(derive_unirationality(t));
    }
  }
  state.counters["types"] = static_cast<double>(types.size());
}
BENCHMARK(BM_CertifyAllTypes)->Unit(benchmark::kMicrosecond);

void BM_FiberStatistics(benchmark::State& state) {
  const SKMapSpec s = build_sk_map(fermat(), fermat());
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_statistics(s, 7, n, 0));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_FiberStatistics)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
