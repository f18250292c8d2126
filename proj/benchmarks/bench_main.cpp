#include <benchmark/benchmark.h>

#include "detset/aut.hpp"
#include "detset/detgen.hpp"
#include "detset/expr.hpp"
#include "detset/product_aut.hpp"
#include "detset/triangular.hpp"

namespace {

using namespace detset;

GroupPtr group_of(const char* expr) { return evaluate(expr).group; }

void BM_AutomorphismGroup(benchmark::State& state, const char* expr) {
  const GroupPtr g = group_of(expr);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order);
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, D12, "D(12)");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, S4, "S(4)");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, EA2_4, "EA(2,4)");

void BM_DeterminingNumber(benchmark::State& state, const char* expr) {
  const GroupPtr g = group_of(expr);
  for (auto _ : state) benchmark::DoNotOptimize(determining_number(g).alpha);
}
BENCHMARK_CAPTURE(BM_DeterminingNumber, A5, "A(5)");
BENCHMARK_CAPTURE(BM_DeterminingNumber, Z2_4xZ9, "Z(2)^4 x Z(9)");
BENCHMARK_CAPTURE(BM_DeterminingNumber, Z27sq, "Z(27)^2");

void BM_GeneratingNumber(benchmark::State& state, const char* expr) {
  const GroupPtr g = group_of(expr);
  for (auto _ : state) benchmark::DoNotOptimize(generating_number(g).gamma);
}
BENCHMARK_CAPTURE(BM_GeneratingNumber, S5, "S(5)");
BENCHMARK_CAPTURE(BM_GeneratingNumber, EA2_5, "EA(2,5)");

void BM_BidwellAut(benchmark::State& state) {
  const auto e = evaluate("Z(3) x S(3)");
  for (auto _ : state) benchmark::DoNotOptimize(bidwell_aut_group(*e.product, {}, true).aut.order);
}
BENCHMARK(BM_BidwellAut);

void BM_StGroup(benchmark::State& state) {
  const TriangularSpec spec{3, static_cast<std::uint32_t>(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(st_group(spec).group->order());
}
BENCHMARK(BM_StGroup)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
