// Serial versus OpenMP kernels: one large sparse rank, and the per-degree
// rank loop behind ph_dims.

#include "wpoisson/complexes.hpp"
#include "wpoisson/textio.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace wpoisson;

const Poly& cubic() {
  static const Poly p = textio::parse_poly("x^3+y^3+z^3+x*y*z", Weights(1, 1, 1));
  return p;
}

linalg::SparseIntMatrix delta1_images(int e) {
  complexes::PoissonComplex cx(cubic());
  return cx.differential(1).images(e);
}

void BM_SparseRank(benchmark::State& st, linalg::Execution ex) {
  const auto m = delta1_images(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(linalg::sparse_rank(m, ex));
  st.counters["rows"] = static_cast<double>(m.rows.size());
}

void BM_PhDims(benchmark::State& st, linalg::Execution ex) {
  for (auto _ : st) benchmark::DoNotOptimize(complexes::ph_dims(cubic(), static_cast<int>(st.range(0)), ex));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SparseRank, serial, linalg::Execution::serial)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SparseRank, parallel, linalg::Execution::parallel)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PhDims, serial, linalg::Execution::serial)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PhDims, parallel, linalg::Execution::parallel)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
