// Serial reference vs OpenMP elimination on Macaulay matrices of the partials
// of a smooth quartic surface. Arg = Macaulay degree.

#include "qk3/geometry.hpp"
#include "qk3/linalg.hpp"
#include "qk3/modular.hpp"

#include <benchmark/benchmark.h>

using namespace qk3;
using namespace qk3::modular;

namespace {

Matrix macaulay(int degree) {
    const HomPoly f = parse_polynomial("X^4+Y^4+Z^4+W^4+Y^2*Z*W+3*X*Y*Z*W-2*i*X^3*Z", 4);
    const auto gens = partials(f);
    return macaulay_matrix(gens, degree);
}

std::vector<std::uint64_t> reduced(const Matrix& m) { return *image(m, prime(0), false); }

void exact(benchmark::State& state, Echelon (*reduce)(Matrix)) {
    const Matrix m = macaulay(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reduce(m));
    state.counters["rows"] = static_cast<double>(m.rows());
    state.counters["cols"] = static_cast<double>(m.cols());
}

void modular(benchmark::State& state,
             ModEchelon (*reduce)(std::vector<std::uint64_t>, std::size_t, std::size_t, std::uint64_t)) {
    const Matrix m = macaulay(static_cast<int>(state.range(0)));
    const auto data = reduced(m);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(data, m.rows(), m.cols(), prime(0).p));
    state.counters["rows"] = static_cast<double>(m.rows());
    state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_ExactSerial(benchmark::State& s) { exact(s, row_reduce_serial); }
void BM_ExactParallel(benchmark::State& s) { exact(s, row_reduce); }
void BM_ModularSerial(benchmark::State& s) { modular(s, row_reduce_mod_serial); }
void BM_ModularParallel(benchmark::State& s) { modular(s, row_reduce_mod); }

}  // namespace

BENCHMARK(BM_ExactSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExactParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ModularSerial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ModularParallel)->DenseRange(6, 9)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
