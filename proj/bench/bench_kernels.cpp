// Serial reference vs OpenMP kernels. Run with CGL_THREADS or OMP_NUM_THREADS
// set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "cgl/howe.hpp"
#include "cgl/linalg.hpp"
#include "cgl/presets.hpp"
#include "cgl/reps.hpp"
#include "cgl/tensor.hpp"
#include "cgl/verify.hpp"

using namespace cgl;

namespace {

DenseMatrix random_matrix(int n, bool with_q) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-4, 4), e(-1, 1);
    DenseMatrix m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (auto& row : m)
        for (auto& x : row) x = with_q ? Scalar(c(rng)) * Scalar::q_power(e(rng)) + Scalar(c(rng)) : Scalar(c(rng));
    return m;
}

void BM_bareiss(benchmark::State& st) {
    const DenseMatrix m = random_matrix(static_cast<int>(st.range(0)), st.range(1) != 0);
    for (auto _ : st) benchmark::DoNotOptimize(rank_bareiss(m));
}
void BM_bareiss_parallel(benchmark::State& st) {
    const DenseMatrix m = random_matrix(static_cast<int>(st.range(0)), st.range(1) != 0);
    for (auto _ : st) benchmark::DoNotOptimize(rank_bareiss_parallel(m));
}

void BM_schur_weyl(benchmark::State& st) {
    const auto v = make_super(2, 1);
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(schur_weyl_table(v, 4, 1000000, par));
}

void BM_howe(benchmark::State& st) {
    const auto v = make_super(2, 1);
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(howe_dimension_sweep(v, 3, 5, par));
}

void BM_classify_grid(benchmark::State& st) {
    const auto v = make_super(2, 1);
    const auto weights = unitarity_grid(*v, 200);
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(classify_grid(v, weights, par));
}

}  // namespace

BENCHMARK(BM_bareiss)->ArgsProduct({{8, 16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bareiss_parallel)->ArgsProduct({{8, 16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schur_weyl)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_howe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
