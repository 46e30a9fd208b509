#include <benchmark/benchmark.h>

#include "redsyl/analysis.hpp"
#include "redsyl/report.hpp"

using namespace redsyl;

namespace {

SemidirectGroup make_thm1(const std::string& name, std::uint64_t q) {
    auto P = std::make_shared<const PGroup>(PGroup::catalog(name));
    return SemidirectGroup(thm1_action(P, q));
}

void BM_FieldMul(benchmark::State& state) {
    const FieldGF f = make_field(3, 3); // GF(27)
    Felem a = 5, b = 17;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = f.mul(a, b));
    }
}
BENCHMARK(BM_FieldMul);

void BM_MatrixKernel(benchmark::State& state) {
    const SemidirectGroup G = make_thm1("Q8", 3);
    const MatrixGF d = MatrixGF::identity(G.field(), G.dim()).sub(G.action().matrix(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(d.kernel());
    }
}
BENCHMARK(BM_MatrixKernel);

void BM_Thm1Construct(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_thm1("C2^2", 3).sylow_count());
    }
}
BENCHMARK(BM_Thm1Construct);

void BM_Thm2Construct(benchmark::State& state) {
    auto P = std::make_shared<const PGroup>(PGroup::catalog("C3^2"));
    for (auto _ : state) {
        SemidirectGroup G(thm2_action(P));
        benchmark::DoNotOptimize(G.sylow_count());
    }
}
BENCHMARK(BM_Thm2Construct);

void BM_CountPElements(benchmark::State& state) {
    const SemidirectGroup G = make_thm1("C4xC2", 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(G.count_p_elements().total);
    }
}
BENCHMARK(BM_CountPElements);

void BM_ImprovedCover(benchmark::State& state) {
    const SemidirectGroup G = make_thm1("C2^2", 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(improved_cover(G).representatives.size());
    }
}
BENCHMARK(BM_ImprovedCover);

void BM_ExactMinimalCover(benchmark::State& state) {
    const SemidirectGroup G = make_thm1("C2^2", 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_cover(G, CoverMethod::Exact).cover.representatives.size());
    }
}
BENCHMARK(BM_ExactMinimalCover);

} // namespace

BENCHMARK_MAIN();
