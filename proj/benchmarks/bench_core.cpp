#include <benchmark/benchmark.h>

#include "ela/binary_forms.hpp"
#include "ela/invariants.hpp"
#include "ela/separation.hpp"

namespace {

ela::ElasticityTensor fixed_tensor() {
    ela::Rng rng(9001);
    return ela::ElasticityTensor::random(rng);
}

void BM_Symmetrize6(benchmark::State& state) {
    ela::Rng rng(1);
    ela::Tensor<double> t(6);
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = rng.normal();
    for (auto _ : state) benchmark::DoNotOptimize(ela::symmetrize(t));
}
BENCHMARK(BM_Symmetrize6);

void BM_HarmonicPart6(benchmark::State& state) {
    ela::Rng rng(2);
    const auto s = ela::SymTensor<double>::project([&] {
        ela::Tensor<double> t(6);
        for (std::size_t m = 0; m < t.size(); ++m) t[m] = rng.normal();
        return t;
    }());
    for (auto _ : state) benchmark::DoNotOptimize(ela::harmonic_part(s));
}
BENCHMARK(BM_HarmonicPart6);

void BM_Decompose(benchmark::State& state) {
    const auto e = fixed_tensor();
    for (auto _ : state) benchmark::DoNotOptimize(ela::decompose(e));
}
BENCHMARK(BM_Decompose);

void BM_Separating21(benchmark::State& state) {
    const auto e = fixed_tensor();
    for (auto _ : state) benchmark::DoNotOptimize(ela::separating21(e));
}
BENCHMARK(BM_Separating21);

void BM_Separating18(benchmark::State& state) {
    const auto e = fixed_tensor();
    for (auto _ : state) benchmark::DoNotOptimize(ela::separating18(e));
}
BENCHMARK(BM_Separating18);

void BM_Equivalent(benchmark::State& state) {
    const auto e = fixed_tensor();
    ela::Rng rng(3);
    const auto e2 = ela::rotate(ela::random_rotation(rng), e);
    for (auto _ : state) benchmark::DoNotOptimize(ela::equivalent(e, e2));
}
BENCHMARK(BM_Equivalent);

void BM_Transvectant66(benchmark::State& state) {
    ela::Rng rng(4);
    std::vector<ela::Cplx> c(9);
    for (auto& x : c) x = ela::Cplx(rng.normal(), rng.normal());
    const auto f = ela::BinaryForm::from_coefficients(std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(ela::transvectant(f, f, 6));
}
BENCHMARK(BM_Transvectant66);

void BM_CartanPullback(benchmark::State& state) {
    ela::Rng rng(5);
    const auto h = ela::complexify(ela::random_harmonic(rng, 4));
    for (auto _ : state) benchmark::DoNotOptimize(ela::cartan_pullback(h));
}
BENCHMARK(BM_CartanPullback);

}  // namespace

BENCHMARK_MAIN();
