#include <benchmark/benchmark.h>

#include "hodos/mixing.hpp"
#include "hodos/operators.hpp"
#include "hodos/phi_entropy.hpp"
#include "hodos/sampler.hpp"
#include "hodos/spectral.hpp"
#include "hodos/suite.hpp"

namespace {

hodos::Complex product_complex() {
    static hodos::Complex X = hodos::generate_corpus(7, 1)[0].complex;
    return X;
}

void BM_BuildComplex(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(hodos::generate_corpus(7, 1));
}

void BM_AssembleDownUp(benchmark::State& state) {
    hodos::Complex X = product_complex();
    for (auto _ : state)
        benchmark::DoNotOptimize(hodos::down_up(X, X.rank() - 1));
}

void BM_Spectrum(benchmark::State& state) {
    hodos::Complex X = product_complex();
    hodos::WalkOperator P = hodos::down_up(X, X.rank() - 1);
    for (auto _ : state) benchmark::DoNotOptimize(hodos::spectrum(P));
}

void BM_SamplerSteps(benchmark::State& state) {
    hodos::Complex X = product_complex();
    hodos::WalkSpec spec{hodos::WalkKind::DownUp, X.rank() - 1, nullptr};
    hodos::BitStream rng(1);
    hodos::ChainState s = hodos::initial_state(X, spec, 0);
    for (auto _ : state) {
        s = hodos::sampler_step(X, spec, s, rng);
        benchmark::DoNotOptimize(s);
    }
}

void BM_ChainCertificate(benchmark::State& state) {
    hodos::Complex X = product_complex();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hodos::theorem_4_1_certificate(X, 1, hodos::PhiSpec::square()));
}

}  // namespace

BENCHMARK(BM_BuildComplex);
BENCHMARK(BM_AssembleDownUp);
BENCHMARK(BM_Spectrum);
BENCHMARK(BM_SamplerSteps);
BENCHMARK(BM_ChainCertificate);
BENCHMARK_MAIN();
