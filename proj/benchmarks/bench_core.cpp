#include <benchmark/benchmark.h>

#include <cstdint>

#include "stieltjes/builders.hpp"
#include "stieltjes/classify.hpp"
#include "stieltjes/gen.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/parametrize.hpp"
#include "stieltjes/transforms.hpp"
#include "stieltjes/verify.hpp"

using namespace stieltjes;

namespace {

MatSeq bench_seq(std::size_t q, std::size_t len)
{
    return random_in_class("K_pd", q, len, Rational(-1), 12345);
}

void bm_pinv(benchmark::State& state)
{
    MatSeq s = bench_seq(static_cast<std::size_t>(state.range(0)), 4);
    CMatrix h = hankel_block(s, HankelKind::H, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinv(h));
    }
}

void bm_hankel(benchmark::State& state)
{
    MatSeq s = bench_seq(2, static_cast<std::size_t>(state.range(0)));
    std::size_t n = static_cast<std::size_t>(s.kappa()) / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hankel_block(s, HankelKind::H, n));
    }
}

void bm_schurk(benchmark::State& state)
{
    MatSeq s = bench_seq(2, static_cast<std::size_t>(state.range(0)));
    std::size_t k = static_cast<std::size_t>(s.kappa());
    for (auto _ : state) {
        benchmark::DoNotOptimize(schurk(s, k));
    }
}

void bm_parametrize(benchmark::State& state)
{
    MatSeq s = bench_seq(static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parametrize(s));
    }
}

void bm_classify(benchmark::State& state)
{
    MatSeq s = bench_seq(static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(s));
    }
}

void bm_check_identity(benchmark::State& state)
{
    MatSeq s = bench_seq(2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_identity("T2047", s));
    }
}

BENCHMARK(bm_pinv)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_hankel)->Arg(4)->Arg(8);
BENCHMARK(bm_schurk)->Arg(3)->Arg(6);
BENCHMARK(bm_parametrize)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_classify)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_check_identity);

} // namespace

BENCHMARK_MAIN();
