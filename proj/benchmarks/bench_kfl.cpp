#include <benchmark/benchmark.h>

#include "kfl/circulant.hpp"
#include "kfl/polynomial.hpp"
#include "kfl/sequences.hpp"
#include "kfl/zsigmondy.hpp"

namespace {

const kfl::KflParams kParams{kfl::Rational(3, 2), kfl::Rational(5, 7), kfl::Rational(-2, 3)};

void BM_SeqPrefix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto prefix = kfl::gen_prefix(kParams, kfl::SeqKind::KFL, n);
        benchmark::DoNotOptimize(prefix);
    }
}
BENCHMARK(BM_SeqPrefix)->Arg(64)->Arg(256)->Arg(1024);

void BM_BinetEval(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) {
        auto term = kfl::binet_eval(kParams, static_cast<std::size_t>(n));
        benchmark::DoNotOptimize(term);
    }
}
BENCHMARK(BM_BinetEval)->Arg(30)->Arg(60)->Arg(120);

void BM_DetExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = kfl::KflMatrix::build(kfl::MatrixKind::Circulant, kParams, n);
    for (auto _ : state) {
        auto det = kfl::det_exact(m);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_DetExact)->Arg(4)->Arg(6)->Arg(8);

void BM_RankExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = kfl::KflMatrix::build(kfl::MatrixKind::SkewCirculant, kParams, n);
    for (auto _ : state) {
        auto rank = kfl::rank_exact(m);
        benchmark::DoNotOptimize(rank);
    }
}
BENCHMARK(BM_RankExact)->Arg(4)->Arg(6)->Arg(8);

void BM_ExceptionalSet(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const kfl::Rational precision(1, 1 << 20);
    for (auto _ : state) {
        auto rs = kfl::exceptional_set(kfl::ExceptionalKind::A, n, precision);
        benchmark::DoNotOptimize(rs);
    }
}
BENCHMARK(BM_ExceptionalSet)->Arg(3)->Arg(5)->Arg(7);

void BM_Factorize(benchmark::State& state) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), 10, static_cast<unsigned long>(state.range(0)));
    m += 7;
    for (auto _ : state) {
        auto factors = kfl::factorize(m);
        benchmark::DoNotOptimize(factors);
    }
}
BENCHMARK(BM_Factorize)->Arg(12)->Arg(16)->Arg(20);

} // namespace

BENCHMARK_MAIN();
