#include "lwd/codecs.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace lwd;

namespace {

std::vector<Rational> rationals(std::size_t n) {
    std::mt19937_64 rng(1);
    std::vector<Rational> out;
    while (out.size() < n) {
        const std::int64_t p = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const std::int64_t q = static_cast<std::int64_t>(rng() % 1000) + 1;
        if (p != 0) out.push_back(Rational{BigInt(p), BigInt(q)});
    }
    return out;
}

}  // namespace

static void BM_EncodeRational(benchmark::State& state) {
    const auto qs = rationals(256);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(encode_rational(qs[i++ % qs.size()]));
}
BENCHMARK(BM_EncodeRational);

static void BM_DecodeRational(benchmark::State& state) {
    std::vector<Word> ws;
    for (const Rational& q : rationals(256)) ws.push_back(encode_rational(q));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(decode_rational(ws[i++ % ws.size()]));
}
BENCHMARK(BM_DecodeRational);

static void BM_IntegerRoundTrip(benchmark::State& state) {
    const MixedRadix radix(SequenceRule::abs_plus_one());
    std::mt19937_64 rng(2);
    std::vector<BigInt> zs;
    for (int i = 0; i < 256; ++i) zs.push_back(BigInt(static_cast<std::int64_t>(rng() % (1 << 20)) - (1 << 19)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(decode_integer(encode_integer(zs[i++ % zs.size()], radix), radix));
}
BENCHMARK(BM_IntegerRoundTrip);

BENCHMARK_MAIN();
