#include "lwd/codecs.hpp"
#include "lwd/coloring.hpp"
#include "lwd/dynamics.hpp"
#include "lwd/ramsey.hpp"
#include "lwd/system.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace lwd;

namespace {

SearchBudget budget(Position window, std::size_t depth, std::size_t picks) {
    SearchBudget b;
    b.window = window;
    b.max_depth = depth;
    b.max_picks = picks;
    b.max_candidates = 1'000'000;
    return b;
}

}  // namespace

static void BM_FiniteSums(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hindman_finite_check(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FiniteSums)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_ExtractionParity(benchmark::State& state) {
    const Codec codec = Codec::integer(MixedRadix(SequenceRule::constant(3)));
    const Coloring col = Coloring::residue(codec, 2);
    const WordSequence base = diagonal_sequence(codec.domination(), 8);
    for (auto _ : state) benchmark::DoNotOptimize(search_monochromatic_extraction(col, base, 2, budget(4, 2, 2)));
}
BENCHMARK(BM_ExtractionParity)->Unit(benchmark::kMillisecond);

static void BM_RecurrenceZ5(benchmark::State& state) {
    const Codec codec = Codec::integer(MixedRadix(SequenceRule::abs_plus_one()));
    auto sys = std::make_shared<const CodecRotationSystem>(std::make_shared<const CyclicSpace>(5), codec, Point::index(1));
    const WordSequence base = diagonal_sequence(codec.domination(), 12);
    for (auto _ : state) benchmark::DoNotOptimize(find_recurrent_point(sys, base, Point::index(0), 3, budget(8, 3, 3)));
}
BENCHMARK(BM_RecurrenceZ5)->Unit(benchmark::kMillisecond);

static void BM_RecurrenceGolden(benchmark::State& state) {
    auto circle = std::make_shared<const CircleSpace>(Precision::fixed);
    const Codec codec = Codec::integer(MixedRadix(SequenceRule::constant(2)));
    auto sys = std::make_shared<const CodecRotationSystem>(circle, codec, circle->golden());
    const WordSequence base = diagonal_sequence(codec.domination(), 48);
    for (auto _ : state) benchmark::DoNotOptimize(find_recurrent_point(sys, base, circle->zero(), 10, budget(14, 3, 5)));
}
BENCHMARK(BM_RecurrenceGolden)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
