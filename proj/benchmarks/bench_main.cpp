#include <benchmark/benchmark.h>

#include "cosegal/charp.hpp"
#include "cosegal/cosegal.hpp"
#include "cosegal/free_gamma.hpp"
#include "cosegal/random.hpp"

using namespace cosegal;

namespace {

Field field_arg(int64_t c) { return Field::of_characteristic(c); }

}  // namespace

// Gaussian elimination on a square random matrix; args are size and characteristic.
static void BM_Rank(benchmark::State& state) {
  Rng rng(1);
  const Matrix m = random_matrix(field_arg(state.range(1)), state.range(0), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->ArgsProduct({{8, 16, 32, 64}, {2, 0}})->Complexity();

static void BM_TensorHomology(benchmark::State& state) {
  Rng rng(2);
  const Field k = field_arg(state.range(1));
  const ChainComplex c = random_complex(k, {-1, 2}, state.range(0), rng);
  const ChainComplex d = random_complex(k, {-1, 2}, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(homology_dims(tensor(c, d)));
}
BENCHMARK(BM_TensorHomology)->ArgsProduct({{2, 3, 4}, {2, 0}});

static void BM_Surjections(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_surjections(state.range(0), 3));
}
BENCHMARK(BM_Surjections)->DenseRange(3, 7);

static void BM_LatchingShape(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(latching_shape(state.range(0), false));
}
BENCHMARK(BM_LatchingShape)->DenseRange(2, 4);

// Free lax diagram on a random tower; arg is the level.
static void BM_Gamma(benchmark::State& state) {
  Rng rng(3);
  const PlainDiagram f = random_plain_diagram(Field::prime(2), state.range(0), {0, 1}, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_na(f));
}
BENCHMARK(BM_Gamma)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_Cosegalify(benchmark::State& state) {
  const StrictMonoid base = square_zero_extension(disc(Field::prime(2), 1));
  const ChainComplex i = unit_complex(Field::prime(2));
  const TwoConstantPremonoid f{base, i, base.unit, ChainMap::identity(i)};
  for (auto _ : state) {
    const Cosegalification c = cosegalify_two_constant(f, state.range(0));
    benchmark::DoNotOptimize(is_cosegal(expand_to_premonoid(c.result, state.range(0))));
  }
}
BENCHMARK(BM_Cosegalify)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_WidePushout(benchmark::State& state) {
  Rng rng(4);
  const TwoConstantPremonoid f = random_two_constant(Field::prime(2), rng);
  std::vector<K2Instruction> ins;
  for (int c = 0; c < state.range(0); ++c) ins.push_back(sample_instruction(f, rng));
  for (auto _ : state) benchmark::DoNotOptimize(wide_pushout_two_constant(f, ins));
}
BENCHMARK(BM_WidePushout)->DenseRange(1, 3);

static void BM_SymPower(benchmark::State& state) {
  const ChainComplex d = disc(field_arg(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sym_power(d, state.range(0)));
}
BENCHMARK(BM_SymPower)->ArgsProduct({{2, 3, 4}, {2, 0}});
BENCHMARK_MAIN();
