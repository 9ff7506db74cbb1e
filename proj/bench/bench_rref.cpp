#include <benchmark/benchmark.h>

#include <random>

#include "curalg/catalog.hpp"
#include "curalg/derivations.hpp"
#include "curalg/echelon.hpp"
#include "curalg/reference.hpp"

using namespace curalg;

namespace {

// Tall sparse system shaped like the condition streams: many more equations
// than unknowns, small integer entries, rank well below the column count.
Matrix constraint_like(std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3), pick(0, 99);
  const std::size_t rows = 4 * cols, rank = cols * 3 / 4;
  Matrix basis(rank, cols);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pick(rng) < 8) basis(r, c) = entry(rng);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (int t = 0; t < 3; ++t) {
      const auto b = static_cast<std::size_t>(pick(rng)) % rank;
      const Scalar s = entry(rng);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) += s * basis(b, c);
    }
  return m;
}

void BM_rref_parallel(benchmark::State& state) {
  const auto m = constraint_like(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_serial(benchmark::State& state) {
  const auto m = constraint_like(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(reference::rref_serial(m));
}

// The derivation system of sl3 (x) tK[t]/(t^3): 576 unknowns.
void BM_derivations_sl3_t3(benchmark::State& state) {
  const auto c = current(catalog::sl(3), catalog::truncated_poly(3, false));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(c.algebra()));
}

void BM_derivations_sl3_t3_serial(benchmark::State& state) {
  const auto c = current(catalog::sl(3), catalog::truncated_poly(3, false));
  const auto m = map_condition_matrix(c.algebra().table(), map_condition_weights(MapCondition::derivation));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rref_serial(m));
}

}  // namespace

BENCHMARK(BM_rref_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_rref_serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_derivations_sl3_t3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_derivations_sl3_t3_serial)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);

BENCHMARK_MAIN();
