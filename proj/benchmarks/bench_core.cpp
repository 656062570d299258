#include <benchmark/benchmark.h>

#include <random>

#include "hom3lie/derivations.hpp"
#include "hom3lie/extensions.hpp"
#include "hom3lie/fixtures.hpp"
#include "hom3lie/structure.hpp"

using namespace hom3lie;

namespace {

// direct sums of A4, dimension 4 * copies
Hom3LieAlgebra stacked_a4(int copies) {
  Hom3LieAlgebra L = fixtures::a4();
  for (int i = 1; i < copies; ++i) L = direct_sum(L, fixtures::a4());
  return L;
}

Mat random_mat(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(d(rng), 1 + (i + j) % 3);
  return m;
}

void BM_HomJacobi(benchmark::State& state) {
  const Hom3LieAlgebra L = stacked_a4(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hom_jacobi(L).hom_jacobi_ok);
  state.SetLabel("dim " + std::to_string(L.dim()));
}
BENCHMARK(BM_HomJacobi)->Arg(1)->Arg(2);

void BM_DerivationSpace(benchmark::State& state) {
  const Hom3LieAlgebra L = stacked_a4(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(L, 1).dim());
  state.SetLabel("dim " + std::to_string(L.dim()));
}
BENCHMARK(BM_DerivationSpace)->Arg(1)->Arg(2);

void BM_VerifyCocycle(benchmark::State& state) {
  const Hom3LieAlgebra L = fixtures::n4();
  const Representation R = coadjoint_rep(L);
  const Cocycle th = coboundary(L, R, random_mat(4, 4, 7));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cocycle(L, R, th).ok);
}
BENCHMARK(BM_VerifyCocycle);

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat m = random_mat(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_Reconstruct(benchmark::State& state) {
  const auto T = t_star_extension(fixtures::a4(), Cocycle(4, 4));
  std::vector<Vec> dual;
  for (std::size_t i = 4; i < 8; ++i) dual.push_back(Vec::unit(8, i));
  const Subspace I = Subspace::span(8, dual);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_t_star(T.algebra, T.form, I).isometry_ok);
}
BENCHMARK(BM_Reconstruct);

}  // namespace

BENCHMARK_MAIN();
