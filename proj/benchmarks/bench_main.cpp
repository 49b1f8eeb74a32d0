#include <random>

#include <benchmark/benchmark.h>

#include "catstat/coherence.hpp"
#include "catstat/fock.hpp"

namespace {

using namespace catstat;

ParticleModel fermions(std::size_t n) {
  GroupSpec z2({2});
  Bicharacter eps(z2, {{RationalPhase(1, 2)}});
  return ParticleModel(eps, std::vector<GroupElement>(n, GroupElement(z2, {1})),
                       Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

ParticleModel quons(double q) {
  GroupSpec triv;
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(4, 4);
  r(0, 0) = r(1, 2) = r(2, 1) = r(3, 3) = q;
  return ParticleModel(Bicharacter(triv), std::vector<GroupElement>(2, GroupElement::zero(triv)),
                       Eigen::MatrixXcd::Identity(2, 2), BraidSpec::matrix(r));
}

void BM_GramFermion(benchmark::State& state) {
  const auto m = fermions(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrices(m, n));
}
BENCHMARK(BM_GramFermion)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_GramQuon(benchmark::State& state) {
  const auto m = quons(0.5);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrices(m, n));
}
BENCHMARK(BM_GramQuon)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SectorDimension(benchmark::State& state) {
  const auto g = gram_matrix(fermions(3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sector_dimension(g));
}
BENCHMARK(BM_SectorDimension)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Commutators(benchmark::State& state) {
  const auto m = quons(0.5);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_commutators(m, n));
}
BENCHMARK(BM_Commutators)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<TensorExpr> exprs;
  for (int i = 0; i < 64; ++i) exprs.push_back(random_expr(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(exprs[k++ % exprs.size()]));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
