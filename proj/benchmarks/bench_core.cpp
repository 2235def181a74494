#include <benchmark/benchmark.h>

#include <cmath>

#include "latticeturb/eigenbasis.hpp"
#include "latticeturb/interaction_kernel.hpp"
#include "latticeturb/kinetic.hpp"
#include "latticeturb/lattice.hpp"
#include "latticeturb/microscopic.hpp"
#include "latticeturb/porous_medium.hpp"

using namespace latticeturb;

namespace {

void BM_SolveEigen(benchmark::State& state) {
  const LatticeConfig c{static_cast<std::size_t>(state.range(0)), 1.5, 2.0, Boundary::kDirichlet};
  const auto h = build_hamiltonian(c, sample_disorder(c, 1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_eigen(h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveEigen)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_KernelTable(benchmark::State& state) {
  const LatticeConfig c{64, 2.0, 2.0, Boundary::kDirichlet};
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernel_table(c, 0.05, BroadeningSpec::fejer(180.0), cutoff, {1, 2, 3, 4}));
}
BENCHMARK(BM_KernelTable)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CollisionRhs(benchmark::State& state) {
  const LatticeConfig c{64, 2.0, 2.0, Boundary::kDirichlet};
  const auto kernel =
      symmetrize_kernel(kernel_table(c, 0.05, BroadeningSpec::gaussian(0.1), 6, {1, 2}));
  std::vector<double> n(static_cast<std::size_t>(state.range(0)));
  for (std::size_t j = 0; j < n.size(); ++j) {
    const double x = (static_cast<double>(j) - 0.5 * static_cast<double>(n.size())) / 5.0;
    n[j] = std::exp(-0.5 * x * x);
  }
  const auto field = SpectrumField::on_lattice(n);
  for (auto _ : state) benchmark::DoNotOptimize(collision_rhs(field, kernel));
}
BENCHMARK(BM_CollisionRhs)->Arg(64)->Arg(256);

void BM_PmeStep(benchmark::State& state) {
  const PMEConfig cfg{3.0, -50.0, 50.0, static_cast<std::size_t>(state.range(0)), 1.0, 0.5};
  const auto field = cfg.sample([](double k) { return std::abs(k) < 20.0 ? 1.0 : 0.0; });
  const double dt = max_stable_dt(field, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(pme_step(field, cfg, dt));
}
BENCHMARK(BM_PmeStep)->Arg(1024)->Arg(4096);

void BM_SplitStep(benchmark::State& state) {
  const LatticeConfig c{static_cast<std::size_t>(state.range(0)), 2.0, 2.0, Boundary::kDirichlet};
  const auto dis = sample_disorder(c, 3);
  const auto basis = solve_eigen(build_hamiltonian(c, dis));
  const GaussianEnvelope env{0.5 * static_cast<double>(c.n_sites), 3.0, 0.1,
                             AmplitudeStatistics::kFixed};
  const auto psi = synthesize_field(draw_initial_modes(env, basis, 3), basis);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_field(psi, basis, dis, 0.05, 0.05, 100));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SplitStep)->Arg(32)->Arg(64)->Arg(128);

}  // namespace
BENCHMARK_MAIN();
