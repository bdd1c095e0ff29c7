#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "qwalk/bipartite.hpp"
#include "qwalk/eigensolver.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/peak.hpp"
#include "qwalk/spin_network.hpp"

namespace {

using qwalk::ComplexMatrix;

ComplexMatrix random_hermitian(Eigen::Index n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  }
  return (m + m.adjoint()) / 2.0;
}

void BM_JacobiHermitian(benchmark::State& state) {
  const auto h = random_hermitian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::eig_hermitian(h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiHermitian)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_JacobiSearchHamiltonian(benchmark::State& state) {
  const auto n1 = static_cast<std::size_t>(state.range(0));
  auto bg = qwalk::complete_bipartite({n1, n1 / 2, 3, 5});
  const auto h = qwalk::search_hamiltonian(
      {qwalk::WalkKind::SignlessLaplacian, std::move(bg.graph), std::move(bg.marked), 1.0 / static_cast<double>(n1)});
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::eig_hermitian(h));
}
BENCHMARK(BM_JacobiSearchHamiltonian)->Arg(32)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);

void BM_ReducedCurve(benchmark::State& state) {
  const qwalk::BipartiteSpec spec{512, 256, 3, 5};
  namespace bp = qwalk::bipartite;
  const auto times = qwalk::time_grid(71.1, static_cast<std::size_t>(state.range(0)));
  const auto psi = bp::initial_state(spec, bp::InitialStateKind::UniformS).as_state();
  for (auto _ : state) {
    const qwalk::Propagator u(
        bp::reduced_hamiltonian(spec, qwalk::WalkKind::SignlessLaplacian, 1.0 / 512).cast<std::complex<double>>());
    benchmark::DoNotOptimize(u.evolve(psi, times));
  }
}
BENCHMARK(BM_ReducedCurve)->Arg(2000)->Arg(20000)->Unit(benchmark::kMicrosecond);

void BM_FullEvolveStep(benchmark::State& state) {
  const auto h = random_hermitian(state.range(0));
  const qwalk::Propagator u(h);
  const auto psi = qwalk::QuantumState::uniform(static_cast<std::size_t>(state.range(0)));
  double t = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(u.evolve(psi, t += 0.01));
}
BENCHMARK(BM_FullEvolveStep)->Arg(64)->Arg(256);

void BM_HeisenbergAssembly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<qwalk::Edge> ring;
  for (std::size_t i = 0; i < n; ++i) ring.emplace_back(i, (i + 1) % n);
  const qwalk::Graph g(n, ring);
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::heisenberg_hamiltonian(g, {0.3, 0.3, -0.3}));
}
BENCHMARK(BM_HeisenbergAssembly)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

void BM_FastestRegimeSweep(benchmark::State& state) {
  for (auto _ : state) {
    for (std::size_t k1 = 1; k1 <= 60; ++k1) benchmark::DoNotOptimize(qwalk::bipartite::fastest_regime({1024, 256, k1, 5}));
  }
}
BENCHMARK(BM_FastestRegimeSweep);

}  // namespace
BENCHMARK_MAIN();
