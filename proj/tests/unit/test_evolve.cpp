#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qwalk/errors.hpp"
#include "qwalk/evolve.hpp"
#include "oracles.hpp"

namespace qwalk {
namespace {

using testing::cd;

SearchInstance bipartite_instance(const BipartiteSpec& spec, WalkKind walk, double gamma) {
  auto bg = complete_bipartite(spec);
  return {walk, std::move(bg.graph), std::move(bg.marked), gamma};
}

TEST(SearchHamiltonian, MatchesDefinition) {
  const BipartiteSpec spec{4, 3, 1, 2};
  const Eigen::MatrixXd a = testing::reference_bipartite_adjacency(4, 3);
  const Eigen::MatrixXd d = a.rowwise().sum().asDiagonal();
  Eigen::MatrixXd oracle = Eigen::MatrixXd::Zero(7, 7);
  oracle(0, 0) = oracle(4, 4) = oracle(5, 5) = 1.0;
  const double gamma = 0.21;
  const std::array<std::pair<WalkKind, Eigen::MatrixXd>, 3> cases{
      {{WalkKind::Laplacian, a - d}, {WalkKind::Adjacency, a}, {WalkKind::SignlessLaplacian, a + d}}};
  for (const auto& [kind, w] : cases) {
    const auto h = search_hamiltonian(bipartite_instance(spec, kind, gamma));
    EXPECT_LE((h.real() - (-gamma * w - oracle)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(h.imag().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(SearchInstance, Validation) {
  const auto g = five_vertex_demo_graph();
  EXPECT_NO_THROW((SearchInstance{WalkKind::Adjacency, g, {1}, 0.0}.validate()));
  EXPECT_THROW((SearchInstance{WalkKind::Adjacency, g, {}, 0.1}.validate()), ValidationError);
  EXPECT_THROW((SearchInstance{WalkKind::Adjacency, g, {1, 1}, 0.1}.validate()), ValidationError);
  EXPECT_THROW((SearchInstance{WalkKind::Adjacency, g, {5}, 0.1}.validate()), ValidationError);
  EXPECT_THROW((SearchInstance{WalkKind::Adjacency, g, {1}, -0.1}.validate()), ValidationError);
  EXPECT_THROW((SearchInstance{WalkKind::Adjacency, g, {1}, std::nan("")}.validate()), ValidationError);
}

TEST(QuantumState, Construction) {
  const auto u = QuantumState::uniform(4);
  EXPECT_NEAR(u.probabilities().sum(), 1.0, 1e-15);
  EXPECT_EQ(QuantumState::basis(3, 2).probabilities(), Eigen::Vector3d(0, 0, 1));
  EXPECT_THROW(QuantumState(Eigen::VectorXcd::Ones(2)), ValidationError);
  EXPECT_THROW(QuantumState::basis(3, 3), ValidationError);
}

TEST(Propagator, TwoLevelRabiOscillation) {
  ComplexMatrix h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;
  const Propagator u(h);
  for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
    const auto p = u.evolve(QuantumState::basis(2, 0), t).probabilities();
    EXPECT_NEAR(p(1), std::pow(std::sin(t), 2), 1e-12) << t;
  }
}

TEST(Propagator, MatchesReferenceEvolution) {
  auto rng = testing::seeded_rng(31);
  const auto h = testing::random_hermitian(rng, 14);
  const QuantumState psi(testing::random_unit_vector(rng, 14));
  const Propagator u(h);
  for (double t : {0.1, 1.0, 13.7}) {
    const auto got = u.evolve(psi, t).amplitudes();
    EXPECT_LE((got - testing::reference_evolve(h, psi.amplitudes(), t)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Propagator, BatchMatchesSingleTime) {
  const auto h = search_hamiltonian(bipartite_instance({9, 5, 4, 2}, WalkKind::SignlessLaplacian, 0.07));
  const Propagator u(h);
  const auto psi = QuantumState::uniform(14);
  const std::vector<double> times{0.0, 0.5, 3.0, 49.9};
  const auto batch = u.evolve(psi, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_LE((batch[i].amplitudes() - u.evolve(psi, times[i]).amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_LE((evolve_state(h, psi, 3.0).amplitudes() - batch[2].amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Propagator, NormConservationAndComposition) {
  auto rng = testing::seeded_rng(32);
  for (const auto kind : {WalkKind::Laplacian, WalkKind::Adjacency, WalkKind::SignlessLaplacian}) {
    const auto h = search_hamiltonian(bipartite_instance({6, 4, 2, 1}, kind, 0.15));
    const Propagator u(h);
    const QuantumState psi(testing::random_unit_vector(rng, 10));
    for (double t : {0.5, 5.0, 50.0, 500.0}) {
      EXPECT_NEAR(u.evolve(psi, t).amplitudes().norm(), 1.0, 1e-10);
    }
    const auto two_step = u.evolve(u.evolve(psi, 1.7), 2.9).amplitudes();
    EXPECT_LE((two_step - u.evolve(psi, 4.6).amplitudes()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Propagator, ZeroGammaKeepsProbabilities) {
  auto rng = testing::seeded_rng(33);
  const auto h = search_hamiltonian(bipartite_instance({7, 3, 2, 1}, WalkKind::SignlessLaplacian, 0.0));
  const QuantumState psi(testing::random_unit_vector(rng, 10));
  const Propagator u(h);
  for (double t : {1.0, 10.0, 100.0}) {
    EXPECT_LE((u.evolve(psi, t).probabilities() - psi.probabilities()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Propagator, RejectsBadArguments) {
  const Propagator u(ComplexMatrix::Identity(3, 3));
  EXPECT_THROW(u.evolve(QuantumState::uniform(3), -1.0), ValidationError);
  EXPECT_THROW(u.evolve(QuantumState::uniform(4), 1.0), ValidationError);
  const auto psi = QuantumState::uniform(3);
  EXPECT_EQ(u.evolve(psi, 0.0).amplitudes(), psi.amplitudes());
}

TEST(SuccessProbability, SumsMarkedMass) {
  const auto psi = QuantumState::uniform(8);
  const std::vector<Vertex> marked{0, 5, 7};
  EXPECT_NEAR(success_probability(psi, marked), 3.0 / 8.0, 1e-15);
  const std::vector<Vertex> bad{8};
  EXPECT_THROW(success_probability(psi, bad), ValidationError);
}

TEST(Overlaps, FullDecompositionSumsToOne) {
  const BipartiteSpec spec{5, 3, 1, 1};
  const auto family = [&](double gamma) {
    return search_hamiltonian(bipartite_instance(spec, WalkKind::SignlessLaplacian, gamma));
  };
  const std::vector<double> gammas{0.05, 0.2, 0.33};
  const std::vector<Probe> probes{probe_from_state(QuantumState::uniform(8))};
  const auto all = overlap_profile(family, gammas, probes, 8);
  ASSERT_EQ(all.size(), 24u);
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    double sum = 0.0;
    for (std::size_t n = 0; n < 8; ++n) {
      const auto& row = all[g * 8 + n];
      EXPECT_EQ(row.gamma, gammas[g]);
      EXPECT_EQ(row.index, n);
      sum += row.weights[0];
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
  double partial = 0.0;
  for (const auto& row : overlap_profile(family, gammas, probes, 4)) {
    if (row.gamma == gammas[0]) partial += row.weights[0];
  }
  EXPECT_LE(partial, 1.0 + 1e-12);
}

TEST(Overlaps, VertexProbeWeights) {
  const std::vector<Vertex> set{0, 2};
  const auto p = probe_from_vertices(4, set);
  const ComplexMatrix h = Eigen::Vector4d(1, 2, 3, 4).asDiagonal().toDenseMatrix().cast<cd>();
  const std::vector<double> gammas{0.0};
  const std::vector<Probe> probes{p};
  const auto rows = overlap_profile([&](double) { return h; }, gammas, probes, 4);
  EXPECT_EQ(rows[0].weights[0], 1.0);
  EXPECT_EQ(rows[1].weights[0], 0.0);
  EXPECT_EQ(rows[2].weights[0], 1.0);
  EXPECT_EQ(rows[3].energy, 4.0);
}

TEST(Overlaps, RejectsBadInput) {
  const auto family = [](double) { return ComplexMatrix(ComplexMatrix::Identity(2, 2)); };
  const std::vector<double> none;
  const std::vector<double> one{0.1};
  const std::vector<Probe> ok{probe_from_state(QuantumState::uniform(2))};
  const std::vector<Probe> not_unit{Probe::Ones(2, 1)};
  const std::vector<Probe> wrong_dim{probe_from_state(QuantumState::uniform(3))};
  EXPECT_THROW(overlap_profile(family, none, ok), ValidationError);
  EXPECT_THROW(overlap_profile(family, one, not_unit), ValidationError);
  EXPECT_THROW(overlap_profile(family, one, wrong_dim), ValidationError);
}

}  // namespace
}  // namespace qwalk
