#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/eigensolver.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

enum class WalkKind { Laplacian, Adjacency, SignlessLaplacian };

std::string_view to_string(WalkKind kind);

/// The walk matrix W of H = -gamma W - oracle: L, A or Q.
RealMatrix walk_matrix(const Graph& g, WalkKind kind);

struct SearchInstance {
  WalkKind walk = WalkKind::SignlessLaplacian;
  Graph graph;
  std::vector<Vertex> marked;
  double gamma = 0.0;

  /// Marked set nonempty, duplicate-free and in range; gamma finite and
  /// non-negative (gamma == 0 is the oracle-only limit).
  void validate() const;
};

inline constexpr double kNormTolerance = 1e-10;

/// Unit-norm amplitude vector.
class QuantumState {
 public:
  /// Throws ValidationError when the norm differs from 1 by more than
  /// kNormTolerance.
  explicit QuantumState(ComplexVector amplitudes);

  static QuantumState uniform(std::size_t dim);
  static QuantumState basis(std::size_t dim, std::size_t index);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  Eigen::VectorXd probabilities() const { return amplitudes_.cwiseAbs2(); }

 private:
  ComplexVector amplitudes_;
};

/// H = -gamma W - sum over marked i of |i><i|.
ComplexMatrix search_hamiltonian(const SearchInstance& inst);

/// Spectral propagator exp(-iHt) built from one diagonalization of H.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& h);
  explicit Propagator(EigenDecomposition spectrum);

  /// Returns psi0 unchanged at t == 0. Throws ValidationError on a
  /// dimension mismatch or negative t.
  QuantumState evolve(const QuantumState& psi0, double t) const;

  /// Evolves psi0 to every time in `times`, reusing the eigenbasis
  /// coefficients of psi0.
  std::vector<QuantumState> evolve(const QuantumState& psi0, std::span<const double> times) const;

  const EigenDecomposition& spectrum() const noexcept { return spectrum_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(spectrum_.eigenvalues.size()); }

 private:
  ComplexVector evolve_coefficients(const ComplexVector& coefficients, double t) const;

  EigenDecomposition spectrum_;
};

/// One-shot |psi(t)> = V exp(-i Lambda t) V^dagger |psi0>.
QuantumState evolve_state(const ComplexMatrix& h, const QuantumState& psi0, double t);

/// Total probability on the marked vertices. Throws ValidationError on an
/// out-of-range index.
double success_probability(const QuantumState& psi, std::span<const Vertex> marked);

/// A probe is a subspace given by orthonormal columns; its weight in a
/// vector psi is the squared norm of the projection, sum_k |<col_k|psi>|^2.
/// A single column reproduces |<probe|psi>|^2; unit vectors e_i summed over
/// a vertex set reproduce the per-set weights L_n and R_n.
using Probe = ComplexMatrix;

Probe probe_from_state(const QuantumState& state);
Probe probe_from_vertices(std::size_t dim, std::span<const Vertex> vertices);

struct OverlapRow {
  double gamma = 0.0;
  std::size_t index = 0;  // eigenpair index, ascending energy
  double energy = 0.0;
  std::vector<double> weights;  // one per probe
};

using HamiltonianFamily = std::function<ComplexMatrix(double gamma)>;

/// Diagonalizes hamiltonian_at(gamma) for every gamma and reports the probe
/// weights of the `lowest` lowest eigenvectors. Rows are ordered by the
/// position of gamma in `gammas`, then by eigen-index; the per-gamma work
/// may run concurrently. Throws ValidationError on an empty gamma list or
/// a probe whose columns are not orthonormal.
std::vector<OverlapRow> overlap_profile(const HamiltonianFamily& hamiltonian_at,
                                        std::span<const double> gammas,
                                        std::span<const Probe> probes, std::size_t lowest = 4);

}  // namespace qwalk
