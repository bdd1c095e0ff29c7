#include "qwalk/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

using cd = std::complex<double>;

void check_marked(std::span<const Vertex> marked, std::size_t n) {
  for (const auto v : marked) {
    if (v >= n) throw ValidationError("marked vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::Laplacian: return "laplacian";
    case WalkKind::Adjacency: return "adjacency";
    case WalkKind::SignlessLaplacian: return "signless";
  }
  return "signless";
}

RealMatrix walk_matrix(const Graph& g, WalkKind kind) {
  switch (kind) {
    case WalkKind::Laplacian: return laplacian(g);
    case WalkKind::Adjacency: return adjacency_matrix(g);
    case WalkKind::SignlessLaplacian: return signless_laplacian(g);
  }
  return signless_laplacian(g);
}

void SearchInstance::validate() const {
  if (marked.empty()) throw ValidationError("search instance needs at least one marked vertex");
  check_marked(marked, graph.vertex_count());
  std::vector<Vertex> sorted = marked;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("marked vertices must be distinct");
  }
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw ValidationError("jumping rate must be finite and non-negative");
  }
}

QuantumState::QuantumState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw ValidationError("state must have positive dimension");
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw ValidationError("state norm " + std::to_string(norm) + " is not 1");
  }
}

QuantumState QuantumState::uniform(std::size_t dim) {
  if (dim == 0) throw ValidationError("state must have positive dimension");
  const auto n = static_cast<Eigen::Index>(dim);
  return QuantumState(ComplexVector::Constant(n, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ValidationError("basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return QuantumState(std::move(v));
}

ComplexMatrix search_hamiltonian(const SearchInstance& inst) {
  inst.validate();
  RealMatrix h = -inst.gamma * walk_matrix(inst.graph, inst.walk);
  for (const auto v : inst.marked) h(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) -= 1.0;
  return h.cast<cd>();
}

Propagator::Propagator(const ComplexMatrix& h) : spectrum_(eig_hermitian(h)) {}

Propagator::Propagator(EigenDecomposition spectrum) : spectrum_(std::move(spectrum)) {}

ComplexVector Propagator::evolve_coefficients(const ComplexVector& coefficients, double t) const {
  const auto& lambda = spectrum_.eigenvalues;
  ComplexVector phased(coefficients.size());
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    phased(k) = std::polar(1.0, -lambda(k) * t) * coefficients(k);
  }
  return spectrum_.eigenvectors * phased;
}

QuantumState Propagator::evolve(const QuantumState& psi0, double t) const {
  if (psi0.dimension() != dimension()) throw ValidationError("state and Hamiltonian dimensions differ");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("evolution time must be finite and >= 0");
  if (t == 0.0) return psi0;
  const ComplexVector coefficients = spectrum_.eigenvectors.adjoint() * psi0.amplitudes();
  return QuantumState(evolve_coefficients(coefficients, t));
}

std::vector<QuantumState> Propagator::evolve(const QuantumState& psi0,
                                             std::span<const double> times) const {
  if (psi0.dimension() != dimension()) throw ValidationError("state and Hamiltonian dimensions differ");
  const ComplexVector coefficients = spectrum_.eigenvectors.adjoint() * psi0.amplitudes();
  std::vector<QuantumState> out;
  out.reserve(times.size());
  for (const double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("evolution time must be finite and >= 0");
    out.push_back(t == 0.0 ? psi0 : QuantumState(evolve_coefficients(coefficients, t)));
  }
  return out;
}

QuantumState evolve_state(const ComplexMatrix& h, const QuantumState& psi0, double t) {
  if (static_cast<std::size_t>(h.rows()) != psi0.dimension()) {
    throw ValidationError("state and Hamiltonian dimensions differ");
  }
  return Propagator(h).evolve(psi0, t);
}

double success_probability(const QuantumState& psi, std::span<const Vertex> marked) {
  check_marked(marked, psi.dimension());
  double p = 0.0;
  for (const auto v : marked) p += std::norm(psi.amplitudes()(static_cast<Eigen::Index>(v)));
  return p;
}

Probe probe_from_state(const QuantumState& state) { return state.amplitudes(); }

Probe probe_from_vertices(std::size_t dim, std::span<const Vertex> vertices) {
  check_marked(vertices, dim);
  Probe p = Probe::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vertices.size()));
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    p(static_cast<Eigen::Index>(vertices[k]), static_cast<Eigen::Index>(k)) = 1.0;
  }
  return p;
}

std::vector<OverlapRow> overlap_profile(const HamiltonianFamily& hamiltonian_at,
                                        std::span<const double> gammas,
                                        std::span<const Probe> probes, std::size_t lowest) {
  if (gammas.empty()) throw ValidationError("overlap profile needs at least one jumping rate");
  for (const auto& probe : probes) {
    const auto k = probe.cols();
    if (k > 0 && (probe.adjoint() * probe - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff() >
                     kNormTolerance) {
      throw ValidationError("probe columns must be orthonormal");
    }
  }

  auto per_gamma = ordered_parallel_map(gammas.size(), [&](std::size_t g) {
    const double gamma = gammas[g];
    const ComplexMatrix h = hamiltonian_at(gamma);
    for (const auto& probe : probes) {
      if (probe.rows() != h.rows()) throw ValidationError("probe dimension differs from Hamiltonian");
    }
    const auto spectrum = eig_hermitian(h);
    const auto count = std::min<std::size_t>(lowest, static_cast<std::size_t>(h.rows()));
    std::vector<OverlapRow> rows;
    rows.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
      const auto col = spectrum.eigenvectors.col(static_cast<Eigen::Index>(n));
      OverlapRow row{gamma, n, spectrum.eigenvalues(static_cast<Eigen::Index>(n)), {}};
      row.weights.reserve(probes.size());
      for (const auto& probe : probes) row.weights.push_back((probe.adjoint() * col).squaredNorm());
      rows.push_back(std::move(row));
    }
    return rows;
  });

  std::vector<OverlapRow> out;
  for (auto& rows : per_gamma) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qwalk
