#include "qwalk/spin_network.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

using cd = std::complex<double>;

std::uint64_t spin_bit(std::size_t n, Vertex v) { return std::uint64_t{1} << (n - 1 - v); }

// Each two-site Pauli string sigma_i sigma_j maps a basis state |x> to
// phase * |x ^ flip>. XX and YY flip both bits; ZZ is diagonal.
//   XX|x> = |x ^ m|
//   YY|x> = -(-1)^(b_i + b_j) |x ^ m>   (Y|0> = i|1>, Y|1> = -i|0>)
//   ZZ|x> = (-1)^(b_i + b_j) |x>
void add_edge_terms(ComplexMatrix& h, std::size_t n, Vertex i, Vertex j, const Couplings& c) {
  const auto bi = spin_bit(n, i);
  const auto bj = spin_bit(n, j);
  const auto flip = bi | bj;
  const auto dim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const bool parity_odd = (((x & bi) != 0) != ((x & bj) != 0));
    const double zz = parity_odd ? -1.0 : 1.0;
    const auto col = static_cast<Eigen::Index>(x);
    const auto row = static_cast<Eigen::Index>(x ^ flip);
    h(row, col) += -0.5 * (c.jx - c.jy * zz);
    h(col, col) += -0.5 * c.jz * zz;
  }
}

}  // namespace

SpinHamiltonian heisenberg_hamiltonian(const Graph& g, const Couplings& j) {
  const auto n = g.vertex_count();
  if (n > kMaxSpins) {
    throw SizeLimitError("full spin space limited to " + std::to_string(kMaxSpins) +
                         " spins, graph has " + std::to_string(n));
  }
  if (!std::isfinite(j.jx) || !std::isfinite(j.jy) || !std::isfinite(j.jz)) {
    throw ValidationError("coupling constants must be finite");
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  SpinHamiltonian h{n, ComplexMatrix::Zero(dim, dim)};
  for (const auto& [u, v] : g.edges()) add_edge_terms(h.matrix, n, u, v, j);
  return h;
}

std::vector<std::uint64_t> single_excitation_basis(std::size_t n) {
  if (n == 0) throw ValidationError("single-excitation basis needs n >= 1");
  if (n > 63) throw SizeLimitError("basis index does not fit in 64 bits");
  std::vector<std::uint64_t> basis(n);
  for (std::size_t k = 0; k < n; ++k) basis[k] = spin_bit(n, k);
  return basis;
}

ComplexMatrix project_single_excitation(const SpinHamiltonian& h, std::size_t n) {
  if (n == 0 || n > kMaxSpins || h.spins != n ||
      h.matrix.rows() != static_cast<Eigen::Index>(std::uint64_t{1} << n) ||
      h.matrix.cols() != h.matrix.rows()) {
    throw ValidationError("spin Hamiltonian dimension does not match 2^" + std::to_string(n));
  }
  const auto basis = single_excitation_basis(n);
  const auto m = static_cast<Eigen::Index>(n);
  ComplexMatrix out(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      out(r, c) = h.matrix(static_cast<Eigen::Index>(basis[static_cast<std::size_t>(r)]),
                           static_cast<Eigen::Index>(basis[static_cast<std::size_t>(c)]));
    }
  }
  return out;
}

double single_excitation_leakage(const SpinHamiltonian& h) {
  const auto basis = single_excitation_basis(h.spins);
  double worst = 0.0;
  for (const auto b : basis) {
    const auto col = static_cast<Eigen::Index>(b);
    for (Eigen::Index row = 0; row < h.matrix.rows(); ++row) {
      if (std::popcount(static_cast<std::uint64_t>(row)) == 1) continue;
      worst = std::max(worst, std::abs(h.matrix(row, col)));
      worst = std::max(worst, std::abs(h.matrix(col, row)));
    }
  }
  return worst;
}

std::string_view to_string(WalkClass c) {
  switch (c) {
    case WalkClass::Adjacency: return "Adjacency";
    case WalkClass::Laplacian: return "Laplacian";
    case WalkClass::SignlessLaplacian: return "SignlessLaplacian";
    case WalkClass::Other: return "Other";
  }
  return "Other";
}

ComplexMatrix walk_target(const Graph& g, WalkClass c, double gamma) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const double shift = gamma * static_cast<double>(g.edge_count()) / 2.0;
  const RealMatrix identity = RealMatrix::Identity(n, n);
  switch (c) {
    case WalkClass::Adjacency:
      return (-gamma * adjacency_matrix(g)).cast<cd>();
    case WalkClass::Laplacian:
      return (-gamma * laplacian(g) - shift * identity).cast<cd>();
    case WalkClass::SignlessLaplacian:
      return (-gamma * signless_laplacian(g) + shift * identity).cast<cd>();
    case WalkClass::Other:
      break;
  }
  throw ValidationError("no target matrix for WalkClass::Other");
}

Certification certify_walk_equivalence(const Graph& g, const Couplings& j) {
  if (j.jx != j.jy) throw UnsupportedCouplingError("walk equivalence requires jx == jy");
  if (j.jx == 0.0) throw UnsupportedCouplingError("walk equivalence requires a nonzero jumping rate");

  const double gamma = j.jx;
  const ComplexMatrix projected =
      project_single_excitation(heisenberg_hamiltonian(g, j), g.vertex_count());
  auto deviation = [&](WalkClass c) {
    return (projected - walk_target(g, c, gamma)).cwiseAbs().maxCoeff();
  };

  constexpr double kRatioTolerance = 1e-12;
  const double ratio = j.jz / j.jx;
  constexpr std::array<std::pair<double, WalkClass>, 3> kRatios{{
      {0.0, WalkClass::Adjacency},
      {1.0, WalkClass::Laplacian},
      {-1.0, WalkClass::SignlessLaplacian},
  }};
  for (const auto& [r, cls] : kRatios) {
    if (std::abs(ratio - r) <= kRatioTolerance) {
      const double dev = deviation(cls);
      return {dev <= kEquivalenceTolerance ? cls : WalkClass::Other, dev};
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [r, cls] : kRatios) best = std::min(best, deviation(cls));
  return {WalkClass::Other, best};
}

}  // namespace qwalk
