#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.hpp"

namespace qwalk {

using ComplexMatrix = Eigen::MatrixXcd;

/// Heisenberg XYZ coupling strengths (hbar = 1).
struct Couplings {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
};

/// Largest spin count for which the full 2^n space is assembled.
inline constexpr std::size_t kMaxSpins = 14;

/// Dense Hamiltonian on the full 2^n spin space. Spin i occupies bit
/// (n - 1 - i) of the basis index, so spin 0 is the most significant bit.
struct SpinHamiltonian {
  std::size_t spins = 0;
  ComplexMatrix matrix;
};

/// H = -(1/2) sum over edges {i,j} of (jx X_i X_j + jy Y_i Y_j + jz Z_i Z_j).
/// Throws SizeLimitError when the graph has more than kMaxSpins vertices.
SpinHamiltonian heisenberg_hamiltonian(const Graph& g, const Couplings& j);

/// Basis indices of the states with exactly one spin flipped; entry k is the
/// state whose excitation sits on vertex k.
std::vector<std::uint64_t> single_excitation_basis(std::size_t n);

/// Restriction of h to the single-excitation subspace, as an n x n matrix.
ComplexMatrix project_single_excitation(const SpinHamiltonian& h, std::size_t n);

/// Largest |H(i, j)| coupling a single-excitation state i to any basis
/// state j outside that subspace. Zero when jx == jy.
double single_excitation_leakage(const SpinHamiltonian& h);

enum class WalkClass { Adjacency, Laplacian, SignlessLaplacian, Other };

std::string_view to_string(WalkClass c);

/// The projected Hamiltonian each walk class must equal, identity shift
/// included: -gA, -gL - (gm/2)I, -gQ + (gm/2)I with m the edge count.
/// Throws ValidationError for WalkClass::Other.
ComplexMatrix walk_target(const Graph& g, WalkClass c, double gamma);

struct Certification {
  WalkClass walk = WalkClass::Other;
  /// Max entrywise |projected - target| against the compared target.
  double max_deviation = 0.0;
};

inline constexpr double kEquivalenceTolerance = 1e-10;

/// Projects the Heisenberg Hamiltonian onto the single-excitation subspace
/// and classifies it. A jz/jx ratio of 0, 1 or -1 selects the adjacency,
/// Laplacian or signless-Laplacian target; any other ratio is compared
/// against all three and reported as Other with the smallest deviation.
/// Throws UnsupportedCouplingError unless jx == jy != 0.
Certification certify_walk_equivalence(const Graph& g, const Couplings& j);

}  // namespace qwalk
