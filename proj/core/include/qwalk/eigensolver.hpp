#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace qwalk {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Eigenvalues ascending; eigenvectors are the orthonormal columns.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
  std::size_t sweeps = 0;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm falls below
  /// relative_tolerance times the Frobenius norm of the input.
  double relative_tolerance = 1e-12;
  std::size_t max_sweeps = 100;
  /// Inputs whose Hermitian defect exceeds this are rejected.
  double hermitian_tolerance = 1e-10;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Output is deterministic for identical input: rotations follow a fixed
/// row-major sweep order, each eigenvector is rephased so its
/// largest-magnitude entry (lowest index among ties) is real and positive,
/// and equal eigenvalues are ordered lexicographically by the real parts
/// of their eigenvector entries. Real symmetric inputs take a real-arithmetic
/// path with the same conventions.
///
/// Throws ValidationError for non-square or non-Hermitian input and
/// ConvergenceError when max_sweeps is exhausted.
EigenDecomposition eig_hermitian(const ComplexMatrix& h, const JacobiOptions& options = {});

EigenDecomposition eig_symmetric(const Eigen::MatrixXd& h, const JacobiOptions& options = {});

}  // namespace qwalk
