#include "qwalk/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

using cd = std::complex<double>;

// Rotation entries below this fraction of ||H||_F are left alone; their
// total contribution to the off-diagonal norm is far below the tolerance.
constexpr double kNegligible = 1e-20;
// Relative magnitude window inside which eigenvector entries count as tied
// for the phase convention.
constexpr double kPhaseTieWindow = 1e-10;

// Solves t^2 + 2 t theta - 1 = 0 for the smaller root; large theta is
// handled without overflow.
double rotation_tangent(double theta) {
  if (std::abs(theta) > 1e150) return 0.5 / theta;
  const double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  return theta < 0.0 ? -t : t;
}

template <class Matrix>
double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index q = 1; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < q; ++p) sum += std::norm(a(p, q));
  }
  return std::sqrt(2.0 * sum);
}

void check_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw ValidationError("eigensolver input must be square");
  if (rows == 0) throw ValidationError("eigensolver input must be nonempty");
}

// Rephases columns, then sorts eigenpairs ascending with the documented
// tie-break.
EigenDecomposition finish(Eigen::VectorXd values, ComplexMatrix vectors, std::size_t sweeps) {
  const Eigen::Index n = values.size();
  for (Eigen::Index k = 0; k < n; ++k) {
    auto col = vectors.col(k);
    const double largest = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(col(pivot)) < largest * (1.0 - kPhaseTieWindow)) ++pivot;
    const cd phase = col(pivot) / std::abs(col(pivot));
    col *= std::conj(phase);
    col(pivot) = cd(col(pivot).real(), 0.0);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
    if (values(l) != values(r)) return values(l) < values(r);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double lv = vectors(k, l).real();
      const double rv = vectors(k, r).real();
      if (lv != rv) return lv < rv;
    }
    return false;
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  out.sweeps = sweeps;
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = values(src);
    out.eigenvectors.col(k) = vectors.col(src);
  }
  return out;
}

}  // namespace

EigenDecomposition eig_symmetric(const Eigen::MatrixXd& h, const JacobiOptions& options) {
  check_square(h.rows(), h.cols());
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > options.hermitian_tolerance * scale) {
    throw ValidationError("eigensolver input is not symmetric");
  }

  const Eigen::Index n = h.rows();
  Eigen::MatrixXd a = 0.5 * (h + h.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double norm = a.norm();
  const double target = options.relative_tolerance * norm;
  const double negligible = kNegligible * norm;

  std::size_t sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == options.max_sweeps) {
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(options.max_sweeps) +
                             " sweeps");
    }
    ++sweep;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= negligible) continue;
        const double t = rotation_tangent((a(q, q) - a(p, p)) / (2.0 * apq));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = a(p, p) - t * apq;
        const double aqq = a(q, q) + t * apq;

        const Eigen::VectorXd colp = a.col(p);
        a.col(p) = c * colp - s * a.col(q);
        a.col(q) = s * colp + c * a.col(q);
        const Eigen::RowVectorXd rowp = a.row(p);
        a.row(p) = c * rowp - s * a.row(q);
        a.row(q) = s * rowp + c * a.row(q);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app;
        a(q, q) = aqq;

        const Eigen::VectorXd vp = v.col(p);
        v.col(p) = c * vp - s * v.col(q);
        v.col(q) = s * vp + c * v.col(q);
      }
    }
  }
  return finish(a.diagonal(), v.cast<cd>(), sweep);
}

EigenDecomposition eig_hermitian(const ComplexMatrix& h, const JacobiOptions& options) {
  check_square(h.rows(), h.cols());
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) return eig_symmetric(h.real(), options);

  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > options.hermitian_tolerance * scale) {
    throw ValidationError("eigensolver input is not Hermitian");
  }

  const Eigen::Index n = h.rows();
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double norm = a.norm();
  const double target = options.relative_tolerance * norm;
  const double negligible = kNegligible * norm;

  std::size_t sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == options.max_sweeps) {
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(options.max_sweeps) +
                             " sweeps");
    }
    ++sweep;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= negligible) continue;
        // Rephase q so the (p, q) entry is real, then rotate as in the
        // real case: U = diag(1, e^{-i phi}) R(theta).
        const cd phase = apq / mag;
        const cd w = std::conj(phase);
        const double t = rotation_tangent((a(q, q).real() - a(p, p).real()) / (2.0 * mag));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = a(p, p).real() - t * mag;
        const double aqq = a(q, q).real() + t * mag;

        const ComplexVector colp = a.col(p);
        a.col(p) = c * colp - (s * w) * a.col(q);
        a.col(q) = s * colp + (c * w) * a.col(q);
        const Eigen::RowVectorXcd rowp = a.row(p);
        a.row(p) = c * rowp - (s * phase) * a.row(q);
        a.row(q) = s * rowp + (c * phase) * a.row(q);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app;
        a(q, q) = aqq;

        const ComplexVector vp = v.col(p);
        v.col(p) = c * vp - (s * w) * v.col(q);
        v.col(q) = s * vp + (c * w) * v.col(q);
      }
    }
  }
  return finish(a.diagonal().real(), std::move(v), sweep);
}

}  // namespace qwalk
