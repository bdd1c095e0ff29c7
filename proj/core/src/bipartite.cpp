#include "qwalk/bipartite.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk::bipartite {

namespace {

double as_double(std::size_t x) { return static_cast<double>(x); }

void zero_inert(const BipartiteSpec& spec, Matrix4& m) {
  const auto inert = inert_coordinates(spec);
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (inert[static_cast<std::size_t>(i)]) {
      m.row(i).setZero();
      m.col(i).setZero();
    }
  }
}

void require_marked(const BipartiteSpec& spec, Critical which) {
  if ((which == Critical::Left ? spec.k1 : spec.k2) == 0) {
    throw NoDegenerateLiftError(which == Critical::Left
                                    ? "left-critical analysis needs k1 >= 1"
                                    : "right-critical analysis needs k2 >= 1");
  }
}

// Relabels a<->b and c<->d.
Vector4 swap_sides(const Vector4& v) { return Vector4(v(kB), v(kA), v(kD), v(kC)); }

DegenerateSystem left_degenerate_system(const BipartiteSpec& spec) {
  const double n1 = as_double(spec.n1);
  const double n2 = as_double(spec.n2);
  const double n = n1 + n2;
  const double gamma = 1.0 / n1;
  const double split = std::sqrt(as_double(spec.k1) * n2 / (n1 * n));
  const double centre = -1.0 - n2 / n1;

  const auto h0 = asymptotic_eigensystem_h0(spec, gamma);
  const Vector4& a = h0[0].vector;
  const Vector4& u = h0[2].vector;
  const double r = std::numbers::sqrt2 / 2.0;

  DegenerateSystem sys;
  sys.pairs[0] = h0[1];
  sys.pairs[1] = {r * (a + u), centre - split};
  sys.pairs[2] = {r * (a - u), centre + split};
  sys.pairs[3] = h0[3];
  sys.gap = 2.0 * split;
  return sys;
}

ClassProbabilities left_closed_form(const BipartiteSpec& spec, InitialStateKind start, double t) {
  const double n1 = as_double(spec.n1);
  const double n2 = as_double(spec.n2);
  const double n = n1 + n2;
  const double half_angle = 0.5 * left_degenerate_system(spec).gap * t;
  const double s = std::sin(half_angle);
  const double c = std::cos(half_angle);

  if (start == InitialStateKind::SignlessSQ) {
    return {s * s, 0.0, n2 / n * c * c, n1 / n * c * c};
  }
  const double n3 = n * n * n;
  const double diff = n1 - n2;
  const double cross = 4.0 * n1 * n2 * diff / n3 * c * std::cos((1.0 + n2 / n1) * t);
  return {
      4.0 * n1 * n2 / (n * n) * s * s,
      0.0,
      4.0 * n1 * n2 * n2 / n3 * c * c + cross + n1 * diff * diff / n3,
      4.0 * n1 * n1 * n2 / n3 * c * c - cross + n2 * diff * diff / n3,
  };
}

}  // namespace

std::array<std::size_t, 4> class_sizes(const BipartiteSpec& spec) {
  return {spec.k1, spec.k2, spec.unmarked_left(), spec.unmarked_right()};
}

std::array<bool, 4> inert_coordinates(const BipartiteSpec& spec) {
  const auto sizes = class_sizes(spec);
  return {sizes[0] == 0, sizes[1] == 0, sizes[2] == 0, sizes[3] == 0};
}

ReducedState::ReducedState(const BipartiteSpec& spec, Eigen::Vector4cd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  spec.validate();
  const auto inert = inert_coordinates(spec);
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (inert[static_cast<std::size_t>(i)] && amplitudes_(i) != 0.0) {
      throw ValidationError("reduced state has amplitude on an empty vertex class");
    }
  }
  if (!(std::abs(amplitudes_.norm() - 1.0) <= kNormTolerance)) {
    throw ValidationError("reduced state is not normalized");
  }
}

ClassProbabilities ReducedState::probabilities() const {
  const Vector4 p = amplitudes_.cwiseAbs2();
  return {p(kA), p(kB), p(kC), p(kD)};
}

std::string_view to_string(InitialStateKind kind) {
  switch (kind) {
    case InitialStateKind::UniformS: return "s";
    case InitialStateKind::AdjacencySA: return "sa";
    case InitialStateKind::SignlessSQ: return "sq";
  }
  return "s";
}

Matrix4 reduced_walk_matrix(const BipartiteSpec& spec, WalkKind walk) {
  spec.validate();
  const double k1 = as_double(spec.k1);
  const double k2 = as_double(spec.k2);
  const double nk1 = as_double(spec.unmarked_left());
  const double nk2 = as_double(spec.unmarked_right());

  Matrix4 adj = Matrix4::Zero();
  adj(kA, kB) = adj(kB, kA) = std::sqrt(k1 * k2);
  adj(kA, kD) = adj(kD, kA) = std::sqrt(k1 * nk2);
  adj(kB, kC) = adj(kC, kB) = std::sqrt(k2 * nk1);
  adj(kC, kD) = adj(kD, kC) = std::sqrt(nk1 * nk2);
  const Vector4 degree(as_double(spec.n2), as_double(spec.n1), as_double(spec.n2),
                       as_double(spec.n1));

  Matrix4 w = adj;
  switch (walk) {
    case WalkKind::Adjacency: break;
    case WalkKind::Laplacian: w -= degree.asDiagonal(); break;
    case WalkKind::SignlessLaplacian: w += degree.asDiagonal(); break;
  }
  zero_inert(spec, w);
  return w;
}

Matrix4 reduced_hamiltonian(const BipartiteSpec& spec, WalkKind walk, double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw ValidationError("jumping rate must be finite and non-negative");
  }
  Matrix4 h = -gamma * reduced_walk_matrix(spec, walk);
  h(kA, kA) -= 1.0;
  h(kB, kB) -= 1.0;
  zero_inert(spec, h);
  return h;
}

ReducedState initial_state(const BipartiteSpec& spec, InitialStateKind kind) {
  spec.validate();
  const double n1 = as_double(spec.n1);
  const double n2 = as_double(spec.n2);
  const double n = n1 + n2;
  double left = 0.0;   // per-vertex amplitude on the left set
  double right = 0.0;  // and on the right set
  switch (kind) {
    case InitialStateKind::UniformS:
      left = right = 1.0 / std::sqrt(n);
      break;
    case InitialStateKind::AdjacencySA:
      left = 1.0 / std::sqrt(2.0 * n1);
      right = 1.0 / std::sqrt(2.0 * n2);
      break;
    case InitialStateKind::SignlessSQ:
      left = std::sqrt(n2 / (n1 * n));
      right = std::sqrt(n1 / (n2 * n));
      break;
  }
  const auto sizes = class_sizes(spec);
  Eigen::Vector4cd amp(left * std::sqrt(as_double(sizes[0])), right * std::sqrt(as_double(sizes[1])),
                       left * std::sqrt(as_double(sizes[2])), right * std::sqrt(as_double(sizes[3])));
  return ReducedState(spec, amp);
}

Eigen::MatrixXd class_isometry(const BipartiteSpec& spec) {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(spec.total());
  Eigen::MatrixXd iso = Eigen::MatrixXd::Zero(n, 4);
  auto fill = [&](Eigen::Index col, std::size_t first, std::size_t count) {
    if (count == 0) return;
    const double w = 1.0 / std::sqrt(as_double(count));
    for (std::size_t v = first; v < first + count; ++v) iso(static_cast<Eigen::Index>(v), col) = w;
  };
  fill(kA, 0, spec.k1);
  fill(kC, spec.k1, spec.unmarked_left());
  fill(kB, spec.n1, spec.k2);
  fill(kD, spec.n1 + spec.k2, spec.unmarked_right());
  return iso;
}

QuantumState reduced_to_full(const BipartiteSpec& spec, const ReducedState& state) {
  return QuantumState(class_isometry(spec).cast<std::complex<double>>() * state.amplitudes());
}

ClassProbabilities class_probabilities(const BipartiteSpec& spec, const QuantumState& full) {
  spec.validate();
  if (full.dimension() != spec.total()) throw ValidationError("state dimension differs from N1 + N2");
  const Eigen::VectorXd p = full.probabilities();
  auto mass = [&](std::size_t first, std::size_t count) {
    return p.segment(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(count)).sum();
  };
  return {mass(0, spec.k1), mass(spec.n1, spec.k2), mass(spec.k1, spec.unmarked_left()),
          mass(spec.n1 + spec.k2, spec.unmarked_right())};
}

std::array<EigenPair, 4> asymptotic_eigensystem_h0(const BipartiteSpec& spec, double gamma) {
  spec.validate();
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("jumping rate must be positive");
  const double n1 = as_double(spec.n1);
  const double n2 = as_double(spec.n2);
  const double n = n1 + n2;
  const double rn = std::sqrt(n);
  return {{
      {Vector4::Unit(kA), -1.0 - gamma * n2},
      {Vector4::Unit(kB), -1.0 - gamma * n1},
      {Vector4(0.0, 0.0, std::sqrt(n2) / rn, std::sqrt(n1) / rn), -gamma * n},
      {Vector4(0.0, 0.0, std::sqrt(n1) / rn, -std::sqrt(n2) / rn), 0.0},
  }};
}

DegenerateSystem degenerate_correction(const BipartiteSpec& spec, Critical which) {
  spec.validate();
  require_marked(spec, which);
  if (which == Critical::Left) return left_degenerate_system(spec);
  DegenerateSystem sys = left_degenerate_system(spec.swapped());
  for (auto& pair : sys.pairs) pair.vector = swap_sides(pair.vector);
  return sys;
}

double critical_gamma(const BipartiteSpec& spec, Critical which) {
  spec.validate();
  return 1.0 / as_double(which == Critical::Left ? spec.n1 : spec.n2);
}

double critical_runtime(const BipartiteSpec& spec, Critical which) {
  return std::numbers::pi / degenerate_correction(spec, which).gap;
}

ClassProbabilities closed_form_probabilities(const BipartiteSpec& spec, InitialStateKind start,
                                             Critical which, double t) {
  spec.validate();
  if (start == InitialStateKind::AdjacencySA) {
    throw ValidationError("closed-form signless probabilities exist only for |s> and |s_Q>");
  }
  require_marked(spec, which);
  if (which == Critical::Left) return left_closed_form(spec, start, t);
  return left_closed_form(spec.swapped(), start, t).swapped();
}

}  // namespace qwalk::bipartite
