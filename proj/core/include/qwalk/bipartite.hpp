#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/evolve.hpp"
#include "qwalk/graph.hpp"

// Reduced model of search on the complete bipartite graph K_{N1,N2}.
//
// Dynamics from any class-symmetric start state stay in the span of four
// class states, each a uniform superposition over one vertex class:
//   a: left marked (k1)     b: right marked (k2)
//   c: left unmarked (N1-k1) d: right unmarked (N2-k2)
// A class with no vertices (k_i == 0 or k_i == N_i) is inert: its row and
// column of every reduced operator are zero and its amplitude stays zero.
namespace qwalk::bipartite {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

enum Coordinate : Eigen::Index { kA = 0, kB = 1, kC = 2, kD = 3 };

/// Class sizes (k1, k2, N1-k1, N2-k2).
std::array<std::size_t, 4> class_sizes(const BipartiteSpec& spec);

/// True for coordinates whose class is empty.
std::array<bool, 4> inert_coordinates(const BipartiteSpec& spec);

struct ClassProbabilities {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double success() const noexcept { return a + b; }
  double total() const noexcept { return a + b + c + d; }
  /// Relabels the partite sets: a<->b, c<->d.
  ClassProbabilities swapped() const noexcept { return {b, a, d, c}; }

  friend bool operator==(const ClassProbabilities&, const ClassProbabilities&) = default;
};

/// Unit-norm state over the (a, b, c, d) basis.
class ReducedState {
 public:
  /// Throws ValidationError when the norm is not 1 or an inert coordinate
  /// carries amplitude.
  ReducedState(const BipartiteSpec& spec, Eigen::Vector4cd amplitudes);

  const Eigen::Vector4cd& amplitudes() const noexcept { return amplitudes_; }
  ClassProbabilities probabilities() const;
  QuantumState as_state() const { return QuantumState(amplitudes_); }

 private:
  Eigen::Vector4cd amplitudes_;
};

enum class InitialStateKind { UniformS, AdjacencySA, SignlessSQ };

std::string_view to_string(InitialStateKind kind);

enum class Critical { Left, Right };

/// Reduced walk matrix (L, A or Q) in the class basis.
Matrix4 reduced_walk_matrix(const BipartiteSpec& spec, WalkKind walk);

/// H = -gamma W - diag(1, 1, 0, 0), with inert rows and columns zeroed.
Matrix4 reduced_hamiltonian(const BipartiteSpec& spec, WalkKind walk, double gamma);

/// |s>, |s_A> or |s_Q> folded into the class basis.
ReducedState initial_state(const BipartiteSpec& spec, InitialStateKind kind);

/// N x 4 isometry whose columns are the class states on the canonical
/// complete_bipartite vertex layout (inert columns are zero).
Eigen::MatrixXd class_isometry(const BipartiteSpec& spec);

/// Spreads each class amplitude uniformly over its class.
QuantumState reduced_to_full(const BipartiteSpec& spec, const ReducedState& state);

/// Probability mass per vertex class of a full N-vertex state.
ClassProbabilities class_probabilities(const BipartiteSpec& spec, const QuantumState& full);

struct EigenPair {
  Vector4 vector;
  double value = 0.0;
};

/// Eigensystem of the dominant part H0 of the reduced signless Hamiltonian,
/// in the order a, b, u, v:
///   a: -1 - gamma N2        b: -1 - gamma N1
///   u = (sqrt(N2) c + sqrt(N1) d)/sqrt(N): -gamma N
///   v = (sqrt(N1) c - sqrt(N2) d)/sqrt(N): 0
std::array<EigenPair, 4> asymptotic_eigensystem_h0(const BipartiteSpec& spec, double gamma);

struct DegenerateSystem {
  /// psi0..psi3 in the order the left-critical analysis labels them.
  std::array<EigenPair, 4> pairs;
  /// Splitting of the lifted pair, E2 - E1.
  double gap = 0.0;
};

/// First-order degenerate perturbation theory at gamma = 1/N1 (Left) or
/// 1/N2 (Right). Left gives psi0 = b (E = -2), psi1,2 = (a +- u)/sqrt2 with
/// E = -1 - N2/N1 -+ sqrt(k1 N2 / (N1 N)), psi3 = v (E = 0); Right follows by
/// swapping the partite sets. Throws NoDegenerateLiftError when the
/// critical side has no marked vertex.
DegenerateSystem degenerate_correction(const BipartiteSpec& spec, Critical which);

/// The critical jumping rate 1/N1 (Left) or 1/N2 (Right).
double critical_gamma(const BipartiteSpec& spec, Critical which);

/// pi / gap of the degenerate correction.
double critical_runtime(const BipartiteSpec& spec, Critical which);

/// Asymptotic class probabilities of the signless walk at the critical
/// jumping rate, from |s> or |s_Q>. Throws ValidationError for AdjacencySA
/// and NoDegenerateLiftError when the critical side has no marked vertex.
ClassProbabilities closed_form_probabilities(const BipartiteSpec& spec, InitialStateKind start,
                                             Critical which, double t);

// ---------------------------------------------------------------------------
// Runtimes and the fastest-walk regimes.

enum class Fastest { LaplacianLeft, LaplacianRight, Adjacency, SignlessLeft, SignlessRight };

/// Tie-break order for equal runtimes.
inline constexpr std::array<Fastest, 5> kFastestOrder{
    Fastest::LaplacianLeft, Fastest::LaplacianRight, Fastest::Adjacency, Fastest::SignlessLeft,
    Fastest::SignlessRight};

std::string_view to_string(Fastest f);

/// Runtimes of the deterministic algorithms. An entry is absent when the
/// marked set it targets is empty.
struct RuntimeTable {
  std::optional<double> laplacian_left;   // (pi/2) sqrt(N / k1)
  std::optional<double> laplacian_right;  // (pi/2) sqrt(N / k2)
  std::optional<double> adjacency;        // (pi/sqrt2) sqrt(N1 N2 / (k2 N1 + k1 N2))
  std::optional<double> signless_left;    // (pi/2) sqrt(N1 N / (k1 N2))
  std::optional<double> signless_right;   // (pi/2) sqrt(N2 N / (k2 N1))

  std::optional<double> get(Fastest f) const;
  /// Largest defined runtime.
  double max() const;
};

RuntimeTable runtime_table(const BipartiteSpec& spec);

/// Regime boundaries on the marked count of the larger partite set. With
/// N1 > N2 the axis is k1: below `lower` the right-targeting signless walk
/// wins, above `upper` the left-targeting Laplacian walk wins, and the
/// adjacency walk wins in between. N2 > N1 is the mirror image on k2.
struct RegimeThresholds {
  Critical larger_side = Critical::Left;
  double lower = 0.0;
  double upper = 0.0;
  Fastest predicted = Fastest::Adjacency;
};

struct RegimeClassification {
  Fastest fastest = Fastest::Adjacency;
  RuntimeTable runtimes;
  /// Absent when N1 == N2.
  std::optional<RegimeThresholds> thresholds;
  /// |N1 - N2| < sqrt(N): the graph is close to regular and every walk
  /// behaves like the adjacency walk, so the regime table does not apply.
  bool near_regular = false;
};

/// Ranking uses exact integer arithmetic on squared runtimes, so equal
/// runtimes are detected exactly and resolved by kFastestOrder.
RegimeClassification fastest_regime(const BipartiteSpec& spec);

enum class SearchTarget { LeftMarked, RightMarked, Mixed };

/// Runtime and asymptotic success probability of one algorithm.
struct ClosedFormPeak {
  double runtime = 0.0;
  double peak_success = 0.0;
  SearchTarget target = SearchTarget::Mixed;
  double gamma_critical = 0.0;
};

struct SummaryRow {
  WalkKind walk;
  InitialStateKind start;
  ClosedFormPeak peak;
};

/// The summary of search on K_{N1,N2} for all three walks; rows whose
/// target set is empty are omitted.
std::vector<SummaryRow> summary_table(const BipartiteSpec& spec);

}  // namespace qwalk::bipartite
