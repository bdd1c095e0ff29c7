#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwalk/bipartite.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/graph.hpp"

namespace qwalk::cli {

enum class Mode { Reduced, Full };
enum class SweepAxis { K1, K2 };

/// Largest vertex count simulated in the full N-dimensional space.
inline constexpr std::size_t kMaxFullVertices = 2000;
inline constexpr std::size_t kDefaultSamples = 2000;
inline constexpr std::size_t kDefaultGammaCount = 200;

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct RunConfig {
  // Instance: a complete bipartite spec, or an edge-list graph with an
  // explicit marked set.
  std::optional<BipartiteSpec> spec;
  std::optional<std::filesystem::path> graph_path;
  std::vector<Vertex> marked;

  WalkKind walk = WalkKind::SignlessLaplacian;
  bipartite::InitialStateKind init = bipartite::InitialStateKind::UniformS;

  std::optional<double> gamma;
  std::optional<double> gamma_min;
  std::optional<double> gamma_max;
  std::size_t gamma_count = kDefaultGammaCount;

  /// Defaults to twice the largest analytic runtime of the instance.
  std::optional<double> t_max;
  std::size_t samples = kDefaultSamples;

  Mode mode = Mode::Reduced;
  std::optional<std::filesystem::path> out;

  // runtimes
  std::optional<SweepAxis> sweep;
  std::size_t sweep_from = 0;
  std::size_t sweep_to = 0;

  // verify-spin
  std::string builtin = "demo5";
  double jz_ratio = -1.0;
  double spin_gamma = 0.3;
};

/// Shortest decimal string that parses back to exactly x.
std::string format_number(double x);

/// The jumping rates of a sweep: the single --gamma value, or gamma_count
/// logarithmically spaced points from gamma_min to gamma_max inclusive.
std::vector<double> gamma_grid(const RunConfig& cfg);

/// Each command writes one CSV with a single header row. Invalid
/// configurations throw ValidationError or SizeLimitError.
void cmd_simulate(const RunConfig& cfg, std::ostream& out);
void cmd_sweep_gamma(const RunConfig& cfg, std::ostream& out);
void cmd_overlaps(const RunConfig& cfg, std::ostream& out);
/// Rows whose spec has no marked vertex are skipped with a note on `warn`.
void cmd_runtimes(const RunConfig& cfg, std::ostream& out, std::ostream& warn);
/// Writes classification, deviation and verdict; returns the verdict.
bool cmd_verify_spin(const RunConfig& cfg, std::ostream& out);

/// Parses a subcommand line (without the program name), runs it and
/// returns the exit status. CSV goes to --out when given, else to `out`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
