#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <ostream>
#include <string>

#include "qwalk/cli.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/peak.hpp"
#include "qwalk/spin_network.hpp"

namespace qwalk::cli {

namespace {

using bipartite::ClassProbabilities;
using bipartite::InitialStateKind;

struct CurvePoint {
  double t = 0.0;
  double success = 0.0;
  ClassProbabilities classes;
};

// A fully resolved search problem: one Hamiltonian family plus the data
// needed to turn an evolved state into probabilities.
class Problem {
 public:
  explicit Problem(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.spec && cfg.graph_path) throw ValidationError("give either a bipartite spec or --graph, not both");
    if (cfg.spec) {
      cfg.spec->validate();
      if (cfg.mode == Mode::Full) {
        check_full_size(cfg.spec->total());
        full_ = complete_bipartite(*cfg.spec);
      }
      if (!cfg.marked.empty()) throw ValidationError("--marked applies only to --graph instances");
      return;
    }
    if (!cfg.graph_path) throw ValidationError("an instance is required: --n1 --n2 --k1 --k2 or --graph");
    if (cfg.init != InitialStateKind::UniformS) {
      throw ValidationError("edge-list instances support only --init s");
    }
    if (cfg.marked.empty()) throw ValidationError("--graph needs a nonempty --marked list");
    auto g = read_edge_list_file(*cfg.graph_path);
    check_full_size(g.vertex_count());
    full_ = BipartiteGraph{std::move(g), cfg.marked};
  }

  bool bipartite_spec() const noexcept { return cfg_.spec.has_value(); }
  bool reduced() const noexcept { return cfg_.spec && cfg_.mode == Mode::Reduced; }

  double default_t_max() const {
    if (cfg_.t_max) {
      if (!(*cfg_.t_max > 0.0) || !std::isfinite(*cfg_.t_max)) throw ValidationError("--tmax must be positive");
      return *cfg_.t_max;
    }
    if (!cfg_.spec) throw ValidationError("--tmax is required for --graph instances");
    return 2.0 * bipartite::runtime_table(*cfg_.spec).max();
  }

  ComplexMatrix hamiltonian(double gamma) const {
    check_gamma(gamma);
    if (reduced()) {
      return bipartite::reduced_hamiltonian(*cfg_.spec, cfg_.walk, gamma).cast<std::complex<double>>();
    }
    return search_hamiltonian(SearchInstance{cfg_.walk, full_->graph, full_->marked, gamma});
  }

  QuantumState initial() const {
    if (!cfg_.spec) return QuantumState::uniform(full_->graph.vertex_count());
    const auto reduced_start = bipartite::initial_state(*cfg_.spec, cfg_.init);
    if (reduced()) return reduced_start.as_state();
    return bipartite::reduced_to_full(*cfg_.spec, reduced_start);
  }

  CurvePoint measure(double t, const QuantumState& psi) const {
    CurvePoint p{t, 0.0, {}};
    if (reduced()) {
      const Eigen::VectorXd w = psi.probabilities();
      p.classes = {w(0), w(1), w(2), w(3)};
      p.success = p.classes.success();
    } else if (cfg_.spec) {
      p.classes = bipartite::class_probabilities(*cfg_.spec, psi);
      p.success = p.classes.success();
    } else {
      p.success = success_probability(psi, full_->marked);
    }
    return p;
  }

  std::vector<CurvePoint> curve(double gamma, std::span<const double> times) const {
    const Propagator propagator(hamiltonian(gamma));
    const auto states = propagator.evolve(initial(), times);
    std::vector<CurvePoint> out;
    out.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) out.push_back(measure(times[i], states[i]));
    return out;
  }

  const RunConfig& config() const noexcept { return cfg_; }
  const std::optional<BipartiteGraph>& full() const noexcept { return full_; }

 private:
  static void check_full_size(std::size_t n) {
    if (n > kMaxFullVertices) {
      throw SizeLimitError("full mode is limited to " + std::to_string(kMaxFullVertices) + " vertices, got " +
                           std::to_string(n));
    }
  }

  static void check_gamma(double gamma) {
    if (!std::isfinite(gamma) || gamma < 0.0) throw ValidationError("gamma must be finite and non-negative");
  }

  const RunConfig& cfg_;
  std::optional<BipartiteGraph> full_;
};

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (const double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

std::string optional_field(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

}  // namespace

std::string format_number(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ec == std::errc{} ? end : buf.data());
}

std::vector<double> gamma_grid(const RunConfig& cfg) {
  if (cfg.gamma) {
    if (cfg.gamma_min || cfg.gamma_max) throw ValidationError("give --gamma or a gamma range, not both");
    return {*cfg.gamma};
  }
  if (!cfg.gamma_min || !cfg.gamma_max) throw ValidationError("--gamma or --gamma-min/--gamma-max is required");
  const double lo = *cfg.gamma_min, hi = *cfg.gamma_max;
  if (!(lo > 0.0) || !std::isfinite(hi) || hi < lo) {
    throw ValidationError("gamma range needs 0 < gamma-min <= gamma-max");
  }
  if (cfg.gamma_count == 0) throw ValidationError("--gamma-count must be at least 1");
  if (cfg.gamma_count == 1) return {lo};

  const double log_lo = std::log(lo), log_hi = std::log(hi);
  const double steps = static_cast<double>(cfg.gamma_count - 1);
  std::vector<double> out(cfg.gamma_count);
  for (std::size_t i = 0; i < cfg.gamma_count; ++i) {
    out[i] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) / steps);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.gamma) throw ValidationError("simulate needs --gamma");
  const Problem problem(cfg);
  const auto times = time_grid(problem.default_t_max(), cfg.samples);
  const auto points = problem.curve(*cfg.gamma, times);

  if (problem.bipartite_spec()) {
    out << "t,p_success,p_a,p_b,p_c,p_d\n";
    for (const auto& p : points) write_row(out, {p.t, p.success, p.classes.a, p.classes.b, p.classes.c, p.classes.d});
  } else {
    out << "t,p_success\n";
    for (const auto& p : points) write_row(out, {p.t, p.success});
  }
}

void cmd_sweep_gamma(const RunConfig& cfg, std::ostream& out) {
  const Problem problem(cfg);
  const auto gammas = gamma_grid(cfg);
  const auto times = time_grid(problem.default_t_max(), cfg.samples);

  const auto peaks = ordered_parallel_map(gammas.size(), [&](std::size_t i) {
    const auto points = problem.curve(gammas[i], times);
    std::vector<double> success(points.size());
    std::transform(points.begin(), points.end(), success.begin(), [](const CurvePoint& p) { return p.success; });
    return find_peak(times, success);
  });

  out << "gamma,t_peak,p_peak\n";
  for (std::size_t i = 0; i < gammas.size(); ++i) write_row(out, {gammas[i], peaks[i].time, peaks[i].value});
}

void cmd_overlaps(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.spec) throw ValidationError("overlaps needs a bipartite spec");
  const Problem problem(cfg);
  const auto gammas = gamma_grid(cfg);
  const auto& spec = *cfg.spec;
  const auto start = bipartite::initial_state(spec, cfg.init);

  HamiltonianFamily family;
  std::vector<Probe> probes;
  if (problem.reduced()) {
    // Inert classes are dropped so they do not show up as spurious
    // zero-energy eigenvectors.
    const auto inert = bipartite::inert_coordinates(spec);
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < 4; ++i) {
      if (!inert[static_cast<std::size_t>(i)]) active.push_back(i);
    }
    const auto dim = static_cast<Eigen::Index>(active.size());
    family = [&problem, active](double gamma) { return ComplexMatrix(problem.hamiltonian(gamma)(active, active)); };

    Probe s(dim, 1);
    s.col(0) = start.amplitudes()(active);
    const auto unit_probe = [&](bipartite::Coordinate c) {
      const auto it = std::find(active.begin(), active.end(), c);
      if (it == active.end()) return Probe(dim, 0);
      Probe p = Probe::Zero(dim, 1);
      p(it - active.begin(), 0) = 1.0;
      return p;
    };
    probes = {s, unit_probe(bipartite::kA), unit_probe(bipartite::kB)};
  } else {
    family = [&problem](double gamma) { return problem.hamiltonian(gamma); };
    std::vector<Vertex> left(spec.k1), right(spec.k2);
    const auto& marked = problem.full()->marked;
    std::copy_n(marked.begin(), spec.k1, left.begin());
    std::copy_n(marked.begin() + static_cast<std::ptrdiff_t>(spec.k1), spec.k2, right.begin());
    probes = {probe_from_state(problem.initial()), probe_from_vertices(spec.total(), left),
              probe_from_vertices(spec.total(), right)};
  }

  const auto rows = overlap_profile(family, gammas, probes, 4);
  out << "gamma,n,S_n,L_n,R_n\n";
  for (const auto& r : rows) {
    write_row(out, {r.gamma, static_cast<double>(r.index), r.weights[0], r.weights[1], r.weights[2]});
  }
}

void cmd_runtimes(const RunConfig& cfg, std::ostream& out, std::ostream& warn) {
  if (!cfg.spec) throw ValidationError("runtimes needs a bipartite spec");
  const BipartiteSpec base = *cfg.spec;

  std::vector<std::size_t> keys;
  if (cfg.sweep) {
    if (cfg.sweep_from > cfg.sweep_to) throw ValidationError("--sweep-from must not exceed --sweep-to");
    const std::size_t limit = *cfg.sweep == SweepAxis::K1 ? base.n1 : base.n2;
    if (cfg.sweep_to > limit) throw ValidationError("sweep range exceeds the partite set size");
    for (std::size_t k = cfg.sweep_from; k <= cfg.sweep_to; ++k) keys.push_back(k);
  } else {
    base.validate();
    keys.push_back(base.k1);
  }

  const auto spec_at = [&](std::size_t key) {
    BipartiteSpec s = base;
    if (cfg.sweep == SweepAxis::K1) s.k1 = key;
    if (cfg.sweep == SweepAxis::K2) s.k2 = key;
    return s;
  };

  const auto regimes = ordered_parallel_map(keys.size(), [&](std::size_t i) {
    const auto s = spec_at(keys[i]);
    return s.k1 + s.k2 == 0 ? std::nullopt : std::optional(bipartite::fastest_regime(s));
  });

  out << "sweep_key,t_La,t_Lb,t_A,t_Qa,t_Qb,fastest,near_regular_flag\n";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!regimes[i]) {
      warn << "warning: skipping sweep_key " << keys[i] << ": no marked vertices\n";
      continue;
    }
    const auto& r = *regimes[i];
    const auto& t = r.runtimes;
    out << keys[i] << ',' << optional_field(t.laplacian_left) << ',' << optional_field(t.laplacian_right) << ','
        << optional_field(t.adjacency) << ',' << optional_field(t.signless_left) << ','
        << optional_field(t.signless_right) << ',' << bipartite::to_string(r.fastest) << ','
        << (r.near_regular ? 1 : 0) << '\n';
  }
}

bool cmd_verify_spin(const RunConfig& cfg, std::ostream& out) {
  std::optional<Graph> g;
  if (cfg.graph_path) {
    g = read_edge_list_file(*cfg.graph_path);
  } else if (cfg.builtin == "demo5") {
    g = five_vertex_demo_graph();
  } else {
    throw ValidationError("unknown builtin graph '" + cfg.builtin + "'");
  }
  if (g->vertex_count() > kMaxSpins) {
    throw SizeLimitError("spin verification is limited to " + std::to_string(kMaxSpins) + " vertices");
  }
  if (!std::isfinite(cfg.jz_ratio)) throw ValidationError("--jz-ratio must be finite");

  const double gamma = cfg.spin_gamma;
  const auto cert = certify_walk_equivalence(*g, Couplings{gamma, gamma, cfg.jz_ratio * gamma});
  const bool pass = cert.walk != WalkClass::Other && cert.max_deviation <= kEquivalenceTolerance;

  out << "classification,max_deviation,result\n"
      << to_string(cert.walk) << ',' << format_number(cert.max_deviation) << ',' << (pass ? "pass" : "fail") << '\n';
  return pass;
}

}  // namespace qwalk::cli
