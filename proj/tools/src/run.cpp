#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qwalk/cli.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::cli {

namespace {

constexpr std::array<std::string_view, 5> kSubcommands{"simulate", "sweep-gamma", "overlaps", "runtimes",
                                                       "verify-spin"};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Flat key=value lines; '#' starts a comment. Keys are flag names with or
// without the leading dashes.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    key.erase(0, key.find_first_not_of('-'));
    if (key.empty() || key == "config") {
      throw ValidationError("config line " + std::to_string(lineno) + ": invalid key");
    }
    tokens.push_back("--" + key + "=" + trim(std::string_view(line).substr(eq + 1)));
  }
  return tokens;
}

std::optional<std::string> config_path(std::span<const std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
  }
  return path;
}

// Config entries go right after the subcommand name so that any flag given
// on the command line comes later and wins.
std::vector<std::string> expand_config(std::span<const std::string> args) {
  std::vector<std::string> out(args.begin(), args.end());
  const auto path = config_path(args);
  if (!path) return out;
  const auto sub = std::find_if(out.begin(), out.end(), [](const std::string& a) {
    return std::find(kSubcommands.begin(), kSubcommands.end(), a) != kSubcommands.end();
  });
  if (sub == out.end()) throw ValidationError("--config needs a subcommand");
  const auto tokens = read_config(*path);
  out.insert(sub + 1, tokens.begin(), tokens.end());
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item.front() == '-') {
      throw ValidationError("--marked expects comma-separated vertex indices");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

struct Raw {
  std::size_t n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  std::string graph, marked, walk = "signless", init = "s", mode = "reduced", out, config, sweep;
  std::string builtin = "demo5";
  double gamma = 0.0, gamma_min = 0.0, gamma_max = 0.0, tmax = 0.0, jz_ratio = -1.0;
  std::size_t gamma_count = kDefaultGammaCount, samples = kDefaultSamples, sweep_from = 0, sweep_to = 0;
};

class Parser {
 public:
  Parser() : app_("Continuous-time quantum walk search on graphs", "qwalk") {
    app_.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app_.require_subcommand(1);

    auto* sim = app_.add_subcommand("simulate", "success probability versus time");
    add_instance(sim);
    add_walk(sim);
    sim->add_option("--gamma", raw_.gamma, "jumping rate");
    add_time(sim);
    add_common(sim);

    auto* sweep = app_.add_subcommand("sweep-gamma", "peak success probability versus jumping rate");
    add_instance(sweep);
    add_walk(sweep);
    add_gamma_range(sweep);
    add_time(sweep);
    add_common(sweep);

    auto* overlaps = app_.add_subcommand("overlaps", "eigenvector overlaps of the four lowest eigenstates");
    add_instance(overlaps);
    add_walk(overlaps);
    add_gamma_range(overlaps);
    add_common(overlaps);

    auto* runtimes = app_.add_subcommand("runtimes", "analytic runtimes and the fastest walk");
    add_spec(runtimes);
    runtimes->add_option("--sweep", raw_.sweep, "swept marked count")->check(CLI::IsMember({"k1", "k2"}));
    runtimes->add_option("--sweep-from", raw_.sweep_from, "first swept value");
    runtimes->add_option("--sweep-to", raw_.sweep_to, "last swept value");
    add_common(runtimes);

    auto* spin = app_.add_subcommand("verify-spin", "check a Heisenberg network against the walk matrices");
    spin->add_option("--graph", raw_.graph, "edge-list file");
    spin->add_option("--builtin", raw_.builtin, "builtin graph")->check(CLI::IsMember({"demo5"}));
    spin->add_option("--jz-ratio", raw_.jz_ratio, "jz / jx");
    spin->add_option("--gamma", raw_.gamma, "jx = jy = gamma");
    add_common(spin);
  }

  CLI::App& app() { return app_; }

  RunConfig config() const {
    RunConfig cfg;
    const auto* sub = app_.get_subcommands().front();
    const auto given = [sub](const std::string& name) {
      const auto* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };

    if (given("--n1") || given("--n2") || given("--k1") || given("--k2")) {
      if (!given("--n1") || !given("--n2")) throw ValidationError("--n1 and --n2 are both required");
      cfg.spec = BipartiteSpec{raw_.n1, raw_.n2, raw_.k1, raw_.k2};
    }
    if (given("--graph")) cfg.graph_path = raw_.graph;
    if (given("--marked")) cfg.marked = parse_vertex_list(raw_.marked);

    if (raw_.walk == "laplacian") cfg.walk = WalkKind::Laplacian;
    if (raw_.walk == "adjacency") cfg.walk = WalkKind::Adjacency;
    if (raw_.walk == "signless") cfg.walk = WalkKind::SignlessLaplacian;
    if (raw_.init == "s") cfg.init = bipartite::InitialStateKind::UniformS;
    if (raw_.init == "sa") cfg.init = bipartite::InitialStateKind::AdjacencySA;
    if (raw_.init == "sq") cfg.init = bipartite::InitialStateKind::SignlessSQ;
    cfg.mode = raw_.mode == "full" ? Mode::Full : Mode::Reduced;

    if (given("--gamma")) cfg.gamma = raw_.gamma;
    if (given("--gamma-min")) cfg.gamma_min = raw_.gamma_min;
    if (given("--gamma-max")) cfg.gamma_max = raw_.gamma_max;
    cfg.gamma_count = raw_.gamma_count;
    if (given("--tmax")) cfg.t_max = raw_.tmax;
    cfg.samples = raw_.samples;
    if (given("--out")) cfg.out = raw_.out;

    if (given("--sweep")) {
      cfg.sweep = raw_.sweep == "k1" ? SweepAxis::K1 : SweepAxis::K2;
      if (!given("--sweep-from") || !given("--sweep-to")) {
        throw ValidationError("--sweep needs --sweep-from and --sweep-to");
      }
    }
    cfg.sweep_from = raw_.sweep_from;
    cfg.sweep_to = raw_.sweep_to;

    cfg.builtin = raw_.builtin;
    cfg.jz_ratio = raw_.jz_ratio;
    if (given("--gamma")) cfg.spin_gamma = raw_.gamma;
    return cfg;
  }

 private:
  void add_spec(CLI::App* sub) {
    sub->add_option("--n1", raw_.n1, "left partite set size");
    sub->add_option("--n2", raw_.n2, "right partite set size");
    sub->add_option("--k1", raw_.k1, "marked vertices on the left");
    sub->add_option("--k2", raw_.k2, "marked vertices on the right");
  }

  void add_instance(CLI::App* sub) {
    add_spec(sub);
    sub->add_option("--graph", raw_.graph, "edge-list file (header 'n m', then 'i j' lines)");
    sub->add_option("--marked", raw_.marked, "marked vertices of --graph, comma separated");
    sub->add_option("--mode", raw_.mode, "reduced (4x4) or full (N x N)")->check(CLI::IsMember({"reduced", "full"}));
  }

  void add_walk(CLI::App* sub) {
    sub->add_option("--walk", raw_.walk, "walk matrix")->check(CLI::IsMember({"laplacian", "adjacency", "signless"}));
    sub->add_option("--init", raw_.init, "initial state")->check(CLI::IsMember({"s", "sa", "sq"}));
  }

  void add_gamma_range(CLI::App* sub) {
    sub->add_option("--gamma", raw_.gamma, "single jumping rate");
    sub->add_option("--gamma-min", raw_.gamma_min, "smallest jumping rate");
    sub->add_option("--gamma-max", raw_.gamma_max, "largest jumping rate");
    sub->add_option("--gamma-count", raw_.gamma_count, "number of log-spaced rates");
  }

  void add_time(CLI::App* sub) {
    sub->add_option("--tmax", raw_.tmax, "end of the time grid");
    sub->add_option("--samples", raw_.samples, "time grid points");
  }

  void add_common(CLI::App* sub) {
    sub->add_option("--out", raw_.out, "CSV output path");
    sub->add_option("--config", raw_.config, "key=value config file");
  }

  CLI::App app_;
  Raw raw_;
};

int dispatch(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (name == "simulate") cmd_simulate(cfg, out);
  if (name == "sweep-gamma") cmd_sweep_gamma(cfg, out);
  if (name == "overlaps") cmd_overlaps(cfg, out);
  if (name == "runtimes") cmd_runtimes(cfg, out, err);
  if (name == "verify-spin") return cmd_verify_spin(cfg, out) ? kExitOk : kExitVerification;
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Parser parser;
  try {
    auto argv = expand_config(args);
    std::reverse(argv.begin(), argv.end());
    parser.app().parse(argv);
  } catch (const CLI::ParseError& e) {
    return parser.app().exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto cfg = parser.config();
    const auto name = parser.app().get_subcommands().front()->get_name();
    if (!cfg.out) return dispatch(name, cfg, out, err);

    std::ostringstream buffer;
    const int status = dispatch(name, cfg, buffer, err);
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) throw ValidationError("cannot write " + cfg.out->string());
    file << buffer.str();
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qwalk::cli
