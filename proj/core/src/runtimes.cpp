#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/bipartite.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::bipartite {

namespace {

__extension__ typedef unsigned __int128 u128;

// Squared runtime as (pi^2 / 4) * num / den with integer num and den.
struct SquaredRuntime {
  u128 num = 0;
  u128 den = 1;
};

// Keeps every cross product below 2^128.
constexpr std::size_t kMaxExactSize = std::size_t{1} << 30;

std::optional<SquaredRuntime> squared_runtime(const BipartiteSpec& s, Fastest f) {
  const u128 n1 = s.n1, n2 = s.n2, k1 = s.k1, k2 = s.k2, n = n1 + n2;
  switch (f) {
    case Fastest::LaplacianLeft:
      if (k1 == 0) return std::nullopt;
      return SquaredRuntime{n, k1};
    case Fastest::LaplacianRight:
      if (k2 == 0) return std::nullopt;
      return SquaredRuntime{n, k2};
    case Fastest::Adjacency:
      return SquaredRuntime{2 * n1 * n2, k2 * n1 + k1 * n2};
    case Fastest::SignlessLeft:
      if (k1 == 0) return std::nullopt;
      return SquaredRuntime{n1 * n, k1 * n2};
    case Fastest::SignlessRight:
      if (k2 == 0) return std::nullopt;
      return SquaredRuntime{n2 * n, k2 * n1};
  }
  return std::nullopt;
}

bool shorter(const SquaredRuntime& l, const SquaredRuntime& r) { return l.num * r.den < r.num * l.den; }

void validate_for_ranking(const BipartiteSpec& spec) {
  spec.validate();
  if (spec.n1 > kMaxExactSize || spec.n2 > kMaxExactSize) {
    throw ValidationError("partite sets larger than 2^30 are not supported");
  }
}

// Regime prediction from the closed-form boundaries, evaluated exactly.
// Boundary ties resolve the same way kFastestOrder does.
RegimeThresholds thresholds(const BipartiteSpec& spec) {
  const bool left_larger = spec.n1 > spec.n2;
  const BipartiteSpec s = left_larger ? spec : spec.swapped();
  const u128 nl = s.n1, ns = s.n2, kl = s.k1, ks = s.k2, n = nl + ns, diff = nl - ns;

  RegimeThresholds t;
  t.larger_side = left_larger ? Critical::Left : Critical::Right;
  const double dl = static_cast<double>(nl), dn = static_cast<double>(n);
  const double dd = static_cast<double>(diff), dks = static_cast<double>(ks);
  const double dns = static_cast<double>(ns);
  t.lower = dks * dl * dd / (dns * dn);
  t.upper = dks * dl * dn / (dns * dd);

  if (kl * ns * n < ks * nl * diff) {
    t.predicted = left_larger ? Fastest::SignlessRight : Fastest::SignlessLeft;
  } else if (kl * ns * diff < ks * nl * n) {
    t.predicted = Fastest::Adjacency;
  } else {
    t.predicted = left_larger ? Fastest::LaplacianLeft : Fastest::LaplacianRight;
  }
  return t;
}

}  // namespace

std::string_view to_string(Fastest f) {
  switch (f) {
    case Fastest::LaplacianLeft: return "LaplacianLeft";
    case Fastest::LaplacianRight: return "LaplacianRight";
    case Fastest::Adjacency: return "Adjacency";
    case Fastest::SignlessLeft: return "SignlessLeft";
    case Fastest::SignlessRight: return "SignlessRight";
  }
  return "Adjacency";
}

std::optional<double> RuntimeTable::get(Fastest f) const {
  switch (f) {
    case Fastest::LaplacianLeft: return laplacian_left;
    case Fastest::LaplacianRight: return laplacian_right;
    case Fastest::Adjacency: return adjacency;
    case Fastest::SignlessLeft: return signless_left;
    case Fastest::SignlessRight: return signless_right;
  }
  return std::nullopt;
}

double RuntimeTable::max() const {
  double best = 0.0;
  for (const auto f : kFastestOrder) {
    if (const auto t = get(f)) best = std::max(best, *t);
  }
  return best;
}

RuntimeTable runtime_table(const BipartiteSpec& spec) {
  spec.validate();
  const double n1 = static_cast<double>(spec.n1);
  const double n2 = static_cast<double>(spec.n2);
  const double k1 = static_cast<double>(spec.k1);
  const double k2 = static_cast<double>(spec.k2);
  const double n = n1 + n2;
  constexpr double half_pi = std::numbers::pi / 2.0;

  RuntimeTable t;
  if (spec.k1 > 0) {
    t.laplacian_left = half_pi * std::sqrt(n / k1);
    t.signless_left = half_pi * std::sqrt(n1 * n / (k1 * n2));
  }
  if (spec.k2 > 0) {
    t.laplacian_right = half_pi * std::sqrt(n / k2);
    t.signless_right = half_pi * std::sqrt(n2 * n / (k2 * n1));
  }
  t.adjacency = std::numbers::pi / std::numbers::sqrt2 * std::sqrt(n1 * n2 / (k2 * n1 + k1 * n2));
  return t;
}

RegimeClassification fastest_regime(const BipartiteSpec& spec) {
  validate_for_ranking(spec);
  RegimeClassification out;
  out.runtimes = runtime_table(spec);

  std::optional<SquaredRuntime> best;
  for (const auto f : kFastestOrder) {
    const auto candidate = squared_runtime(spec, f);
    if (candidate && (!best || shorter(*candidate, *best))) {
      best = candidate;
      out.fastest = f;
    }
  }

  const u128 diff = spec.n1 > spec.n2 ? spec.n1 - spec.n2 : spec.n2 - spec.n1;
  out.near_regular = diff * diff < static_cast<u128>(spec.total());

  if (spec.n1 != spec.n2) {
    out.thresholds = thresholds(spec);
    const auto big = std::max(spec.n1, spec.n2);
    const auto small = std::min(spec.n1, spec.n2);
    if (big >= 4 * small && out.thresholds->predicted != out.fastest) {
      throw std::logic_error("regime thresholds disagree with the runtime ranking");
    }
  }
  return out;
}

std::vector<SummaryRow> summary_table(const BipartiteSpec& spec) {
  spec.validate();
  const auto t = runtime_table(spec);
  const double n1 = static_cast<double>(spec.n1);
  const double n2 = static_cast<double>(spec.n2);
  const double n = n1 + n2;
  const double gamma_adj = 1.0 / std::sqrt(n1 * n2);
  const double partial = 4.0 * n1 * n2 / (n * n);

  std::vector<SummaryRow> rows;
  if (t.laplacian_left) {
    rows.push_back({WalkKind::Laplacian, InitialStateKind::UniformS,
                    {*t.laplacian_left, 1.0, SearchTarget::LeftMarked, 1.0 / n2}});
  }
  if (t.laplacian_right) {
    rows.push_back({WalkKind::Laplacian, InitialStateKind::UniformS,
                    {*t.laplacian_right, 1.0, SearchTarget::RightMarked, 1.0 / n1}});
  }
  rows.push_back({WalkKind::Adjacency, InitialStateKind::UniformS,
                  {*t.adjacency, 0.5 + std::sqrt(n1 * n2) / n, SearchTarget::Mixed, gamma_adj}});
  rows.push_back({WalkKind::Adjacency, InitialStateKind::AdjacencySA,
                  {*t.adjacency, 1.0, SearchTarget::Mixed, gamma_adj}});
  if (t.signless_left) {
    rows.push_back({WalkKind::SignlessLaplacian, InitialStateKind::UniformS,
                    {*t.signless_left, partial, SearchTarget::LeftMarked, 1.0 / n1}});
    rows.push_back({WalkKind::SignlessLaplacian, InitialStateKind::SignlessSQ,
                    {*t.signless_left, 1.0, SearchTarget::LeftMarked, 1.0 / n1}});
  }
  if (t.signless_right) {
    rows.push_back({WalkKind::SignlessLaplacian, InitialStateKind::UniformS,
                    {*t.signless_right, partial, SearchTarget::RightMarked, 1.0 / n2}});
    rows.push_back({WalkKind::SignlessLaplacian, InitialStateKind::SignlessSQ,
                    {*t.signless_right, 1.0, SearchTarget::RightMarked, 1.0 / n2}});
  }
  return rows;
}

}  // namespace qwalk::bipartite
