#include "qwalk/peak.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

std::vector<double> time_grid(double t_max, std::size_t samples) {
  if (samples < 2) throw ValidationError("time grid needs at least two samples");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ValidationError("t_max must be positive");
  std::vector<double> t(samples);
  const double last = static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) t[k] = t_max * (static_cast<double>(k) / last);
  t.back() = t_max;
  return t;
}

Peak find_peak(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size() || values.empty()) {
    throw ValidationError("peak search needs matching, nonempty time and value samples");
  }
  const auto best = static_cast<std::size_t>(
      std::distance(values.begin(), std::max_element(values.begin(), values.end())));
  Peak peak{times[best], values[best], best};
  if (best == 0 || best + 1 == values.size()) return peak;

  const double left = values[best - 1];
  const double mid = values[best];
  const double right = values[best + 1];
  const double curvature = left - 2.0 * mid + right;
  if (!(curvature < 0.0)) return peak;
  const double offset = std::clamp(0.5 * (left - right) / curvature, -0.5, 0.5);
  const double step = times[best + 1] - times[best];
  peak.time = times[best] + offset * step;
  peak.value = mid - 0.25 * (left - right) * offset;
  return peak;
}

}  // namespace qwalk
