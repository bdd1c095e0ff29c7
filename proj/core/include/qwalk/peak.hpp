#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

/// `samples` evenly spaced times covering [0, t_max] inclusive. Each time is
/// computed as t_max * k / (samples - 1), so grids are reproducible.
/// Throws ValidationError unless samples >= 2 and t_max > 0.
std::vector<double> time_grid(double t_max, std::size_t samples);

struct Peak {
  double time = 0.0;
  double value = 0.0;
  std::size_t sample = 0;  // index of the largest raw sample
};

/// Largest sample of an evenly spaced curve (earliest on exact ties),
/// refined by the parabola through it and its two neighbours when it is an
/// interior, strictly concave maximum.
Peak find_peak(std::span<const double> times, std::span<const double> values);

}  // namespace qwalk
