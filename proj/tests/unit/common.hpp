#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "swipt/harness.hpp"
#include "swipt/model.hpp"

namespace swipt::test {

inline SystemConfig defaults(ModelKind m, std::size_t N = 4) {
  RunConfig rc;
  rc.N = N;
  return rc.system(m);
}

inline ChannelRealization draw(std::size_t trial, std::size_t N = 4, std::uint64_t seed = 1) {
  RunConfig rc;
  rc.N = N;
  rc.seed = seed;
  return trial_channels(rc, trial);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace swipt::test
