#pragma once

// Power-splitting mode under the piecewise-linear harvester. Inside the
// linear region the reduced problem is convex in beta, so its KKT point is
// the global optimum: each beta_n is a clamped closed form in the power
// multiplier Xi, and Xi is found by bisection on the power budget.

#include <cstddef>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

struct CutoffBetaBounds {
  double lower = 0.0;  // x_L / (p_T h_n)
  double upper = 0.0;
  bool alive = false;  // false when p_T h_n <= x_L; then lower = upper = 0
};

/// Requires a cutoff harvester (std::invalid_argument otherwise). n is 0-based.
CutoffBetaBounds beta_bounds_cutoff(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t n);

/// clamp(1 - sqrt(Xi (p_T h_n - x_L) / (p_T h_n^2)), lower_n, upper_n); dead links get 0.
std::vector<double> beta_of_xi(const SystemConfig& cfg, const ChannelRealization& ch, double xi);

struct PsCutoffSolution {
  SolveResult result;
  double xi = 0.0;                  // 0 when the power budget is slack
  std::vector<double> power_used;   // rate-balanced p before top-up
};

PsCutoffSolution solve_ps_cutoff_detailed(const SystemConfig& cfg, const ChannelRealization& ch);

SolveResult solve_ps_cutoff(const SystemConfig& cfg, const ChannelRealization& ch);

}  // namespace swipt
