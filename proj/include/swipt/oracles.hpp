#pragma once

// Brute-force reference values for tests. Nothing here calls into the
// solvers; only the model's evaluation functions are shared.

#include <cstddef>
#include <vector>

#include "swipt/model.hpp"

namespace swipt::oracle {

struct GridResult {
  double value = 0.0;        // best throughput found on the grid (achievable)
  double upper_bound = 0.0;  // provable bound on the true optimum
  Allocation argmax;

  double modulus() const { return upper_bound - value; }
};

/// Best sum p_n h_n over greedy fills of the caps in every link order.
/// Requires N <= 8 (std::invalid_argument otherwise).
std::vector<double> lp_vertex(const std::vector<double>& h, const std::vector<double>& caps, double p_T);

/// K equally spaced alpha in [0, alpha_max], each with the exact inner
/// allocation. The bound uses max_k (1 - alpha_k) F(alpha_{k+1}), valid
/// because F is nondecreasing. Requires K >= 2.
GridResult grid_ts(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t K);

/// K split ratios per link, placed so the rate-balanced source power is
/// uniformly spaced on [0, min(p_T, power at the relay limit)]. Grid points
/// over budget are discarded; bandwidth is proportional to harvested power.
/// Requires N <= 3 and K >= 2 (std::invalid_argument otherwise).
GridResult grid_ps(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t K);

}  // namespace swipt::oracle
