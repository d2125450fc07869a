#pragma once

// Time-switching mode. For a fixed harvesting fraction alpha the inner
// problem has a closed form (greedy power fill in descending h, bandwidth
// proportional to p_n h_n); the outer search over alpha is a 2-D monotonic
// program in (alpha, 1 - alpha) solved by polyblock.

#include <span>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

/// alpha is clamped to this value wherever the inner problem is evaluated at 1.
inline constexpr double kAlphaCeiling = 1.0 - 1e-12;

/// Precomputed per-instance data for the inner (fixed-alpha) problem.
class TsInnerProblem {
 public:
  TsInnerProblem(const SystemConfig& cfg, const ChannelRealization& ch);

  double alpha_max() const { return alpha_max_; }
  std::vector<double> caps(double alpha) const;
  std::vector<double> power(double alpha) const;
  /// F(alpha) = w_T ln(1 + sum p_n h_n / (w_T sigma2)) at the optimal inner power.
  double value(double alpha) const;

 private:
  double ratio(double alpha) const;

  const SystemConfig& cfg_;
  const ChannelRealization& ch_;
  std::vector<double> cap_unit_;     // phi(p_T h_n) g_n / h_n
  std::vector<std::size_t> order_;   // links by descending h, index order on ties
  double alpha_max_ = 1.0;
};

/// min_n q_max / (q_max + phi(p_T h_n)); lies in (0, 1].
double alpha_max(const SystemConfig& cfg, const ChannelRealization& ch);

/// Per-link power cap alpha phi(p_T h_n) g_n / ((1 - alpha) h_n) that keeps the
/// first hop from outrunning the second. Throws std::domain_error unless 0 <= alpha < 1.
std::vector<double> power_caps(const SystemConfig& cfg, const ChannelRealization& ch, double alpha);

/// Maximizes sum p_n h_n subject to sum p_n <= p_T and 0 <= p_n <= cap_n.
std::vector<double> lower_level_power(const SystemConfig& cfg, const ChannelRealization& ch, double alpha);

/// Bandwidth proportional to p_n h_n, summing to w_T (the last active link
/// takes the remainder). All-zero weights give all-zero bandwidth.
std::vector<double> bandwidth_alloc(std::span<const double> p, std::span<const double> h, double w_T);

/// F(alpha); alpha at or above kAlphaCeiling is evaluated at kAlphaCeiling.
double lower_level_value(const SystemConfig& cfg, const ChannelRealization& ch, double alpha);

/// Raises p so it sums to p_T. The surplus goes to the largest-h link among
/// links that already carry power (largest h overall if none do).
/// Throws std::domain_error if sum p exceeds p_T.
std::vector<double> power_topup(std::span<const double> p, double p_T, std::span<const double> h);

SolveResult solve_ts(const SystemConfig& cfg, const ChannelRealization& ch);

}  // namespace swipt
