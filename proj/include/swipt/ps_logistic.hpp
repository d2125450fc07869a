#pragma once

// Power-splitting mode. With every link rate-balanced, the source power p_n
// is a function of beta_n alone, and bandwidth proportional to the harvested
// power pools all links onto one common SNR. What remains is
//
//   max sum_n s_n(beta_n)  s.t.  sum_n P_n(beta_n) <= p_T,  0 <= beta <= U,
//
// with s_n = phi(p_T h_n beta_n) g_n and P_n = s_n / (h_n (1 - beta_n)), both
// increasing. Two solvers are provided:
//
//  * a polyblock over beta (certified to epsilon, practical for N <= 2 or so);
//  * a multiplier method. Each link's Lagrangian s_n (1 - lambda / (h_n (1 -
//    beta))) is log-concave in beta, so its maximizer is unique and moves
//    continuously with lambda. Bisecting lambda until the power budget is
//    met therefore lands on a global optimum, certified by the dual bound.

#include <cstddef>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

/// beta_n is never pushed closer to 1 than this.
inline constexpr double kBetaCeiling = 1.0 - 1e-12;

/// Largest useful split ratio for link n (0-based): the ratio at which the
/// rate-balanced source power reaches p_T, further capped by the relay power
/// limit q_max and by 1. Works for either harvester model.
double beta_upper_logistic(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t n);

/// Source power that balances both hops of every link:
/// p_n = phi(p_T h_n beta_n) g_n / (h_n (1 - beta_n)).
/// Throws std::domain_error if some beta_n >= 1 or lengths differ.
std::vector<double> recover_power_ps(const SystemConfig& cfg, const ChannelRealization& ch,
                                     const std::vector<double>& beta);

/// argmax over beta in [0, upper] of s_n(beta) - lambda P_n(beta) for link n.
double ps_link_maximizer(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t n, double lambda,
                         double upper);

/// Multiplier method; accepts either harvester.
SolveResult solve_ps_multiplier(const SystemConfig& cfg, const ChannelRealization& ch);

/// Polyblock over beta in [0, beta_upper]; accepts either harvester. May throw
/// PolyblockOverflow for large N.
SolveResult solve_ps_polyblock(const SystemConfig& cfg, const ChannelRealization& ch);

/// Production PS solver for the logistic harvester (multiplier method).
/// Throws std::invalid_argument for any other harvester.
SolveResult solve_ps_logistic(const SystemConfig& cfg, const ChannelRealization& ch);

/// Turns rate-balanced split ratios into a full PS allocation: bandwidth
/// proportional to phi g, p from recover_power_ps, surplus topped up.
/// Links harvesting nothing get p = w = 0.
Allocation finish_ps_allocation(const SystemConfig& cfg, const ChannelRealization& ch, std::vector<double> beta);

}  // namespace swipt
