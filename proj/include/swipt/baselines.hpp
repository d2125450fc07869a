#pragma once

// Relay selection: all source power and bandwidth go to one link, whose
// harvesting ratio is tuned on its own; the best link wins (lowest index on
// ties). Each returned allocation is feasible for the multi-relay problem.

#include "swipt/model.hpp"

namespace swipt {

/// Grid of this many alpha values before the local refinement.
inline constexpr std::size_t kSelectGrid = 1000;
inline constexpr double kSelectAlphaTol = 1e-6;

/// alpha is searched on [0, alpha_max] with alpha_max taken over all relays,
/// since every relay harvests during the same alpha fraction.
SolveResult solve_ts_select(const SystemConfig& cfg, const ChannelRealization& ch);

/// beta for the chosen link balances both hops at p = p_T, capped by the
/// relay power limit (and x_U for the cutoff harvester). Other links get 0.
SolveResult solve_ps_select(const SystemConfig& cfg, const ChannelRealization& ch);

}  // namespace swipt
