#include "swipt/ps_cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swipt/ps_logistic.hpp"

namespace swipt {

namespace {

const CutoffParams& cutoff_params(const SystemConfig& cfg) {
  if (!cfg.model.is_cutoff()) throw std::invalid_argument("ps_cutoff: harvester is not cutoff");
  return cfg.model.cutoff();
}

// Rate-balanced source power summed over links.
double power_sum(const SystemConfig& cfg, const ChannelRealization& ch, const std::vector<double>& beta) {
  const std::vector<double> p = recover_power_ps(cfg, ch, beta);
  return std::accumulate(p.begin(), p.end(), 0.0);
}

}  // namespace

CutoffBetaBounds beta_bounds_cutoff(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t n) {
  const CutoffParams& cp = cutoff_params(cfg);
  if (n >= ch.size()) throw std::out_of_range("beta_bounds_cutoff: link index out of range");
  const double x = cfg.p_T * ch.h[n];
  if (!(x > cp.x_L)) return {};

  const double cg = cp.c * ch.g[n];
  // Balances both hops at p_n = p_T; written as 1 - t to keep t exact.
  const double t = cg * (x - cp.x_L) / (x * (1.0 + cg));
  double upper = 1.0 - t;
  upper = std::min(upper, (cfg.q_max + cp.c * cp.x_L) / (cp.c * x));
  upper = std::min(upper, cp.x_U / x);
  upper = std::min(upper, 1.0);
  return {cp.x_L / x, upper, true};
}

std::vector<double> beta_of_xi(const SystemConfig& cfg, const ChannelRealization& ch, double xi) {
  const CutoffParams& cp = cutoff_params(cfg);
  if (!(xi >= 0.0)) throw std::domain_error("beta_of_xi: Xi must be nonnegative");
  std::vector<double> beta(ch.size(), 0.0);
  for (std::size_t n = 0; n < ch.size(); ++n) {
    const CutoffBetaBounds b = beta_bounds_cutoff(cfg, ch, n);
    if (!b.alive) continue;
    const double x = cfg.p_T * ch.h[n];
    const double free = 1.0 - std::sqrt(xi * (x - cp.x_L) / (x * ch.h[n]));
    beta[n] = std::clamp(free, b.lower, b.upper);
  }
  return beta;
}

PsCutoffSolution solve_ps_cutoff_detailed(const SystemConfig& cfg, const ChannelRealization& ch) {
  cutoff_params(cfg);
  cfg.validate();
  ch.validate();
  const std::size_t n = ch.size();
  if (cfg.N != n) throw std::domain_error("solve_ps_cutoff: vector length mismatch");

  PsCutoffSolution sol;
  bool any_alive = false;
  for (std::size_t k = 0; k < n; ++k) any_alive = any_alive || beta_bounds_cutoff(cfg, ch, k).alive;
  if (!any_alive) {
    sol.result = SolveResult{Allocation::zero(Mode::PS, n), 0.0, {}};
    sol.power_used.assign(n, 0.0);
    return sol;
  }

  std::size_t evals = 1;
  std::vector<double> beta = beta_of_xi(cfg, ch, 0.0);
  if (power_sum(cfg, ch, beta) > cfg.p_T) {
    double lo = 0.0;
    double hi = 1.0;
    while (power_sum(cfg, ch, beta_of_xi(cfg, ch, hi)) > cfg.p_T) {
      lo = hi;
      hi *= 2.0;
      ++evals;
    }
    // Smallest Xi meeting the budget, i.e. the largest feasible split ratios.
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      ++evals;
      (power_sum(cfg, ch, beta_of_xi(cfg, ch, mid)) > cfg.p_T ? lo : hi) = mid;
    }
    sol.xi = hi;
    beta = beta_of_xi(cfg, ch, hi);
  }

  sol.power_used = recover_power_ps(cfg, ch, beta);
  sol.result.allocation = finish_ps_allocation(cfg, ch, std::move(beta));
  sol.result.throughput = throughput_ps(cfg, ch, sol.result.allocation);
  sol.result.diagnostics.iterations = evals;
  return sol;
}

SolveResult solve_ps_cutoff(const SystemConfig& cfg, const ChannelRealization& ch) {
  return solve_ps_cutoff_detailed(cfg, ch).result;
}

}  // namespace swipt
