#include "swipt/ps_logistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swipt/monotonic.hpp"
#include "swipt/ts_solver.hpp"

namespace swipt {

namespace {

// Root of phi(x beta) / (1 - beta) = target in beta, x = p_T h. The left side
// increases in beta; we bisect on t = 1 - beta so precision is kept where it
// matters (the root sits very close to 1 for realistic gains).
double balance_root(const HarvesterModel& model, double x, double target) {
  auto excess = [&](double t) { return model.harvest(x * (1.0 - t)) - t * target; };
  double lo = 0.0;  // beta = 1: excess = phi(x) > 0 unless phi(x) = 0
  double hi = 1.0;  // beta = 0: excess = -target < 0
  if (!(excess(lo) > 0.0)) return 0.0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  // hi keeps excess <= 0, i.e. the implied power stays within the target.
  return std::min(1.0 - hi, kBetaCeiling);
}

}  // namespace

double beta_upper_logistic(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t n) {
  if (n >= ch.size()) throw std::out_of_range("beta_upper_logistic: link index out of range");
  const double x = cfg.p_T * ch.h[n];
  double bound = balance_root(cfg.model, x, x / ch.g[n]);
  if (const auto inv = cfg.model.harvest_inverse(cfg.q_max)) bound = std::min(bound, *inv / x);
  return std::min(bound, 1.0);
}

std::vector<double> recover_power_ps(const SystemConfig& cfg, const ChannelRealization& ch,
                                     const std::vector<double>& beta) {
  if (beta.size() != ch.size() || ch.g.size() != ch.size()) {
    throw std::domain_error("recover_power_ps: vector length mismatch");
  }
  std::vector<double> p(beta.size());
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (!(beta[n] >= 0.0 && beta[n] < 1.0)) throw std::domain_error("recover_power_ps: beta must lie in [0, 1)");
    p[n] = cfg.model.harvest(cfg.p_T * ch.h[n] * beta[n]) * ch.g[n] / (ch.h[n] * (1.0 - beta[n]));
  }
  return p;
}

Allocation finish_ps_allocation(const SystemConfig& cfg, const ChannelRealization& ch, std::vector<double> beta) {
  const std::size_t n = ch.size();
  std::vector<double> pool(n);
  for (std::size_t k = 0; k < n; ++k) pool[k] = cfg.model.harvest(cfg.p_T * ch.h[k] * beta[k]) * ch.g[k];

  // bandwidth_alloc splits w_T in proportion to p_k h_k; feed it pool_k * 1.
  const std::vector<double> ones(n, 1.0);
  std::vector<double> w = bandwidth_alloc(pool, ones, cfg.w_T);
  std::vector<double> p = recover_power_ps(cfg, ch, beta);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(pool[k] > 0.0)) p[k] = 0.0;
  }
  // Rounding in p_n can overshoot p_T by a few ulps; trim before topping up.
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (sum > cfg.p_T) {
    for (auto& v : p) v *= cfg.p_T / sum;
  }
  return Allocation::ps(std::move(beta), power_topup(p, cfg.p_T, ch.h), std::move(w));
}

double ps_link_maximizer(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t n, double lambda,
                         double upper) {
  if (n >= ch.size()) throw std::out_of_range("ps_link_maximizer: link index out of range");
  if (!(lambda >= 0.0)) throw std::domain_error("ps_link_maximizer: lambda must be nonnegative");
  if (!(upper > 0.0)) return 0.0;
  const double x = cfg.p_T * ch.h[n];
  const double c = lambda / ch.h[n];
  if (c >= 1.0) return 0.0;  // the Lagrangian is <= 0 on all of [0, 1)

  // Right derivative of ln(s (1 - c / t)) with respect to beta, at t = 1 - beta.
  auto slope = [&](double t) { return x * cfg.model.log_slope(x * (1.0 - t)) - 1.0 / (t - c) + 1.0 / t; };
  const double t_upper = 1.0 - upper;
  if (t_upper > c && slope(t_upper) >= 0.0) return upper;

  double lo = std::max(t_upper, c);  // slope < 0 (or undefined at t = c)
  double hi = 1.0;                   // beta = 0, slope > 0
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (slope(mid) > 0.0 ? hi : lo) = mid;
  }
  return 1.0 - hi;
}

SolveResult solve_ps_multiplier(const SystemConfig& cfg, const ChannelRealization& ch) {
  cfg.validate();
  ch.validate();
  const std::size_t n = ch.size();
  if (cfg.N != n) throw std::domain_error("solve_ps: vector length mismatch");

  std::vector<double> upper(n);
  for (std::size_t k = 0; k < n; ++k) upper[k] = beta_upper_logistic(cfg, ch, k);
  if (std::all_of(upper.begin(), upper.end(), [](double b) { return b <= 0.0; })) {
    return SolveResult{Allocation::zero(Mode::PS, n), 0.0, {}};
  }

  const double scale = 1.0 / (cfg.w_T * cfg.sigma2);
  auto pooled_rate = [&](double s) { return cfg.w_T * std::log1p(s * scale); };
  auto harvested = [&](std::size_t k, double b) { return cfg.model.harvest(cfg.p_T * ch.h[k] * b) * ch.g[k]; };
  auto power = [&](std::size_t k, double b) { return harvested(k, b) / (ch.h[k] * (1.0 - b)); };

  std::size_t evals = 0;
  std::vector<double> beta(n);
  auto power_at = [&](double lambda) {
    ++evals;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      beta[k] = lambda > 0.0 ? ps_link_maximizer(cfg, ch, k, lambda, upper[k]) : upper[k];
      total += power(k, beta[k]);
    }
    return total;
  };

  double dual = 0.0;
  if (power_at(0.0) > cfg.p_T) {
    // Power used is continuous and nonincreasing in lambda; at lambda >= max h
    // every link shuts off.
    double hi = *std::max_element(ch.h.begin(), ch.h.end());
    double lo = hi;
    for (int i = 0; i < 4000 && lo > 0.0; ++i) {
      lo *= 0.5;
      if (power_at(lo) > cfg.p_T) break;
      hi = lo;
    }
    while (true) {
      const double mid = std::sqrt(lo) * std::sqrt(hi);
      if (!(mid > lo && mid < hi)) break;
      (power_at(mid) > cfg.p_T ? lo : hi) = mid;
    }
    const double used = power_at(hi);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += harvested(k, beta[k]);
    // Weak duality: lambda p_T + sum max (s_k - lambda P_k) bounds the optimum.
    dual = s + hi * (cfg.p_T - used);
  } else {
    for (std::size_t k = 0; k < n; ++k) dual += harvested(k, beta[k]);
  }

  SolveResult out;
  out.allocation = finish_ps_allocation(cfg, ch, beta);
  out.throughput = throughput_ps(cfg, ch, out.allocation);
  out.diagnostics.iterations = evals;
  out.diagnostics.certified_gap = std::max(0.0, pooled_rate(dual) - out.throughput);
  return out;
}

SolveResult solve_ps_polyblock(const SystemConfig& cfg, const ChannelRealization& ch) {
  cfg.validate();
  ch.validate();
  const std::size_t n = ch.size();
  if (cfg.N != n) throw std::domain_error("solve_ps: vector length mismatch");

  std::vector<double> upper(n);
  for (std::size_t k = 0; k < n; ++k) upper[k] = beta_upper_logistic(cfg, ch, k);
  if (std::all_of(upper.begin(), upper.end(), [](double b) { return b <= 0.0; })) {
    return SolveResult{Allocation::zero(Mode::PS, n), 0.0, {}};
  }

  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = cfg.p_T * ch.h[k];
  const double scale = 1.0 / (cfg.w_T * cfg.sigma2);

  MonotonicProblem prob;
  prob.box = Box{std::vector<double>(n, 0.0), upper};
  // Pooled throughput w_T ln(1 + sum phi g / (w_T sigma2)).
  prob.objective = [&](std::span<const double> beta) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += cfg.model.harvest(x[k] * beta[k]) * ch.g[k];
    return cfg.w_T * std::log1p(s * scale);
  };
  prob.constraint = [&](std::span<const double> beta) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      s += cfg.model.harvest(x[k] * beta[k]) * ch.g[k] / (ch.h[k] * (1.0 - beta[k]));
    }
    return s - cfg.p_T;
  };

  PolyblockOptions opts;
  opts.epsilon = cfg.epsilon;
  const PolyblockResult pb = polyblock_solve(prob, opts);

  std::vector<double> beta(n);
  for (std::size_t k = 0; k < n; ++k) beta[k] = std::clamp(pb.x[k], 0.0, upper[k]);

  SolveResult out;
  out.allocation = finish_ps_allocation(cfg, ch, std::move(beta));
  out.throughput = throughput_ps(cfg, ch, out.allocation);
  out.diagnostics.iterations = pb.iterations;
  out.diagnostics.certified_gap = std::max(0.0, pb.value + pb.certified_gap - out.throughput);
  return out;
}

SolveResult solve_ps_logistic(const SystemConfig& cfg, const ChannelRealization& ch) {
  if (!cfg.model.is_logistic()) throw std::invalid_argument("solve_ps_logistic: harvester is not logistic");
  return solve_ps_multiplier(cfg, ch);
}

}  // namespace swipt
