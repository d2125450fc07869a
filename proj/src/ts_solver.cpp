#include "swipt/ts_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swipt/monotonic.hpp"

namespace swipt {

TsInnerProblem::TsInnerProblem(const SystemConfig& cfg, const ChannelRealization& ch) : cfg_(cfg), ch_(ch) {
  const std::size_t n = ch.size();
  if (ch.g.size() != n || cfg.N != n) throw std::domain_error("TsInnerProblem: vector length mismatch");

  cap_unit_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double harvested = cfg.model.harvest(cfg.p_T * ch.h[k]);
    cap_unit_[k] = harvested * ch.g[k] / ch.h[k];
    alpha_max_ = std::min(alpha_max_, cfg.q_max / (cfg.q_max + harvested));
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return ch.h[a] > ch.h[b]; });
}

double TsInnerProblem::ratio(double alpha) const {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::domain_error("TS inner problem: alpha must lie in [0, 1)");
  return alpha / (1.0 - alpha);
}

std::vector<double> TsInnerProblem::caps(double alpha) const {
  const double r = ratio(alpha);
  std::vector<double> out(cap_unit_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = r * cap_unit_[k];
  return out;
}

std::vector<double> TsInnerProblem::power(double alpha) const {
  const double r = ratio(alpha);
  std::vector<double> p(cap_unit_.size(), 0.0);
  double remaining = cfg_.p_T;
  for (std::size_t k : order_) {
    if (remaining <= 0.0) break;
    p[k] = std::min(r * cap_unit_[k], remaining);
    remaining -= p[k];
  }
  return p;
}

double TsInnerProblem::value(double alpha) const {
  const double r = ratio(std::min(alpha, kAlphaCeiling));
  double remaining = cfg_.p_T;
  double gain = 0.0;
  for (std::size_t k : order_) {
    if (remaining <= 0.0) break;
    const double take = std::min(r * cap_unit_[k], remaining);
    gain += take * ch_.h[k];
    remaining -= take;
  }
  return cfg_.w_T * std::log1p(gain / (cfg_.w_T * cfg_.sigma2));
}

double alpha_max(const SystemConfig& cfg, const ChannelRealization& ch) {
  return TsInnerProblem(cfg, ch).alpha_max();
}

std::vector<double> power_caps(const SystemConfig& cfg, const ChannelRealization& ch, double alpha) {
  return TsInnerProblem(cfg, ch).caps(alpha);
}

std::vector<double> lower_level_power(const SystemConfig& cfg, const ChannelRealization& ch, double alpha) {
  return TsInnerProblem(cfg, ch).power(alpha);
}

double lower_level_value(const SystemConfig& cfg, const ChannelRealization& ch, double alpha) {
  return TsInnerProblem(cfg, ch).value(alpha);
}

std::vector<double> bandwidth_alloc(std::span<const double> p, std::span<const double> h, double w_T) {
  if (p.size() != h.size()) throw std::domain_error("bandwidth_alloc: vector length mismatch");
  std::vector<double> w(p.size(), 0.0);
  double total = 0.0;
  std::size_t last = p.size();
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double weight = p[k] * h[k];
    if (weight > 0.0) {
      total += weight;
      last = k;
    }
  }
  if (!(total > 0.0)) return w;

  double assigned = 0.0;
  for (std::size_t k = 0; k < last; ++k) {
    const double weight = p[k] * h[k];
    if (weight > 0.0) {
      w[k] = w_T * (weight / total);
      assigned += w[k];
    }
  }
  w[last] = std::max(0.0, w_T - assigned);
  return w;
}

std::vector<double> power_topup(std::span<const double> p, double p_T, std::span<const double> h) {
  if (p.size() != h.size() || p.empty()) throw std::domain_error("power_topup: vector length mismatch");
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (sum > p_T * (1.0 + 1e-12)) throw std::domain_error("power_topup: power already exceeds p_T");

  std::vector<double> out(p.begin(), p.end());
  const double surplus = p_T - sum;
  if (surplus <= 0.0) return out;

  std::size_t target = p.size();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0 && (target == p.size() || h[k] > h[target])) target = k;
  }
  if (target == p.size()) target = static_cast<std::size_t>(std::max_element(h.begin(), h.end()) - h.begin());
  out[target] += surplus;
  return out;
}

SolveResult solve_ts(const SystemConfig& cfg, const ChannelRealization& ch) {
  cfg.validate();
  ch.validate();
  const TsInnerProblem inner(cfg, ch);
  const std::size_t n = ch.size();

  const double a_hi = std::min(inner.alpha_max(), kAlphaCeiling);
  const double f_hi = inner.value(a_hi);
  if (!(f_hi > 0.0)) return SolveResult{Allocation::zero(Mode::TS, n), 0.0, {}};

  // With u = alpha and v standing in for 1 - alpha: max v F(u) s.t. u + v <= 1.
  // Both sides are nondecreasing and the constraint is linear, so the box stays
  // tight even when F blows up near alpha_max.
  MonotonicProblem prob;
  prob.box = Box{{0.0, 0.0}, {a_hi, 1.0}};
  prob.objective = [&](std::span<const double> x) { return x[1] * inner.value(x[0]); };
  prob.constraint = [](std::span<const double> x) { return x[0] + x[1] - 1.0; };

  PolyblockOptions opts;
  opts.epsilon = cfg.epsilon;
  const PolyblockResult pb = polyblock_solve(prob, opts);

  const double alpha = std::clamp(pb.x[0], 0.0, a_hi);
  const std::vector<double> p = inner.power(alpha);
  const std::vector<double> w = bandwidth_alloc(p, ch.h, cfg.w_T);

  SolveResult out;
  out.allocation = Allocation::ts(alpha, power_topup(p, cfg.p_T, ch.h), w);
  out.throughput = throughput_ts(cfg, ch, out.allocation);
  out.diagnostics.iterations = pb.iterations;
  out.diagnostics.certified_gap = std::max(0.0, pb.value + pb.certified_gap - out.throughput);
  return out;
}

}  // namespace swipt
