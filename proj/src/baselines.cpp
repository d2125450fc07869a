#include "swipt/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "swipt/ps_cutoff.hpp"
#include "swipt/ps_logistic.hpp"
#include "swipt/ts_solver.hpp"

namespace swipt {

namespace {

Allocation single_link(Mode mode, std::size_t n, std::size_t pick, double ratio, const SystemConfig& cfg) {
  std::vector<double> p(n, 0.0);
  std::vector<double> w(n, 0.0);
  p[pick] = cfg.p_T;
  w[pick] = cfg.w_T;
  if (mode == Mode::TS) return Allocation::ts(ratio, std::move(p), std::move(w));
  std::vector<double> beta(n, 0.0);
  beta[pick] = ratio;
  return Allocation::ps(std::move(beta), std::move(p), std::move(w));
}

// Golden-section refinement of a 1-D maximum bracketed by [lo, hi].
template <class F>
double refine_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  while (hi - lo > tol) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = f(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = f(a);
    }
  }
  return fa >= fb ? a : b;
}

}  // namespace

SolveResult solve_ts_select(const SystemConfig& cfg, const ChannelRealization& ch) {
  cfg.validate();
  ch.validate();
  const std::size_t n = ch.size();
  if (cfg.N != n) throw std::domain_error("solve_ts_select: vector length mismatch");
  const double a_hi = std::min(alpha_max(cfg, ch), kAlphaCeiling);

  SolveResult best{Allocation::zero(Mode::TS, n), 0.0, {}};
  for (std::size_t k = 0; k < n; ++k) {
    const double first = link_rate(cfg.w_T, cfg.p_T * ch.h[k] / cfg.sigma2);
    const double relay = cfg.model.harvest(cfg.p_T * ch.h[k]) * ch.g[k] / cfg.sigma2;
    auto rate = [&](double a) {
      return (1.0 - a) * std::min(first, link_rate(cfg.w_T, a / (1.0 - a) * relay));
    };

    std::size_t arg = 0;
    double top = rate(0.0);
    for (std::size_t i = 1; i <= kSelectGrid; ++i) {
      const double v = rate(a_hi * static_cast<double>(i) / kSelectGrid);
      if (v > top) {
        top = v;
        arg = i;
      }
    }
    const double step = a_hi / kSelectGrid;
    const double lo = step * static_cast<double>(arg > 0 ? arg - 1 : 0);
    const double hi = std::min(a_hi, step * static_cast<double>(arg + 1));
    double alpha = step * static_cast<double>(arg);
    const double refined = refine_max(rate, lo, hi, kSelectAlphaTol);
    if (rate(refined) > rate(alpha)) alpha = refined;
    // The hop-balancing ratio is the kink of the min; try it directly too.
    if (relay > 0.0) {
      const double direct = cfg.p_T * ch.h[k] / cfg.sigma2;
      const double balance = std::min(a_hi, direct / (direct + relay));
      if (rate(balance) > rate(alpha)) alpha = balance;
    }

    Allocation alloc = single_link(Mode::TS, n, k, alpha, cfg);
    const double thr = throughput_ts(cfg, ch, alloc);
    if (thr > best.throughput) best = SolveResult{std::move(alloc), thr, {}};
  }
  return best;
}

SolveResult solve_ps_select(const SystemConfig& cfg, const ChannelRealization& ch) {
  cfg.validate();
  ch.validate();
  const std::size_t n = ch.size();
  if (cfg.N != n) throw std::domain_error("solve_ps_select: vector length mismatch");

  SolveResult best{Allocation::zero(Mode::PS, n), 0.0, {}};
  for (std::size_t k = 0; k < n; ++k) {
    const double beta = cfg.model.is_cutoff() ? beta_bounds_cutoff(cfg, ch, k).upper : beta_upper_logistic(cfg, ch, k);
    Allocation alloc = single_link(Mode::PS, n, k, beta, cfg);
    const double thr = throughput_ps(cfg, ch, alloc);
    if (thr > best.throughput) best = SolveResult{std::move(alloc), thr, {}};
  }
  return best;
}

}  // namespace swipt
