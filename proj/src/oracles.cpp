#include "swipt/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swipt::oracle {

namespace {

double pooled(const SystemConfig& cfg, double snr_sum) { return cfg.w_T * std::log1p(snr_sum / (cfg.w_T * cfg.sigma2)); }

std::vector<double> proportional(const std::vector<double>& weight, double total) {
  const double sum = std::accumulate(weight.begin(), weight.end(), 0.0);
  std::vector<double> out(weight.size(), 0.0);
  if (!(sum > 0.0)) return out;
  for (std::size_t n = 0; n < weight.size(); ++n) out[n] = total * weight[n] / sum;
  return out;
}

// One link's grid: split ratios whose rate-balanced power is evenly spaced.
struct LinkGrid {
  std::vector<double> beta;
  std::vector<double> power;
  std::vector<double> harvested;  // phi(p_T h beta) g
};

LinkGrid link_grid(const SystemConfig& cfg, double h, double g, std::size_t K) {
  const double x = cfg.p_T * h;
  auto phi = [&](double t) { return cfg.model.harvest(x * (1.0 - t)); };  // t = 1 - beta
  auto power = [&](double t) { return phi(t) * g / (h * t); };

  // Smallest t (largest beta) keeping the relay at or under q_max.
  double t_cap = 0.0;
  if (phi(0.0) > cfg.q_max) {
    double lo = 0.0, hi = 1.0;
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (phi(mid) > cfg.q_max ? lo : hi) = mid;
    }
    t_cap = hi;
  }
  const double p_top = t_cap > 0.0 ? std::min(cfg.p_T, power(t_cap)) : cfg.p_T;

  LinkGrid grid;
  for (std::size_t j = 0; j < K; ++j) {
    const double target = p_top * static_cast<double>(j) / static_cast<double>(K - 1);
    // Largest beta whose power stays within the target.
    double lo = std::max(t_cap, 0.0), hi = 1.0;
    if (t_cap > 0.0 && power(t_cap) <= target) {
      hi = t_cap;
    } else {
      while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (power(mid) > target ? lo : hi) = mid;
      }
    }
    const double beta = 1.0 - hi;
    grid.beta.push_back(beta);
    grid.power.push_back(beta > 0.0 ? power(hi) : 0.0);
    grid.harvested.push_back(cfg.model.harvest(x * beta) * g);
  }
  return grid;
}

}  // namespace

std::vector<double> lp_vertex(const std::vector<double>& h, const std::vector<double>& caps, double p_T) {
  const std::size_t n = h.size();
  if (caps.size() != n) throw std::invalid_argument("lp_vertex: length mismatch");
  if (n > 8) throw std::invalid_argument("lp_vertex: at most 8 links");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<double> best(n, 0.0);
  double best_val = -1.0;
  std::vector<double> p(n);
  do {
    std::fill(p.begin(), p.end(), 0.0);
    double left = p_T;
    double val = 0.0;
    for (std::size_t k : order) {
      p[k] = std::min(caps[k], left);
      left -= p[k];
      val += p[k] * h[k];
    }
    if (val > best_val) {
      best_val = val;
      best = p;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

GridResult grid_ts(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t K) {
  if (K < 2) throw std::invalid_argument("grid_ts: K must be >= 2");
  const std::size_t n = ch.size();
  std::vector<double> harvested(n);
  double a_max = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    harvested[k] = cfg.model.harvest(cfg.p_T * ch.h[k]);
    a_max = std::min(a_max, cfg.q_max / (cfg.q_max + harvested[k]));
  }

  std::vector<double> alpha(K), F(K);
  GridResult res;
  res.argmax = Allocation::zero(Mode::TS, n);
  res.value = -1.0;
  for (std::size_t i = 0; i < K; ++i) {
    alpha[i] = a_max * static_cast<double>(i) / static_cast<double>(K - 1);
    const double a = std::min(alpha[i], 1.0 - 1e-12);
    std::vector<double> caps(n);
    for (std::size_t k = 0; k < n; ++k) caps[k] = a / (1.0 - a) * harvested[k] * ch.g[k] / ch.h[k];
    const std::vector<double> p = lp_vertex(ch.h, caps, cfg.p_T);
    std::vector<double> ph(n);
    double gain = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      ph[k] = p[k] * ch.h[k];
      gain += ph[k];
    }
    F[i] = pooled(cfg, gain);
    Allocation alloc = Allocation::ts(alpha[i], p, proportional(ph, cfg.w_T));
    const double v = throughput_ts(cfg, ch, alloc);
    if (v > res.value) {
      res.value = v;
      res.argmax = std::move(alloc);
    }
  }
  res.upper_bound = res.value;
  for (std::size_t i = 0; i + 1 < K; ++i) res.upper_bound = std::max(res.upper_bound, (1.0 - alpha[i]) * F[i + 1]);
  return res;
}

GridResult grid_ps(const SystemConfig& cfg, const ChannelRealization& ch, std::size_t K) {
  const std::size_t n = ch.size();
  if (n > 3) throw std::invalid_argument("grid_ps: at most 3 links");
  if (K < 2) throw std::invalid_argument("grid_ps: K must be >= 2");

  std::vector<LinkGrid> grids;
  for (std::size_t k = 0; k < n; ++k) grids.push_back(link_grid(cfg, ch.h[k], ch.g[k], K));
  const double budget = cfg.p_T * (1.0 + 1e-12);

  GridResult res;
  res.argmax = Allocation::zero(Mode::PS, n);
  double best_harvest = -1.0;
  double bound_harvest = 0.0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    double used = 0.0, s = 0.0, s_up = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      used += grids[k].power[idx[k]];
      s += grids[k].harvested[idx[k]];
      s_up += grids[k].harvested[std::min(idx[k] + 1, K - 1)];
    }
    if (used <= budget) {
      // Every point of the cell above this corner harvests at most s_up.
      bound_harvest = std::max(bound_harvest, s_up);
      if (s > best_harvest) {
        best_harvest = s;
        for (std::size_t k = 0; k < n; ++k) {
          res.argmax.beta[k] = grids[k].beta[idx[k]];
          res.argmax.p[k] = grids[k].power[idx[k]];
        }
      }
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == K) idx[k++] = 0;
    if (k == n) break;
  }

  std::vector<double> pool(n);
  for (std::size_t k = 0; k < n; ++k) pool[k] = cfg.model.harvest(cfg.p_T * ch.h[k] * res.argmax.beta[k]) * ch.g[k];
  res.argmax.w = proportional(pool, cfg.w_T);
  res.value = throughput_ps(cfg, ch, res.argmax);
  res.upper_bound = std::max(res.value, pooled(cfg, bound_harvest));
  return res;
}

}  // namespace swipt::oracle
