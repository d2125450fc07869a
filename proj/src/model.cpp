#include "swipt/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace swipt {

namespace {

void check_lengths(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc) {
  const std::size_t n = ch.size();
  if (ch.g.size() != n || alloc.p.size() != n || alloc.w.size() != n || cfg.N != n) {
    throw std::domain_error("throughput: vector length mismatch");
  }
}

}  // namespace

void SystemConfig::validate() const {
  if (N < 1) throw std::invalid_argument("SystemConfig: N must be >= 1");
  if (!(w_T > 0.0)) throw std::invalid_argument("SystemConfig: w_T must be positive");
  if (!(p_T > 0.0)) throw std::invalid_argument("SystemConfig: p_T must be positive");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("SystemConfig: sigma2 must be positive");
  if (!(q_max > 0.0)) throw std::invalid_argument("SystemConfig: q_max must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("SystemConfig: epsilon must be positive");
}

void ChannelRealization::validate() const {
  if (h.size() != g.size()) throw std::invalid_argument("ChannelRealization: h and g differ in length");
  for (std::size_t n = 0; n < h.size(); ++n) {
    if (!(h[n] > 0.0) || !(g[n] > 0.0)) {
      throw std::invalid_argument("ChannelRealization: gains must be strictly positive");
    }
  }
}

Allocation Allocation::ts(double alpha, std::vector<double> p, std::vector<double> w) {
  Allocation a;
  a.mode = Mode::TS;
  a.alpha = alpha;
  a.p = std::move(p);
  a.w = std::move(w);
  return a;
}

Allocation Allocation::ps(std::vector<double> beta, std::vector<double> p, std::vector<double> w) {
  Allocation a;
  a.mode = Mode::PS;
  a.beta = std::move(beta);
  a.p = std::move(p);
  a.w = std::move(w);
  return a;
}

Allocation Allocation::zero(Mode mode, std::size_t n) {
  if (mode == Mode::TS) return ts(0.0, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0));
  return ps(std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0));
}

ChannelRealization sample_channels(std::uint64_t seed, std::size_t n, double lo_db, double hi_db) {
  if (n == 0) throw std::domain_error("sample_channels: N must be >= 1");
  if (!(lo_db <= hi_db)) throw std::domain_error("sample_channels: lo_db must not exceed hi_db");

  // Raw 53-bit draws rather than std::uniform_real_distribution, whose output
  // is implementation-defined.
  std::mt19937_64 rng(seed);
  auto draw_db = [&] {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo_db + (hi_db - lo_db) * u;
  };
  ChannelRealization ch;
  ch.h.resize(n);
  ch.g.resize(n);
  for (auto& v : ch.h) v = std::pow(10.0, draw_db() / 10.0);
  for (auto& v : ch.g) v = std::pow(10.0, draw_db() / 10.0);
  return ch;
}

double link_rate(double w, double snr_num) {
  if (w <= 0.0) return 0.0;
  return w * std::log1p(snr_num / w);
}

double throughput_ts(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc) {
  check_lengths(cfg, ch, alloc);
  if (alloc.mode != Mode::TS || !alloc.alpha) throw std::domain_error("throughput_ts: allocation is not TS");
  const double alpha = *alloc.alpha;
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("throughput_ts: alpha outside [0, 1]");
  if (alpha == 1.0) return 0.0;

  const double ratio = alpha / (1.0 - alpha);
  double total = 0.0;
  for (std::size_t n = 0; n < ch.size(); ++n) {
    const double first = link_rate(alloc.w[n], alloc.p[n] * ch.h[n] / cfg.sigma2);
    const double relay = ratio * cfg.model.harvest(cfg.p_T * ch.h[n]);
    const double second = link_rate(alloc.w[n], relay * ch.g[n] / cfg.sigma2);
    total += std::min(first, second);
  }
  return (1.0 - alpha) * total;
}

double throughput_ps(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc) {
  check_lengths(cfg, ch, alloc);
  if (alloc.mode != Mode::PS || alloc.beta.size() != ch.size()) {
    throw std::domain_error("throughput_ps: allocation is not PS");
  }
  double total = 0.0;
  for (std::size_t n = 0; n < ch.size(); ++n) {
    const double beta = alloc.beta[n];
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::domain_error("throughput_ps: beta outside [0, 1]");
    const double first = link_rate(alloc.w[n], alloc.p[n] * ch.h[n] * (1.0 - beta) / cfg.sigma2);
    const double relay = cfg.model.harvest(cfg.p_T * ch.h[n] * beta);
    const double second = link_rate(alloc.w[n], relay * ch.g[n] / cfg.sigma2);
    total += std::min(first, second);
  }
  return total;
}

double throughput(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc) {
  return alloc.mode == Mode::TS ? throughput_ts(cfg, ch, alloc) : throughput_ps(cfg, ch, alloc);
}

}  // namespace swipt
