#include "oracle_check.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "swipt/harness.hpp"
#include "swipt/oracles.hpp"
#include "swipt/ps_cutoff.hpp"
#include "swipt/ps_logistic.hpp"
#include "swipt/ts_solver.hpp"

namespace swipt {

namespace {

struct Tally {
  std::ostream& out;
  int failures = 0;

  void report(bool ok, const std::string& name, double worst) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    out << (ok ? "PASS " : "FAIL ") << name << "  worst=" << buf << '\n';
    if (!ok) ++failures;
  }
};

}  // namespace

int run_oracle_check(const RunConfig& base, std::size_t draws, std::ostream& out) {
  Tally tally{out};
  RunConfig small = base;
  small.N = 2;
  const SystemConfig logistic = small.system(ModelKind::Logistic);
  const SystemConfig cutoff = small.system(ModelKind::Cutoff);
  const double eps = logistic.epsilon;

  double ts_worst = 0.0, psl_worst = 0.0, psc_worst = 0.0, cross_worst = 0.0;
  bool ts_ok = true, psl_ok = true, psc_ok = true, cross_ok = true;
  for (std::size_t t = 0; t < draws; ++t) {
    const ChannelRealization ch = trial_channels(small, t);

    for (const SystemConfig* cfg : {&logistic, &cutoff}) {
      const double v = solve_ts(*cfg, ch).throughput;
      const oracle::GridResult g = oracle::grid_ts(*cfg, ch, 10000);
      // Below the grid by more than eps, or above its provable bound.
      const double miss = std::max(g.value - v - eps, v - g.upper_bound - eps);
      ts_worst = std::max(ts_worst, miss);
      ts_ok = ts_ok && miss <= 0.0;
    }

    {
      const double v = solve_ps_logistic(logistic, ch).throughput;
      const oracle::GridResult g = oracle::grid_ps(logistic, ch, 300);
      const double miss = std::max(g.value - v - eps, v - g.upper_bound - eps);
      psl_worst = std::max(psl_worst, miss);
      psl_ok = psl_ok && miss <= 0.0;
    }

    {
      const double v = solve_ps_cutoff(cutoff, ch).throughput;
      const oracle::GridResult g = oracle::grid_ps(cutoff, ch, 500);
      const double rel = std::abs(v - g.value) / std::max(g.value, 1e-300);
      psc_worst = std::max(psc_worst, rel);
      psc_ok = psc_ok && rel <= 1e-3;

      const double other = solve_ps_polyblock(cutoff, ch).throughput;
      cross_worst = std::max(cross_worst, std::abs(v - other));
      cross_ok = cross_ok && std::abs(v - other) <= eps;
    }
  }
  tally.report(ts_ok, "ts vs alpha grid (K=1e4, excess over eps)", ts_worst);
  tally.report(psl_ok, "ps logistic vs beta grid (K=300, excess over eps)", psl_worst);
  tally.report(psc_ok, "ps cutoff vs beta grid (K=500, relative)", psc_worst);
  tally.report(cross_ok, "ps cutoff vs polyblock path (absolute)", cross_worst);

  // Greedy fill against exhaustive link orders at the configured N.
  double lp_worst = 0.0;
  const SystemConfig full = base.system(ModelKind::Logistic);
  for (std::size_t t = 0; t < draws; ++t) {
    const ChannelRealization ch = trial_channels(base, t);
    for (double alpha : {0.05, 0.2, 0.4, 0.6}) {
      const auto caps = power_caps(full, ch, alpha);
      const auto greedy = lower_level_power(full, ch, alpha);
      const auto exact = oracle::lp_vertex(ch.h, caps, full.p_T);
      double a = 0.0, b = 0.0;
      for (std::size_t n = 0; n < ch.size(); ++n) {
        a += greedy[n] * ch.h[n];
        b += exact[n] * ch.h[n];
      }
      lp_worst = std::max(lp_worst, std::abs(a - b) / std::max(b, 1e-300));
    }
  }
  tally.report(lp_worst <= 1e-12, "greedy inner power vs exhaustive orders (relative)", lp_worst);
  return tally.failures;
}

}  // namespace swipt
