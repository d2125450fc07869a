#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "common.hpp"
#include "swipt/oracles.hpp"
#include "swipt/ps_logistic.hpp"

using namespace swipt;
using test::defaults;
using test::draw;
using test::rel_diff;

TEST(BetaUpper, InactiveRelayLimitLeavesBalanceRoot) {
  SystemConfig cfg = defaults(ModelKind::Logistic);
  const ChannelRealization ch = draw(2);
  SystemConfig loose = cfg;
  loose.q_max = 1.0;  // above M
  for (std::size_t n = 0; n < ch.size(); ++n) {
    const double b = beta_upper_logistic(loose, ch, n);
    const double x = cfg.p_T * ch.h[n];
    // Defining equality of the balance root.
    const double lhs = loose.model.harvest(x * b) / (1.0 - b);
    EXPECT_LE(rel_diff(lhs, x / ch.g[n]), 1e-9);
    EXPECT_LE(beta_upper_logistic(cfg, ch, n), b);
  }
}

TEST(BetaUpper, TinySecondHopPushesTowardOne) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 1);
  SystemConfig loose = cfg;
  loose.q_max = 1.0;
  const double b = beta_upper_logistic(loose, ChannelRealization{{5e-5}, {1e-12}}, 0);
  EXPECT_GT(b, 1.0 - 1e-6);
  EXPECT_LT(b, 1.0);
}

TEST(BetaUpper, DefaultsBalanceResidual) {
  const SystemConfig cfg = defaults(ModelKind::Logistic);
  const ChannelRealization ch = draw(0);
  for (std::size_t n = 0; n < ch.size(); ++n) {
    const double b = beta_upper_logistic(cfg, ch, n);
    EXPECT_GT(b, 0.0);
    EXPECT_LE(cfg.model.harvest(cfg.p_T * ch.h[n] * b), cfg.q_max * (1 + 1e-12));
  }
}

TEST(RecoverPower, Examples) {
  SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  cfg.q_max = 1.0;
  const ChannelRealization ch = draw(1, 2);
  EXPECT_EQ(recover_power_ps(cfg, ch, {0.0, 0.0}), (std::vector<double>{0.0, 0.0}));
  const double b = beta_upper_logistic(cfg, ch, 0);
  EXPECT_NEAR(recover_power_ps(cfg, ch, {b, 0.0})[0], cfg.p_T, 1e-9 * cfg.p_T);
  EXPECT_THROW(recover_power_ps(cfg, ch, {1.0, 0.5}), std::domain_error);
  EXPECT_THROW(recover_power_ps(cfg, ch, {0.5}), std::domain_error);
}

TEST(RecoverPower, HopsBalance) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  const ChannelRealization ch = draw(3, 2);
  const std::vector<double> beta{0.99, 0.995};
  const std::vector<double> p = recover_power_ps(cfg, ch, beta);
  for (std::size_t n = 0; n < 2; ++n) {
    const double first = p[n] * ch.h[n] * (1 - beta[n]);
    const double second = cfg.model.harvest(cfg.p_T * ch.h[n] * beta[n]) * ch.g[n];
    EXPECT_LE(rel_diff(first, second), 1e-9);
  }
}

TEST(SolvePsLogistic, GenerousBudgetTakesUpperBounds) {
  SystemConfig cfg = defaults(ModelKind::Logistic, 3);
  cfg.p_T = 1e3;
  cfg.q_max = 1e-3;
  const ChannelRealization ch = draw(5, 3);
  const SolveResult r = solve_ps_logistic(cfg, ch);
  for (std::size_t n = 0; n < ch.size(); ++n) {
    EXPECT_LE(rel_diff(r.allocation.beta[n], beta_upper_logistic(cfg, ch, n)), 1e-9);
  }
}

TEST(SolvePsLogistic, TwoLinksMatchGrid) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  for (std::size_t t = 0; t < 5; ++t) {
    const ChannelRealization ch = draw(t, 2);
    const double v = solve_ps_logistic(cfg, ch).throughput;
    const oracle::GridResult g = oracle::grid_ps(cfg, ch, 300);
    EXPECT_GE(v, g.value - cfg.epsilon);
    EXPECT_LE(v, g.upper_bound + cfg.epsilon);
  }
}

TEST(SolvePsLogistic, FrozenTwoLinkReference) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  const double v = solve_ps_logistic(cfg, draw(0, 2)).throughput;
  EXPECT_GE(v, 167143.18472509965 - 1e-2);
  EXPECT_LE(v, 167143.22206382797 + 1e-2);
}

TEST(SolvePsLogistic, SingleLinkIsBalanceBisection) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 1);
  for (std::size_t t = 0; t < 5; ++t) {
    const ChannelRealization ch = draw(t, 1);
    const SolveResult r = solve_ps_logistic(cfg, ch);
    // With one link the budget binds at the smaller of the two bounds.
    EXPECT_LE(rel_diff(r.allocation.beta[0], beta_upper_logistic(cfg, ch, 0)), 1e-9);
  }
}

TEST(SolvePsLogistic, MultiplierMatchesPolyblockAtTwoLinks) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  for (std::size_t t = 0; t < 5; ++t) {
    const ChannelRealization ch = draw(t, 2);
    EXPECT_NEAR(solve_ps_multiplier(cfg, ch).throughput, solve_ps_polyblock(cfg, ch).throughput, cfg.epsilon);
  }
}

TEST(SolvePsLogistic, RejectsCutoffHarvester) {
  EXPECT_THROW(solve_ps_logistic(defaults(ModelKind::Cutoff), draw(0)), std::invalid_argument);
}

TEST(SolvePsLogistic, FastAtDefaultSize) {
  const SystemConfig cfg = defaults(ModelKind::Logistic);
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < 20; ++t) solve_ps_logistic(cfg, draw(t));
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 2.0);
}

TEST(PsProperty, RateBalancePowerAndEqualSnr) {
  const SystemConfig cfg = defaults(ModelKind::Logistic);
  for (std::size_t t = 0; t < 30; ++t) {
    const ChannelRealization ch = draw(t);
    const SolveResult r = solve_ps_logistic(cfg, ch);
    const std::vector<double>& beta = r.allocation.beta;
    const std::vector<double> p = recover_power_ps(cfg, ch, beta);
    EXPECT_LE(test::sum(p), cfg.p_T * (1 + 1e-9));
    double snr = -1.0;
    for (std::size_t n = 0; n < ch.size(); ++n) {
      const double harvested = cfg.model.harvest(cfg.p_T * ch.h[n] * beta[n]);
      EXPECT_LE(harvested, cfg.q_max * (1 + 1e-12));
      const double w = r.allocation.w[n];
      EXPECT_EQ(w > 0.0, harvested > 0.0);
      if (w <= 0.0) continue;
      EXPECT_LE(rel_diff(p[n] * ch.h[n] * (1 - beta[n]), harvested * ch.g[n]), 1e-9);
      const double s = harvested * ch.g[n] / (cfg.sigma2 * w);
      if (snr < 0) snr = s;
      EXPECT_LE(rel_diff(s, snr), 1e-9);
    }
  }
}

TEST(PsProperty, RelaxingRelayLimitNeverHurts) {
  const SystemConfig cfg = defaults(ModelKind::Logistic);
  for (std::size_t t = 0; t < 20; ++t) {
    const ChannelRealization ch = draw(t);
    double prev = 0.0;
    for (double q : {0.01, 0.02, 0.05, 0.1}) {
      SystemConfig c = cfg;
      c.q_max = q;
      const double v = solve_ps_logistic(c, ch).throughput;
      EXPECT_GE(v, prev - cfg.epsilon);
      prev = v;
    }
  }
}

TEST(PsProperty, CertificateBoundsTheGap) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  for (std::size_t t = 0; t < 5; ++t) {
    const ChannelRealization ch = draw(t, 2);
    const SolveResult r = solve_ps_logistic(cfg, ch);
    const oracle::GridResult g = oracle::grid_ps(cfg, ch, 300);
    EXPECT_GE(r.throughput + r.diagnostics.certified_gap, g.value - 1e-6);
  }
}
