#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common.hpp"
#include "swipt/model.hpp"

using namespace swipt;
using swipt::test::defaults;

TEST(SampleChannels, DefaultRangeMembership) {
  const ChannelRealization ch = sample_channels(42, 4, -50.0, -40.0);
  ASSERT_EQ(ch.size(), 4u);
  for (std::size_t n = 0; n < 4; ++n) {
    for (double v : {ch.h[n], ch.g[n]}) {
      EXPECT_GE(v, 1e-5 * (1 - 1e-12));
      EXPECT_LE(v, 1e-4 * (1 + 1e-12));
    }
  }
}

TEST(SampleChannels, DegenerateInterval) {
  const ChannelRealization ch = sample_channels(3, 5, -40.0, -40.0);
  for (std::size_t n = 0; n < 5; ++n) {
    EXPECT_DOUBLE_EQ(ch.h[n], 1e-4);
    EXPECT_DOUBLE_EQ(ch.g[n], 1e-4);
  }
}

TEST(SampleChannels, Deterministic) {
  const ChannelRealization a = sample_channels(99, 6, -50.0, -40.0);
  const ChannelRealization b = sample_channels(99, 6, -50.0, -40.0);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.g, b.g);
  const ChannelRealization c = sample_channels(100, 6, -50.0, -40.0);
  EXPECT_NE(a.h, c.h);
}

TEST(SampleChannels, ZeroLinksThrows) { EXPECT_THROW(sample_channels(1, 0, -50, -40), std::domain_error); }

TEST(SystemConfig, ValidateRejectsBadFields) {
  SystemConfig cfg = defaults(ModelKind::Logistic);
  EXPECT_NO_THROW(cfg.validate());
  for (double SystemConfig::*field : {&SystemConfig::w_T, &SystemConfig::p_T, &SystemConfig::sigma2,
                                      &SystemConfig::q_max, &SystemConfig::epsilon}) {
    SystemConfig bad = cfg;
    bad.*field = 0.0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
  }
  SystemConfig none = cfg;
  none.N = 0;
  EXPECT_THROW(none.validate(), std::invalid_argument);
}

TEST(ThroughputTs, EndpointsAreZero) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  const ChannelRealization ch = test::draw(0, 2);
  const std::vector<double> p{0.5, 0.5}, w{5e5, 5e5};
  EXPECT_EQ(throughput_ts(cfg, ch, Allocation::ts(0.0, p, w)), 0.0);
  EXPECT_EQ(throughput_ts(cfg, ch, Allocation::ts(1.0, p, w)), 0.0);
}

TEST(ThroughputTs, SingleLinkHandValue) {
  SystemConfig cfg = defaults(ModelKind::Cutoff, 1);
  const ChannelRealization ch{{2e-5}, {5e-5}};
  // phi(1 W * 2e-5) = 0.7833 * 2e-5; relay power = phi (alpha = 1/2).
  const double first = 1e6 * std::log(1.0 + 2e-5 / (1e6 * 1e-14));
  const double second = 1e6 * std::log(1.0 + 0.7833 * 2e-5 * 5e-5 / (1e6 * 1e-14));
  const double expected = 0.5 * std::min(first, second);
  const double got = throughput_ts(cfg, ch, Allocation::ts(0.5, {1.0}, {1e6}));
  EXPECT_NEAR(got, expected, 1e-9 * expected);
  EXPECT_NEAR(got, 0.5 * 1e6 * std::log(1.0 + 0.7833 * 2e-5 * 5e-5 / 1e-8), 1e-6);
}

TEST(ThroughputPs, ExtremeSplitsAreZero) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 3);
  const ChannelRealization ch = test::draw(1, 3);
  const std::vector<double> p{0.3, 0.3, 0.4}, w{3e5, 3e5, 4e5};
  EXPECT_EQ(throughput_ps(cfg, ch, Allocation::ps({0, 0, 0}, p, w)), 0.0);
  EXPECT_EQ(throughput_ps(cfg, ch, Allocation::ps({1, 1, 1}, p, w)), 0.0);
}

TEST(ThroughputPs, SingleLinkHandValue) {
  const SystemConfig cfg = defaults(ModelKind::Cutoff, 1);
  const ChannelRealization ch{{8e-5}, {3e-5}};
  const double beta = 0.4;
  const double first = 1e6 * std::log(1.0 + 1.0 * 8e-5 * 0.6 / 1e-8);
  const double second = 1e6 * std::log(1.0 + 0.7833 * 8e-5 * 0.4 * 3e-5 / 1e-8);
  const double got = throughput_ps(cfg, ch, Allocation::ps({beta}, {1.0}, {1e6}));
  EXPECT_NEAR(got, std::min(first, second), 1e-9 * got);
}

TEST(Throughput, LengthMismatchThrows) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  const ChannelRealization ch = test::draw(0, 2);
  EXPECT_THROW(throughput_ts(cfg, ch, Allocation::ts(0.5, {1.0}, {1e6})), std::domain_error);
  EXPECT_THROW(throughput_ps(cfg, ch, Allocation::ps({0.5}, {1.0, 0.0}, {1e6, 0.0})), std::domain_error);
}

TEST(LinkRate, ZeroBandwidthLimit) {
  EXPECT_EQ(link_rate(0.0, 5.0), 0.0);
  EXPECT_NEAR(link_rate(1e-12, 1.0), 1e-12 * std::log1p(1e12), 1e-20);
}

TEST(ModelProperty, PermutationInvariance) {
  for (ModelKind m : {ModelKind::Logistic, ModelKind::Cutoff}) {
    const SystemConfig cfg = defaults(m, 4);
    for (std::size_t t = 0; t < 20; ++t) {
      const ChannelRealization ch = test::draw(t);
      const std::vector<double> p{0.1, 0.2, 0.3, 0.4}, w{4e5, 3e5, 2e5, 1e5}, beta{0.9, 0.5, 0.99, 0.7};
      std::vector<std::size_t> perm{2, 0, 3, 1};
      ChannelRealization pc{std::vector<double>(4), std::vector<double>(4)};
      std::vector<double> pp(4), pw(4), pb(4);
      for (std::size_t k = 0; k < 4; ++k) {
        pc.h[k] = ch.h[perm[k]];
        pc.g[k] = ch.g[perm[k]];
        pp[k] = p[perm[k]];
        pw[k] = w[perm[k]];
        pb[k] = beta[perm[k]];
      }
      EXPECT_NEAR(throughput_ts(cfg, ch, Allocation::ts(0.6, p, w)),
                  throughput_ts(cfg, pc, Allocation::ts(0.6, pp, pw)), 1e-9);
      EXPECT_NEAR(throughput_ps(cfg, ch, Allocation::ps(beta, p, w)),
                  throughput_ps(cfg, pc, Allocation::ps(pb, pp, pw)), 1e-9);
    }
  }
}

TEST(ModelProperty, TsVanishesAsAlphaApproachesOne) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  const ChannelRealization ch = test::draw(5, 2);
  const std::vector<double> p{0.5, 0.5}, w{5e5, 5e5};
  double prev = throughput_ts(cfg, ch, Allocation::ts(0.99, p, w));
  for (double a : {0.999, 0.9999, 0.99999, 0.999999}) {
    const double v = throughput_ts(cfg, ch, Allocation::ts(a, p, w));
    EXPECT_LE(v, prev);
    EXPECT_GE(v, 0.0);
    prev = v;
  }
  EXPECT_LT(prev, 1e-3 * throughput_ts(cfg, ch, Allocation::ts(0.5, p, w)));
}

TEST(ModelProperty, NatsToBits) { EXPECT_NEAR(nats_to_bits(std::log(2.0)), 1.0, 1e-15); }
