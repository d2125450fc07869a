#include <gtest/gtest.h>

#include <algorithm>

#include "common.hpp"
#include "swipt/oracles.hpp"
#include "swipt/ts_solver.hpp"

using namespace swipt;
using test::defaults;
using test::draw;

TEST(LpVertex, DistinctGainsMatchGreedy) {
  const std::vector<double> p = oracle::lp_vertex({2.0, 1.0}, {0.6, 0.6}, 1.0);
  EXPECT_NEAR(p[0], 0.6, 1e-15);
  EXPECT_NEAR(p[1], 0.4, 1e-15);
}

TEST(LpVertex, CapsUnderBudgetAreTaken) {
  const std::vector<double> caps{0.1, 0.2, 0.3};
  EXPECT_EQ(oracle::lp_vertex({3, 1, 2}, caps, 1.0), caps);
}

TEST(LpVertex, EqualGainsTieObjective) {
  const std::vector<double> p = oracle::lp_vertex({1, 1, 1}, {0.3, 0.3, 0.3}, 0.5);
  EXPECT_NEAR(test::sum(p), 0.5, 1e-15);
}

TEST(LpVertex, RefusesLargeN) {
  EXPECT_THROW(oracle::lp_vertex(std::vector<double>(9, 1.0), std::vector<double>(9, 0.1), 1.0),
               std::invalid_argument);
}

TEST(GridTs, FrozenDefaults) {
  const ChannelRealization ch = draw(0);
  const oracle::GridResult l = oracle::grid_ts(defaults(ModelKind::Logistic), ch, 10000);
  const oracle::GridResult c = oracle::grid_ts(defaults(ModelKind::Cutoff), ch, 10000);
  EXPECT_NEAR(l.value, 110089.79730888239, 1e-6);
  EXPECT_NEAR(l.upper_bound, 110140.69745813731, 1e-6);
  EXPECT_NEAR(c.value, 208540.29054970189, 1e-6);
  EXPECT_NEAR(c.upper_bound, 208612.57642066252, 1e-6);
}

TEST(GridTs, CoarseAndFineAgreeWithinModulus) {
  const SystemConfig cfg = defaults(ModelKind::Logistic);
  for (std::size_t t = 0; t < 5; ++t) {
    const ChannelRealization ch = draw(t);
    const oracle::GridResult coarse = oracle::grid_ts(cfg, ch, 2);
    const oracle::GridResult fine = oracle::grid_ts(cfg, ch, 10000);
    EXPECT_LE(fine.value, coarse.upper_bound + 1e-9);
    EXPECT_LE(coarse.value, fine.upper_bound + 1e-9);
    EXPECT_GE(fine.modulus(), 0.0);
  }
}

TEST(GridTs, ArgmaxReevaluates) {
  const SystemConfig cfg = defaults(ModelKind::Cutoff);
  const ChannelRealization ch = draw(7);
  const oracle::GridResult g = oracle::grid_ts(cfg, ch, 500);
  EXPECT_NEAR(throughput(cfg, ch, g.argmax), g.value, 1e-9 * g.value);
}

TEST(GridPs, FrozenTwoLinks) {
  const ChannelRealization ch = draw(0, 2);
  const oracle::GridResult l = oracle::grid_ps(defaults(ModelKind::Logistic, 2), ch, 300);
  const oracle::GridResult c = oracle::grid_ps(defaults(ModelKind::Cutoff, 2), ch, 500);
  EXPECT_NEAR(l.value, 167143.18472509965, 1e-6);
  EXPECT_NEAR(l.upper_bound, 167143.22206382797, 1e-6);
  EXPECT_NEAR(c.value, 355686.83325079863, 1e-6);
  EXPECT_NEAR(c.upper_bound, 355686.93533133093, 1e-6);
}

TEST(GridPs, SingleLinkMatchesBalance) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 1);
  for (std::size_t t = 0; t < 5; ++t) {
    const ChannelRealization ch = draw(t, 1);
    const oracle::GridResult g = oracle::grid_ps(cfg, ch, 400);
    EXPECT_LE(g.value, g.upper_bound);
    EXPECT_NEAR(throughput(cfg, ch, g.argmax), g.value, 1e-9 * g.value);
  }
}

TEST(GridPs, RefusesLargeN) {
  EXPECT_THROW(oracle::grid_ps(defaults(ModelKind::Logistic, 4), draw(0), 10), std::invalid_argument);
}

TEST(OracleProperty, Reproducible) {
  const SystemConfig cfg = defaults(ModelKind::Logistic, 2);
  const ChannelRealization ch = draw(3, 2);
  const oracle::GridResult a = oracle::grid_ps(cfg, ch, 100);
  const oracle::GridResult b = oracle::grid_ps(cfg, ch, 100);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.upper_bound, b.upper_bound);
}
