#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "swipt/harvester.hpp"

namespace swipt {

enum class Mode { TS, PS };

/// Network-wide parameters. Rates are per unit time in nats/s.
struct SystemConfig {
  std::size_t N = 4;        // number of relay links
  double w_T = 1e6;         // total bandwidth, Hz
  double p_T = 1.0;         // total source power, W
  double sigma2 = 1e-14;    // noise PSD, W/Hz
  double q_max = 5e-2;      // relay transmit power limit, W
  double epsilon = 1e-2;    // polyblock utility gap, nats/s
  HarvesterModel model{LogisticParams{}};

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// Linear-scale gains: h[n] source->relay n, g[n] relay n->destination.
struct ChannelRealization {
  std::vector<double> h;
  std::vector<double> g;

  std::size_t size() const { return h.size(); }
  void validate() const;
};

struct Allocation {
  Mode mode = Mode::TS;
  std::optional<double> alpha;  // TS only
  std::vector<double> beta;     // PS only (empty in TS)
  std::vector<double> p;        // W
  std::vector<double> w;        // Hz

  static Allocation ts(double alpha, std::vector<double> p, std::vector<double> w);
  static Allocation ps(std::vector<double> beta, std::vector<double> p, std::vector<double> w);
  static Allocation zero(Mode mode, std::size_t n);
};

struct Diagnostics {
  std::size_t iterations = 0;
  double certified_gap = 0.0;  // upper bound on (optimum - throughput), nats/s
};

struct SolveResult {
  Allocation allocation;
  double throughput = 0.0;  // nats/s
  Diagnostics diagnostics;
};

/// i.i.d. gains uniform in dB on [lo_db, hi_db]; h is drawn before g.
/// Deterministic for a given seed on every platform.
ChannelRealization sample_channels(std::uint64_t seed, std::size_t n, double lo_db, double hi_db);

/// w ln(1 + snr_num / w), with the w = 0 limit defined as 0.
double link_rate(double w, double snr_num);

/// End-to-end TS throughput of an allocation.
double throughput_ts(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc);

/// End-to-end PS throughput of an allocation.
double throughput_ps(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc);

/// Dispatches on alloc.mode.
double throughput(const SystemConfig& cfg, const ChannelRealization& ch, const Allocation& alloc);

inline double nats_to_bits(double nats) { return nats / 0.69314718055994530942; }

}  // namespace swipt
