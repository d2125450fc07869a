#pragma once

// Experiment plumbing shared by the CLI and the acceptance suite: config
// files, seed splitting, solver dispatch, Monte-Carlo sweeps and CSV output.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

/// Bad names, malformed config text, impossible ranges. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Solver { TS, PS, TSSelect, PSSelect };
enum class ModelKind { Logistic, Cutoff };
enum class SweepParam { PT, WT, MeanGainDb };

std::string to_string(Solver s);
std::string to_string(ModelKind m);
std::string to_string(SweepParam p);
Solver parse_solver(const std::string& name);          // ts, ps, ts-select, ps-select
ModelKind parse_model(const std::string& name);        // logistic, cutoff
SweepParam parse_sweep_param(const std::string& name); // p_T, w_T, mean_gain_db
/// Comma list; "all" expands to every value. Throws UsageError.
std::vector<Solver> parse_solvers(const std::string& list);
std::vector<ModelKind> parse_models(const std::string& list);

struct SweepSpec {
  SweepParam param = SweepParam::PT;
  double from = 0.1;
  double to = 2.0;
  std::size_t steps = 10;

  std::vector<double> values() const;  // evenly spaced, endpoints included
  void validate() const;               // from < to, steps >= 2
};

/// Everything a run needs. Defaults are the reference configuration.
struct RunConfig {
  std::size_t N = 4;
  double w_T = 1e6;
  double p_T = 1.0;
  double sigma2 = 1e-14;
  double q_max = 5e-2;
  double epsilon = 1e-2;
  LogisticParams logistic;
  CutoffParams cutoff;
  double gain_lo_db = -50.0;
  double gain_hi_db = -40.0;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t workers = 1;
  std::vector<Solver> modes{Solver::TS, Solver::PS, Solver::TSSelect, Solver::PSSelect};
  std::vector<ModelKind> models{ModelKind::Logistic, ModelKind::Cutoff};
  SweepSpec sweep;

  /// Applies one `key = value` setting. Throws UsageError on unknown keys or
  /// unparsable values.
  void set(const std::string& key, const std::string& value);
  SystemConfig system(ModelKind model) const;
};

/// Flat text: one `key = value` per line, `#` starts a comment.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Channel seed of trial t: output t + 1 of a SplitMix64 stream started at
/// the master seed. Independent of the sweep point, so every point and every
/// (mode, model) cell sees the same draws.
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial);

/// Dispatches to the solver for the mode and the config's harvester.
SolveResult solve(Solver mode, const SystemConfig& cfg, const ChannelRealization& ch);

struct Row {
  std::string sweep_param;  // "none" for single solves
  std::optional<double> sweep_value;
  std::optional<std::size_t> trial;  // empty on summary rows ("mean")
  std::optional<std::uint64_t> seed;
  Solver mode = Solver::TS;
  ModelKind model = ModelKind::Logistic;
  double throughput = 0.0;  // nats/s
  std::optional<SolveResult> result;  // empty on summary rows
};

/// Runs every (value, trial, mode, model) cell, `workers` trials at a time.
/// Output is ordered by sweep value, then trial, mode, model, with one
/// summary row per (mode, model) after each sweep value's trials.
std::vector<Row> run_sweep(const RunConfig& cfg);

/// Applies a swept value to a copy of the config.
RunConfig at_sweep_value(const RunConfig& cfg, SweepParam param, double value);

ChannelRealization trial_channels(const RunConfig& cfg, std::size_t trial);

std::string csv_header(std::size_t N);
std::string csv_line(const Row& row, std::size_t N);
void write_csv(std::ostream& out, const std::vector<Row>& rows, std::size_t N);

}  // namespace swipt
