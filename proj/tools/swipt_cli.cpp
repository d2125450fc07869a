// swipt_cli: single solves, Monte-Carlo sweeps and the oracle check.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracle_check.hpp"
#include "swipt/harness.hpp"
#include "swipt/monotonic.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kNumerical = 2;

struct Flags {
  std::string config;
  std::string mode;
  std::string model;
  std::string out;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> workers;
  std::string param;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<std::size_t> steps;
};

swipt::RunConfig build_config(const Flags& f) {
  swipt::RunConfig cfg;
  if (!f.config.empty()) cfg = swipt::load_config(f.config, cfg);
  for (const auto& kv : f.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw swipt::UsageError("--set expects key=value, got '" + kv + "'");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!f.mode.empty()) cfg.modes = swipt::parse_solvers(f.mode);
  if (!f.model.empty()) cfg.models = swipt::parse_models(f.model);
  if (f.seed) cfg.seed = *f.seed;
  if (f.trials) cfg.trials = *f.trials;
  if (f.workers) cfg.workers = *f.workers;
  if (!f.param.empty()) cfg.sweep.param = swipt::parse_sweep_param(f.param);
  if (f.from) cfg.sweep.from = *f.from;
  if (f.to) cfg.sweep.to = *f.to;
  if (f.steps) cfg.sweep.steps = *f.steps;
  return cfg;
}

void print_vector(const char* name, const std::vector<double>& v) {
  std::printf("  %-5s", name);
  for (double x : v) std::printf(" %.10g", x);
  std::printf("\n");
}

void append_csv(const std::string& path, const std::vector<swipt::Row>& rows, std::size_t N) {
  bool fresh = true;
  {
    std::ifstream probe(path);
    fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (fresh) out << swipt::csv_header(N) << '\n';
  for (const auto& r : rows) out << swipt::csv_line(r, N) << '\n';
  if (!out) throw std::runtime_error("write failed on " + path);
}

int cmd_solve(const swipt::RunConfig& cfg, const std::string& out_path) {
  const swipt::ChannelRealization ch = swipt::trial_channels(cfg, 0);
  std::printf("seed %llu  channel seed %llu  N=%zu\n", static_cast<unsigned long long>(cfg.seed),
              static_cast<unsigned long long>(swipt::trial_seed(cfg.seed, 0)), cfg.N);
  print_vector("h", ch.h);
  print_vector("g", ch.g);

  std::vector<swipt::Row> rows;
  for (swipt::Solver mode : cfg.modes) {
    for (swipt::ModelKind model : cfg.models) {
      swipt::Row row;
      row.sweep_param = "none";
      row.trial = 0;
      row.seed = swipt::trial_seed(cfg.seed, 0);
      row.mode = mode;
      row.model = model;
      row.result = swipt::solve(mode, cfg.system(model), ch);
      row.throughput = row.result->throughput;

      const auto& a = row.result->allocation;
      std::printf("\n%s / %s\n", swipt::to_string(mode).c_str(), swipt::to_string(model).c_str());
      std::printf("  throughput %.10g nats/s (%.10g bit/s)\n", row.throughput, swipt::nats_to_bits(row.throughput));
      if (a.alpha) std::printf("  alpha %.12g\n", *a.alpha);
      if (!a.beta.empty()) print_vector("beta", a.beta);
      print_vector("p", a.p);
      print_vector("w", a.w);
      std::printf("  iterations %zu  certified gap %.3g\n", row.result->diagnostics.iterations,
                  row.result->diagnostics.certified_gap);
      rows.push_back(std::move(row));
    }
  }
  if (!out_path.empty()) append_csv(out_path, rows, cfg.N);
  return 0;
}

int cmd_sweep(const swipt::RunConfig& cfg, const std::string& out_path) {
  const auto rows = swipt::run_sweep(cfg);
  if (out_path.empty()) {
    swipt::write_csv(std::cout, rows, cfg.N);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    swipt::write_csv(out, rows, cfg.N);
  }
  for (const auto& r : rows) {
    if (r.trial) continue;
    std::fprintf(stderr, "%s=%-10.6g %-9s %-8s mean %.6g nats/s\n", r.sweep_param.c_str(), *r.sweep_value,
                 swipt::to_string(r.mode).c_str(), swipt::to_string(r.model).c_str(), r.throughput);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Throughput-optimal resource allocation for SWIPT-powered two-hop relay networks"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "key = value config file")->check(CLI::ExistingFile);
    sub->add_option("--mode", f.mode, "ts, ps, ts-select, ps-select, comma list or all");
    sub->add_option("--model", f.model, "logistic, cutoff, comma list or all");
    sub->add_option("--seed", f.seed, "master seed");
    sub->add_option("--set", f.sets, "override any config key, e.g. --set N=2");
  };

  auto* solve = app.add_subcommand("solve", "solve one sampled instance");
  common(solve);
  solve->add_option("--out", f.out, "append result rows to this CSV");

  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep, CSV output");
  common(sweep);
  sweep->add_option("--out", f.out, "CSV path (stdout if omitted)");
  sweep->add_option("--trials", f.trials, "channel draws per sweep value");
  sweep->add_option("--workers", f.workers, "parallel trials");
  sweep->add_option("--param", f.param, "p_T, w_T or mean_gain_db");
  sweep->add_option("--from", f.from, "first sweep value");
  sweep->add_option("--to", f.to, "last sweep value");
  sweep->add_option("--steps", f.steps, "number of sweep values");

  auto* check = app.add_subcommand("oracle-check", "compare solvers with brute-force oracles at small N");
  common(check);
  check->add_option("--trials", f.trials, "channel draws (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    swipt::RunConfig cfg = build_config(f);
    if (solve->parsed()) return cmd_solve(cfg, f.out);
    if (sweep->parsed()) return cmd_sweep(cfg, f.out);
    const int failures = swipt::run_oracle_check(cfg, f.trials.value_or(5), std::cout);
    return failures == 0 ? 0 : kNumerical;
  } catch (const swipt::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const swipt::PolyblockOverflow& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    // Domain errors from the solvers and I/O failures land here.
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
}
