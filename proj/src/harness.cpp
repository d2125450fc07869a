#include "swipt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "swipt/baselines.hpp"
#include "swipt/ps_cutoff.hpp"
#include "swipt/ps_logistic.hpp"
#include "swipt/ts_solver.hpp"

namespace swipt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw UsageError("bad number for " + key + ": '" + v + "'");
  return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw UsageError("bad integer for " + key + ": '" + v + "'");
  return out;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string to_string(Solver s) {
  switch (s) {
    case Solver::TS: return "ts";
    case Solver::PS: return "ps";
    case Solver::TSSelect: return "ts-select";
    case Solver::PSSelect: return "ps-select";
  }
  return "?";
}

std::string to_string(ModelKind m) { return m == ModelKind::Logistic ? "logistic" : "cutoff"; }

std::string to_string(SweepParam p) {
  switch (p) {
    case SweepParam::PT: return "p_T";
    case SweepParam::WT: return "w_T";
    case SweepParam::MeanGainDb: return "mean_gain_db";
  }
  return "?";
}

Solver parse_solver(const std::string& name) {
  for (Solver s : {Solver::TS, Solver::PS, Solver::TSSelect, Solver::PSSelect}) {
    if (name == to_string(s)) return s;
  }
  throw UsageError("unknown mode '" + name + "' (expected ts, ps, ts-select, ps-select or all)");
}

ModelKind parse_model(const std::string& name) {
  if (name == "logistic") return ModelKind::Logistic;
  if (name == "cutoff") return ModelKind::Cutoff;
  throw UsageError("unknown model '" + name + "' (expected logistic, cutoff or all)");
}

SweepParam parse_sweep_param(const std::string& name) {
  for (SweepParam p : {SweepParam::PT, SweepParam::WT, SweepParam::MeanGainDb}) {
    if (name == to_string(p)) return p;
  }
  throw UsageError("unknown sweep parameter '" + name + "' (expected p_T, w_T or mean_gain_db)");
}

std::vector<Solver> parse_solvers(const std::string& list) {
  if (trim(list) == "all") return {Solver::TS, Solver::PS, Solver::TSSelect, Solver::PSSelect};
  std::vector<Solver> out;
  for (const auto& item : split_list(list)) out.push_back(parse_solver(item));
  return out;
}

std::vector<ModelKind> parse_models(const std::string& list) {
  if (trim(list) == "all") return {ModelKind::Logistic, ModelKind::Cutoff};
  std::vector<ModelKind> out;
  for (const auto& item : split_list(list)) out.push_back(parse_model(item));
  return out;
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = i + 1 == steps ? to : from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return out;
}

void SweepSpec::validate() const {
  if (!(from < to)) throw UsageError("sweep: 'from' must be below 'to'");
  if (steps < 2) throw UsageError("sweep: need at least 2 steps");
}

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  const std::map<std::string, double*> reals = {
      {"w_T", &w_T},           {"p_T", &p_T},
      {"sigma2", &sigma2},     {"q_max", &q_max},
      {"epsilon", &epsilon},   {"logistic.M", &logistic.M},
      {"logistic.a", &logistic.a}, {"logistic.b", &logistic.b},
      {"cutoff.c", &cutoff.c}, {"cutoff.x_L", &cutoff.x_L},
      {"cutoff.x_U", &cutoff.x_U}, {"gain_lo_db", &gain_lo_db},
      {"gain_hi_db", &gain_hi_db}, {"sweep.from", &sweep.from},
      {"sweep.to", &sweep.to},
  };
  if (auto it = reals.find(key); it != reals.end()) {
    *it->second = parse_double(key, v);
  } else if (key == "N") {
    N = parse_uint(key, v);
  } else if (key == "seed") {
    seed = parse_uint(key, v);
  } else if (key == "trials") {
    trials = parse_uint(key, v);
  } else if (key == "workers") {
    workers = parse_uint(key, v);
  } else if (key == "sweep.steps") {
    sweep.steps = parse_uint(key, v);
  } else if (key == "sweep.param") {
    sweep.param = parse_sweep_param(v);
  } else if (key == "mode") {
    modes = parse_solvers(v);
  } else if (key == "model") {
    models = parse_models(v);
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

SystemConfig RunConfig::system(ModelKind model) const {
  if (trials < 1) throw UsageError("trials must be >= 1");
  if (!(gain_lo_db <= gain_hi_db)) throw UsageError("gain_lo_db must not exceed gain_hi_db");
  SystemConfig cfg;
  cfg.N = N;
  cfg.w_T = w_T;
  cfg.p_T = p_T;
  cfg.sigma2 = sigma2;
  cfg.q_max = q_max;
  cfg.epsilon = epsilon;
  try {
    cfg.model = model == ModelKind::Logistic ? HarvesterModel(logistic) : HarvesterModel(cutoff);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
  std::uint64_t state = master + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial);
  return splitmix64(state);
}

SolveResult solve(Solver mode, const SystemConfig& cfg, const ChannelRealization& ch) {
  switch (mode) {
    case Solver::TS: return solve_ts(cfg, ch);
    case Solver::PS: return cfg.model.is_logistic() ? solve_ps_logistic(cfg, ch) : solve_ps_cutoff(cfg, ch);
    case Solver::TSSelect: return solve_ts_select(cfg, ch);
    case Solver::PSSelect: return solve_ps_select(cfg, ch);
  }
  throw std::logic_error("solve: unknown mode");
}

RunConfig at_sweep_value(const RunConfig& cfg, SweepParam param, double value) {
  RunConfig out = cfg;
  switch (param) {
    case SweepParam::PT: out.p_T = value; break;
    case SweepParam::WT: out.w_T = value; break;
    case SweepParam::MeanGainDb:
      out.gain_lo_db = value - 5.0;
      out.gain_hi_db = value + 5.0;
      break;
  }
  return out;
}

ChannelRealization trial_channels(const RunConfig& cfg, std::size_t trial) {
  return sample_channels(trial_seed(cfg.seed, trial), cfg.N, cfg.gain_lo_db, cfg.gain_hi_db);
}

std::vector<Row> run_sweep(const RunConfig& cfg) {
  const std::vector<double> values = cfg.sweep.values();
  if (cfg.trials < 1) throw UsageError("trials must be >= 1");
  const std::size_t cells = cfg.modes.size() * cfg.models.size();
  const std::size_t tasks = values.size() * cfg.trials;
  // Validate every configuration up front so usage errors surface before work starts.
  for (double v : values) {
    const RunConfig at = at_sweep_value(cfg, cfg.sweep.param, v);
    for (ModelKind m : cfg.models) at.system(m);
  }

  std::vector<Row> cell_rows(tasks * cells);
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t task; (task = next.fetch_add(1)) < tasks;) {
      const std::size_t vi = task / cfg.trials;
      const std::size_t trial = task % cfg.trials;
      try {
        const RunConfig at = at_sweep_value(cfg, cfg.sweep.param, values[vi]);
        const ChannelRealization ch = trial_channels(at, trial);
        std::size_t c = 0;
        for (Solver mode : cfg.modes) {
          for (ModelKind model : cfg.models) {
            Row& row = cell_rows[task * cells + c++];
            row.sweep_param = to_string(cfg.sweep.param);
            row.sweep_value = values[vi];
            row.trial = trial;
            row.seed = trial_seed(cfg.seed, trial);
            row.mode = mode;
            row.model = model;
            row.result = solve(mode, at.system(model), ch);
            row.throughput = row.result->throughput;
          }
        }
      } catch (...) {
        errors[task] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(cfg.workers, 1, tasks);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Row> rows;
  rows.reserve(cell_rows.size() + values.size() * cells);
  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    std::vector<double> sums(cells, 0.0);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      for (std::size_t c = 0; c < cells; ++c) {
        Row& r = cell_rows[(vi * cfg.trials + trial) * cells + c];
        sums[c] += r.throughput;
        rows.push_back(std::move(r));
      }
    }
    std::size_t c = 0;
    for (Solver mode : cfg.modes) {
      for (ModelKind model : cfg.models) {
        Row mean;
        mean.sweep_param = to_string(cfg.sweep.param);
        mean.sweep_value = values[vi];
        mean.mode = mode;
        mean.model = model;
        mean.throughput = sums[c++] / static_cast<double>(cfg.trials);
        rows.push_back(std::move(mean));
      }
    }
  }
  return rows;
}

std::string csv_header(std::size_t N) {
  std::string h = "sweep_param,sweep_value,trial,seed,mode,model,throughput_nats,throughput_bits,alpha";
  for (const char* prefix : {"beta_", "p_", "w_"}) {
    for (std::size_t n = 1; n <= N; ++n) h += "," + std::string(prefix) + std::to_string(n);
  }
  return h + ",solver_iters,cert_gap";
}

std::string csv_line(const Row& row, std::size_t N) {
  std::string s = row.sweep_param;
  s += "," + (row.sweep_value ? num(*row.sweep_value) : "");
  s += "," + (row.trial ? std::to_string(*row.trial) : std::string("mean"));
  s += "," + (row.seed ? std::to_string(*row.seed) : "");
  s += "," + to_string(row.mode) + "," + to_string(row.model);
  s += "," + num(row.throughput) + "," + num(nats_to_bits(row.throughput));

  const Allocation* a = row.result ? &row.result->allocation : nullptr;
  s += "," + (a && a->alpha ? num(*a->alpha) : "");
  auto column = [&](const std::vector<double>* v) {
    for (std::size_t n = 0; n < N; ++n) s += "," + (v && n < v->size() ? num((*v)[n]) : "");
  };
  column(a && a->mode == Mode::PS ? &a->beta : nullptr);
  column(a ? &a->p : nullptr);
  column(a ? &a->w : nullptr);
  s += "," + (row.result ? std::to_string(row.result->diagnostics.iterations) : "");
  s += "," + (row.result ? num(row.result->diagnostics.certified_gap) : "");
  return s;
}

void write_csv(std::ostream& out, const std::vector<Row>& rows, std::size_t N) {
  out << csv_header(N) << '\n';
  for (const Row& r : rows) out << csv_line(r, N) << '\n';
  if (!out) throw std::runtime_error("write_csv: output stream failed");
}

}  // namespace swipt
