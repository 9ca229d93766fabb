// Copyright 2026 The dpredescribe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpr/cli.h"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpr/config.h"
#include "dpr/curator.h"
#include "dpr/data.h"
#include "dpr/error.h"
#include "dpr/evaluation.h"
#include "dpr/mine.h"
#include "dpr/results.h"
#include "dpr/text.h"
#include "json.hpp"

namespace dpr {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr const char* kSeedVariable = "DP_REDESCRIBE_SEED";
constexpr const char* kResultsFile = "redescriptions.csv";
constexpr const char* kReportFile = "report.json";

// Input that cannot be read or parsed: data views and result tables.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class RunError : public std::runtime_error {
 public:
  explicit RunError(const std::string& what) : std::runtime_error(what) {}
};

Dataset LoadDataset(const std::string& left, const std::string& right) {
  try {
    return Dataset(LoadView(left), LoadView(right));
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
}

template <typename Reader>
auto ReadTable(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read '" + path + "'");
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw RunError("cannot write '" + path.string() + "'");
  return out;
}

std::uint64_t ResolveSeed(ConfigValues& values) {
  if (auto it = values.find("seed"); it != values.end()) {
    MinerConfig probe;
    ApplyConfigValue(probe, "seed", it->second);
    return probe.seed;
  }
  if (const char* env = std::getenv(kSeedVariable); env && *env) {
    MinerConfig probe;
    ApplyConfigValue(probe, "seed", env);
    values["seed"] = env;
    return probe.seed;
  }
  std::random_device device;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(device()) << 32) ^ device();
  values["seed"] = std::to_string(seed);
  return seed;
}

ordered_json ConfigJson(const MinerConfig& c) {
  ordered_json j;
  j["algorithm"] = std::string(AlgorithmName(c.algorithm));
  j["epsilon"] = c.epsilon;
  j["intr"] = c.intr;
  j["rmiter"] = c.rmiter;
  j["mciter"] = c.mciter;
  j["sigma"] = c.sigma;
  j["window"] = c.window;
  j["depth"] = c.depth;
  j["omega"] = c.omega;
  j["max_pvalue"] = c.constraints.max_pvalue;
  j["min_jaccard"] = c.constraints.min_jaccard;
  j["min_support"] = c.constraints.min_support;
  j["max_support_fraction"] = c.constraints.max_support_fraction;
  j["seed"] = c.seed;
  j["prune_threshold"] = c.prune_threshold;
  j["no_noise"] = c.no_noise;
  return j;
}

double CpuSeconds() {
  return static_cast<double>(std::clock()) / CLOCKS_PER_SEC;
}

struct MineFlags {
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string config_path;
  std::string left;
  std::string right;
  std::string out;
  std::size_t runs = 1;
  std::optional<std::string> budget_each;
  bool no_noise = false;
};

int CmdMine(const MineFlags& flags, std::ostream& out) {
  ConfigValues values;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw ConfigError("cannot read config '" + flags.config_path + "'");
    values = ParseConfigText(in);
  }
  for (const auto& [key, value] : flags.overrides) values[key] = value;
  if (flags.no_noise) values["no_noise"] = "true";
  if (flags.budget_each) values["epsilon"] = *flags.budget_each;
  if (flags.runs < 1) throw ConfigError("--runs must be at least 1");
  const std::uint64_t seed = ResolveSeed(values);
  const MinerConfig config = BuildMinerConfig(values);

  const Dataset data = LoadDataset(flags.left, flags.right);
  const fs::path dir(flags.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw RunError("cannot create '" + dir.string() + "'");

  const NoiseMode mode = config.no_noise ? NoiseMode::kNone
                                         : NoiseMode::kLaplace;
  const auto wall_start = std::chrono::steady_clock::now();
  const double cpu_start = CpuSeconds();
  std::vector<ResultRow> rows;
  ordered_json runs = ordered_json::array();
  for (std::size_t r = 0; r < flags.runs; ++r) {
    const auto run_wall = std::chrono::steady_clock::now();
    const double run_cpu = CpuSeconds();
    Curator curator(data, config.epsilon, seed, r, mode);
    const std::vector<Redescription> found = Mine(curator, config);
    const std::vector<Redescription> kept =
        config.prune_threshold > 0.0 ? Prune(found, config.prune_threshold)
                                     : found;
    for (const Redescription& red : kept) {
      rows.push_back(ToResultRow(rows.size(), r, red));
    }
    ordered_json ledger = ordered_json::array();
    for (const BudgetAccountant::Entry& e : curator.accountant().ledger()) {
      ledger.push_back({{"label", e.label},
                        {"epsilon", e.epsilon},
                        {"partitions", e.partitions}});
    }
    runs.push_back(
        {{"run", r},
         {"seed", seed},
         {"stream", r},
         {"budget", config.epsilon},
         {"spent", curator.accountant().spent()},
         {"ledger", std::move(ledger)},
         {"found", found.size()},
         {"kept", kept.size()},
         {"wall_seconds", std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - run_wall)
                              .count()},
         {"cpu_seconds", CpuSeconds() - run_cpu}});
    out << "run " << r << ": " << found.size() << " redescriptions, "
        << kept.size() << " after pruning, spent epsilon "
        << FormatNumber(curator.accountant().spent()) << '\n';
  }

  std::ofstream csv = OpenOutput(dir / kResultsFile);
  WriteResults(csv, rows);
  ordered_json report;
  report["privacy"] = config.no_noise ? "NON-PRIVATE" : "private";
  report["config"] = ConfigJson(config);
  report["runs_requested"] = flags.runs;
  report["total_epsilon"] = config.epsilon * static_cast<double>(flags.runs);
  report["redescription_count"] = rows.size();
  report["results"] = kResultsFile;
  report["left"] = flags.left;
  report["right"] = flags.right;
  report["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    wall_start)
          .count();
  report["cpu_seconds"] = CpuSeconds() - cpu_start;
  report["runs"] = std::move(runs);
  std::ofstream json = OpenOutput(dir / kReportFile);
  json << report.dump(2) << '\n';
  if (!csv || !json) throw RunError("failed writing results");
  out << "wrote " << rows.size() << " redescriptions to "
      << (dir / kResultsFile).string()
      << (config.no_noise ? " (NON-PRIVATE: noise disabled)" : "") << '\n';
  return kExitOk;
}

int CmdEvaluate(const std::string& results, const std::string& left,
                const std::string& right, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  const std::vector<ResultRow> rows = ReadTable(results, ReadResults);
  const Dataset data = LoadDataset(left, right);
  const std::vector<EvaluationRow> evaluated = EvaluateResults(data, rows);
  std::size_t errors = 0;
  for (const EvaluationRow& r : evaluated) errors += !r.error.empty();
  if (out_path.empty()) {
    WriteEvaluation(out, evaluated);
  } else {
    std::ofstream file = OpenOutput(out_path);
    WriteEvaluation(file, evaluated);
    if (!file) throw RunError("failed writing '" + out_path + "'");
  }
  err << "evaluated " << evaluated.size() << " rows without noise, " << errors
      << " with errors\n";
  return kExitOk;
}

int CmdStats(const std::string& input, const std::string& out_dir,
             std::ostream& out, std::ostream& err) {
  const std::vector<EvaluationRow> rows = ReadTable(input, ReadEvaluation);
  EvaluationSummary summary;
  try {
    summary = Summarize(rows);
  } catch (const std::invalid_argument& e) {
    err << "stats: " << e.what() << '\n';
    return kExitFailure;
  }
  out << "rows " << summary.rows << '\n'
      << "errors " << summary.errors << '\n'
      << "spearman_rho " << FormatNumber(summary.spearman) << '\n'
      << "percent_significant " << FormatNumber(summary.percent_significant)
      << '\n';
  WriteHistogram(out, summary);
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw RunError("cannot create '" + dir.string() + "'");
    std::ofstream scatter = OpenOutput(dir / "scatter.csv");
    WriteScatter(scatter, rows);
    std::ofstream histogram = OpenOutput(dir / "histogram.csv");
    WriteHistogram(histogram, summary);
    if (!scatter || !histogram) throw RunError("failed writing statistics");
  }
  return kExitOk;
}

int CmdPrune(const std::string& results, const std::string& threshold_text,
             const std::string& out_path, std::ostream& out) {
  const std::optional<double> threshold = ParseNumber(threshold_text);
  if (!threshold || std::isnan(*threshold)) {
    throw ConfigError("--prune-threshold needs a number");
  }
  const std::vector<ResultRow> rows = ReadTable(results, ReadResults);
  std::vector<ResultRow> kept;
  for (const ResultRow& row : rows) {
    if (row.supp_inter >= *threshold) kept.push_back(row);
  }
  std::ofstream file = OpenOutput(out_path);
  WriteResults(file, kept);
  if (!file) throw RunError("failed writing '" + out_path + "'");
  out << "dropped " << rows.size() - kept.size() << " of " << rows.size()
      << " rows below noisy support " << threshold_text << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Differentially private redescription mining", "dp-redescribe");
  app.require_subcommand(1);

  CLI::App* mine = app.add_subcommand("mine", "Mine redescriptions");
  MineFlags mine_flags;
  std::vector<std::pair<std::string, std::string>> flag_keys = {
      {"--algo", "algorithm"},   {"--epsilon", "epsilon"},
      {"--intr", "intr"},        {"--rmiter", "rmiter"},
      {"--mciter", "mciter"},    {"--sigma", "sigma"},
      {"--depth", "depth"},      {"--omega", "omega"},
      {"--seed", "seed"},        {"--prune-threshold", "prune_threshold"}};
  std::vector<std::string> flag_values(flag_keys.size());
  for (std::size_t i = 0; i < flag_keys.size(); ++i) {
    mine->add_option(flag_keys[i].first, flag_values[i],
                     "config key " + flag_keys[i].second);
  }
  mine->add_flag("--no-noise", mine_flags.no_noise,
                 "disable noise (NON-PRIVATE, for testing)");
  mine->add_option("--config", mine_flags.config_path, "key = value file");
  mine->add_option("--left", mine_flags.left, "left view")->required();
  mine->add_option("--right", mine_flags.right, "right view")->required();
  mine->add_option("--out", mine_flags.out, "output directory")->required();
  mine->add_option("--runs", mine_flags.runs, "number of seeded runs");
  auto* budget_each =
      mine->add_option("--budget-each", "epsilon of each run");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Exact statistics of mined queries (non-private)");
  std::string eval_results, eval_left, eval_right, eval_out;
  evaluate->add_option("--results", eval_results)->required();
  evaluate->add_option("--left", eval_left)->required();
  evaluate->add_option("--right", eval_right)->required();
  evaluate->add_option("--out", eval_out, "output file (default stdout)");

  CLI::App* stats = app.add_subcommand("stats", "Summarize an evaluation");
  std::string stats_input, stats_out;
  stats->add_option("--input", stats_input)->required();
  stats->add_option("--out", stats_out, "directory for plot data");

  CLI::App* prune = app.add_subcommand("prune", "Drop low-support rows");
  std::string prune_results, prune_threshold, prune_out;
  prune->add_option("--results", prune_results)->required();
  prune->add_option("--prune-threshold", prune_threshold)->required();
  prune->add_option("--out", prune_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (mine->parsed()) {
      for (std::size_t i = 0; i < flag_keys.size(); ++i) {
        if (mine->count(flag_keys[i].first) > 0) {
          mine_flags.overrides.emplace_back(flag_keys[i].second,
                                            flag_values[i]);
        }
      }
      if (budget_each->count() > 0) {
        mine_flags.budget_each = budget_each->as<std::string>();
      }
      return CmdMine(mine_flags, out);
    }
    if (evaluate->parsed()) {
      return CmdEvaluate(eval_results, eval_left, eval_right, eval_out, out,
                         err);
    }
    if (stats->parsed()) return CmdStats(stats_input, stats_out, out, err);
    if (prune->parsed()) {
      return CmdPrune(prune_results, prune_threshold, prune_out, out);
    }
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dpr
