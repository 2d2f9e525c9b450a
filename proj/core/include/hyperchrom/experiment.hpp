#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperchrom/pipeline.hpp"

namespace hyperchrom {

enum class Model { regular, binomial, uniform_m };

std::string_view to_string(Model model) noexcept;
// Accepts "regular", "binomial", "uniform-m"; throws std::invalid_argument.
Model parse_model(std::string_view name);

struct ExperimentConfig {
  int r = 3;
  std::uint32_t d = 100;  // regular model
  std::size_t n = 20000;
  double eps = 0.2;
  double p = 0;           // binomial model
  std::size_t m = 0;      // uniform-m model
  std::size_t trials = 1;
  std::uint64_t master_seed = 1;
  Model model = Model::regular;
  unsigned workers = 1;
  GreedyOrder order = GreedyOrder::random;
  // runtime_ms is wall-clock and would break byte-identical reruns, so the
  // CSV carries it only on request.
  bool record_timing = false;
  std::string csv_path;
  std::string json_path;
};

// Throws std::invalid_argument naming the first bad field.
void validate(const ExperimentConfig& cfg);

struct ExperimentRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  int r = 0;
  double d = 0;  // regular: d; binomial: C(n-1,r-1) p; uniform-m: r m / n
  double eps = 0;
  std::size_t M = 0;
  int colors_initial = 0;
  std::size_t bad_edges = 0;
  std::size_t u = 0;
  int delta = 0;
  int colors_final = 0;
  std::size_t alpha_greedy = 0;
  double chi_pred = 0;
  double alpha_pred = 0;  // alpha_frac_pred * n
  double ratio_chi = 0;
  double ratio_alpha = 0;
  double runtime_ms = 0;
  TrialStatus status = TrialStatus::invalid;
  std::string message;
};

struct RatioStats {
  double mean = 0;
  double min = 0;
  double max = 0;
};

struct ExperimentSummary {
  std::size_t trials = 0;
  std::size_t ok = 0;
  RatioStats ratio_chi;    // over ok trials
  RatioStats ratio_alpha;  // over ok trials
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;  // in trial order
  ExperimentSummary summary;
};

// Calls fn(trial) for every trial index on up to `workers` threads.
void for_each_trial(std::size_t trials, unsigned workers,
                    const std::function<void(std::size_t)>& fn);

// One trial with seed derive_seed(cfg.master_seed, trial). Failures inside
// the trial become status invalid with the message recorded.
ExperimentRecord run_trial(const ExperimentConfig& cfg, std::size_t trial);

// Runs cfg.trials trials on up to cfg.workers threads. Records are placed by
// trial index, so output does not depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Pipeline results for cfg.trials regular-model trials, in trial order; each
// trial uses the same per-trial seed as run_trial. `delta` overrides the
// repair palette.
std::vector<PipelineResult> run_pipeline_trials(const ExperimentConfig& cfg,
                                                std::optional<int> delta = std::nullopt);

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "trial,seed,n,r,d,eps,M,colors_initial,bad_edges,u,delta,colors_final,alpha_greedy,"
    "chi_pred,alpha_pred,ratio_chi,ratio_alpha,runtime_ms,status";

// Doubles are written with 17 significant digits; runtime_ms is `NA` unless
// with_timing is set.
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
               bool with_timing);

}  // namespace hyperchrom
