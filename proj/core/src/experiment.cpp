#include "hyperchrom/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/rng.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"

namespace hyperchrom {

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::regular:
      return "regular";
    case Model::binomial:
      return "binomial";
    case Model::uniform_m:
      return "uniform-m";
  }
  return "regular";
}

Model parse_model(std::string_view name) {
  if (name == "regular") return Model::regular;
  if (name == "binomial") return Model::binomial;
  if (name == "uniform-m") return Model::uniform_m;
  throw std::invalid_argument("unknown model `" + std::string(name) + "`");
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (cfg.r < 2) fail("r must be at least 2");
  if (cfg.n < 1) fail("n must be at least 1");
  if (cfg.trials < 1) fail("trials must be at least 1");
  if (cfg.workers < 1) fail("workers must be at least 1");
  switch (cfg.model) {
    case Model::regular:
      if (cfg.r < 3) fail("the regular pipeline needs r >= 3");
      if (cfg.d < 2) fail("d must be at least 2");
      if (!(cfg.eps > 0)) fail("eps must be positive");
      if ((cfg.n * cfg.d) % static_cast<std::size_t>(cfg.r) != 0) fail("r must divide n*d");
      break;
    case Model::binomial:
      if (!(cfg.p >= 0 && cfg.p <= 1)) fail("p must lie in [0, 1]");
      break;
    case Model::uniform_m:
      if (cfg.m > choose(cfg.n, cfg.r)) fail("m exceeds C(n, r)");
      break;
  }
}

namespace {

double effective_degree(const ExperimentConfig& cfg) {
  switch (cfg.model) {
    case Model::regular:
      return cfg.d;
    case Model::binomial:
      return static_cast<double>(choose(cfg.n - 1, cfg.r - 1)) * cfg.p;
    case Model::uniform_m:
      return static_cast<double>(cfg.r) * static_cast<double>(cfg.m) /
             static_cast<double>(cfg.n);
  }
  return 0;
}

void fill_sampled_trial(const ExperimentConfig& cfg, Rng& rng, ExperimentRecord& rec) {
  const Hypergraph h = cfg.model == Model::binomial ? sample_binomial(cfg.n, cfg.p, cfg.r, rng)
                                                    : sample_uniform_m(cfg.n, cfg.m, cfg.r, rng);
  rec.M = h.num_edges();
  const auto order =
      cfg.order == GreedyOrder::random ? random_order(cfg.n, rng) : degree_descending_order(h);
  const Coloring col = greedy_color(h, order);
  if (!is_proper(h, col)) throw std::logic_error("greedy coloring is improper");
  rec.colors_initial = static_cast<int>(col.colors_used());
  rec.colors_final = rec.colors_initial;
  rec.alpha_greedy = greedy_independent_set(h, rng).size();
  rec.status = TrialStatus::ok;
}

void fill_pipeline_trial(const ExperimentConfig& cfg, Rng& rng, ExperimentRecord& rec) {
  PipelineOptions options;
  options.order = cfg.order;
  const PipelineRun run = pipeline_chi_upper(cfg.n, cfg.d, cfg.r, cfg.eps, rng, options);
  const PipelineResult& res = run.result;
  rec.M = res.M;
  rec.colors_initial = res.colors_initial;
  rec.bad_edges = res.bad_edges;
  rec.u = res.u;
  rec.delta = res.delta;
  rec.colors_final = res.colors_final;
  rec.alpha_greedy = greedy_independent_set(run.hypergraph, rng).size();
  rec.status = res.status;
  rec.message = res.failure;
}

}  // namespace

ExperimentRecord run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.master_seed, trial);
  rec.n = cfg.n;
  rec.r = cfg.r;
  rec.eps = cfg.eps;
  rec.d = effective_degree(cfg);
  try {
    Rng rng(rec.seed);
    if (cfg.model == Model::regular) {
      fill_pipeline_trial(cfg, rng, rec);
    } else {
      fill_sampled_trial(cfg, rng, rec);
    }
    if (rec.d > 1) {
      rec.chi_pred = theory::predicted_chi(cfg.r, rec.d);
      rec.alpha_pred = theory::predicted_alpha_frac(cfg.r, rec.d) * static_cast<double>(cfg.n);
    }
    // alpha_greedy does not depend on repair, so its ratio is kept either way.
    if (rec.alpha_pred > 0) {
      rec.ratio_alpha = static_cast<double>(rec.alpha_greedy) / rec.alpha_pred;
    }
    if (rec.status == TrialStatus::ok && rec.chi_pred > 0) {
      rec.ratio_chi = rec.colors_final / rec.chi_pred;
    }
  } catch (const std::exception& e) {
    rec.status = TrialStatus::invalid;
    rec.message = e.what();
  }
  rec.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records) {
  ExperimentSummary s;
  s.trials = records.size();
  auto update = [](RatioStats& stats, double value, std::size_t seen) {
    if (seen == 0) {
      stats.min = stats.max = value;
    } else {
      stats.min = std::min(stats.min, value);
      stats.max = std::max(stats.max, value);
    }
    stats.mean += value;
  };
  for (const auto& rec : records) {
    if (rec.status != TrialStatus::ok) continue;
    update(s.ratio_chi, rec.ratio_chi, s.ok);
    update(s.ratio_alpha, rec.ratio_alpha, s.ok);
    ++s.ok;
  }
  if (s.ok > 0) {
    s.ratio_chi.mean /= static_cast<double>(s.ok);
    s.ratio_alpha.mean /= static_cast<double>(s.ok);
  }
  return s;
}

void for_each_trial(std::size_t trials, unsigned workers,
                    const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) fn(t);
  };
  const std::size_t threads = std::min<std::size_t>(std::max(workers, 1u), trials);
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentResult result;
  result.records.resize(cfg.trials);
  for_each_trial(cfg.trials, cfg.workers,
                 [&](std::size_t t) { result.records[t] = run_trial(cfg, t); });
  result.summary = summarize(result.records);
  return result;
}

std::vector<PipelineResult> run_pipeline_trials(const ExperimentConfig& cfg,
                                                std::optional<int> delta) {
  validate(cfg);
  if (cfg.model != Model::regular) throw std::invalid_argument("pipeline trials need the regular model");
  std::vector<PipelineResult> results(cfg.trials);
  PipelineOptions options;
  options.order = cfg.order;
  options.delta = delta;
  for_each_trial(cfg.trials, cfg.workers, [&](std::size_t t) {
    Rng rng(derive_seed(cfg.master_seed, t));
    results[t] = pipeline_chi_upper(cfg.n, cfg.d, cfg.r, cfg.eps, rng, options).result;
  });
  return results;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
               bool with_timing) {
  std::ostringstream line;
  line << std::setprecision(17);
  out << kCsvHeader << '\n';
  for (const auto& rec : records) {
    line.str("");
    line << rec.trial << ',' << rec.seed << ',' << rec.n << ',' << rec.r << ',' << rec.d << ','
         << rec.eps << ',' << rec.M << ',' << rec.colors_initial << ',' << rec.bad_edges << ','
         << rec.u << ',' << rec.delta << ',' << rec.colors_final << ',' << rec.alpha_greedy << ','
         << rec.chi_pred << ',' << rec.alpha_pred << ',' << rec.ratio_chi << ','
         << rec.ratio_alpha << ',';
    if (with_timing) {
      line << rec.runtime_ms;
    } else {
      line << "NA";
    }
    line << ',' << to_string(rec.status) << '\n';
    out << line.str();
  }
}

}  // namespace hyperchrom
