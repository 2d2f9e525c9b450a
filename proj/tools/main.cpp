#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/experiment.hpp"
#include "hyperchrom/io.hpp"
#include "hyperchrom/pipeline.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"
#include "hyperchrom/validation.hpp"
#include "json_report.hpp"

namespace {

using namespace hyperchrom;
using cli::json;
using cli::to_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kValidationFailure = 2;

// Runs fn on the file at path, or on stdout for "" and "-".
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open `" + path + "` for writing");
  fn(out);
  if (!out) throw std::runtime_error("write to `" + path + "` failed");
}

void write_json(const std::string& path, const json& j) {
  with_output(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

GreedyOrder parse_order(const std::string& name) {
  if (name == "random") return GreedyOrder::random;
  if (name == "degree") return GreedyOrder::degree;
  throw std::invalid_argument("unknown order `" + name + "`");
}

std::string_view to_string(GreedyOrder order) {
  return order == GreedyOrder::random ? "random" : "degree";
}

void apply_config(const json& j, ExperimentConfig& cfg) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "r") cfg.r = value.get<int>();
    else if (key == "d") cfg.d = value.get<std::uint32_t>();
    else if (key == "n") cfg.n = value.get<std::size_t>();
    else if (key == "eps") cfg.eps = value.get<double>();
    else if (key == "p") cfg.p = value.get<double>();
    else if (key == "m") cfg.m = value.get<std::size_t>();
    else if (key == "trials") cfg.trials = value.get<std::size_t>();
    else if (key == "master_seed") cfg.master_seed = value.get<std::uint64_t>();
    else if (key == "model") cfg.model = parse_model(value.get<std::string>());
    else if (key == "workers") cfg.workers = value.get<unsigned>();
    else if (key == "order") cfg.order = parse_order(value.get<std::string>());
    else if (key == "record_timing") cfg.record_timing = value.get<bool>();
    else if (key == "csv_path") cfg.csv_path = value.get<std::string>();
    else if (key == "json_path") cfg.json_path = value.get<std::string>();
    else throw std::invalid_argument("unknown config field `" + key + "`");
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config `" + path + "`");
  ExperimentConfig cfg;
  apply_config(json::parse(in), cfg);
  return cfg;
}

// Holds flag values; a flag overrides the config only when given.
struct ExperimentFlags {
  std::string config;
  ExperimentConfig cfg;
  std::string model = "regular";
  std::string order = "random";
  CLI::Option* r = nullptr;
  CLI::Option* d = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* eps = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* m = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* model_opt = nullptr;
  CLI::Option* workers = nullptr;
  CLI::Option* order_opt = nullptr;
  CLI::Option* timing = nullptr;
  CLI::Option* csv = nullptr;
  CLI::Option* json_out = nullptr;

  ExperimentConfig resolve() const {
    ExperimentConfig out = config.empty() ? ExperimentConfig{} : load_config(config);
    auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(r)) out.r = cfg.r;
    if (given(d)) out.d = cfg.d;
    if (given(n)) out.n = cfg.n;
    if (given(eps)) out.eps = cfg.eps;
    if (given(p)) out.p = cfg.p;
    if (given(m)) out.m = cfg.m;
    if (given(trials)) out.trials = cfg.trials;
    if (given(seed)) out.master_seed = cfg.master_seed;
    if (given(model_opt)) out.model = parse_model(model);
    if (given(workers)) out.workers = cfg.workers;
    if (given(order_opt)) out.order = parse_order(order);
    if (given(timing)) out.record_timing = true;
    if (given(csv)) out.csv_path = cfg.csv_path;
    if (given(json_out)) out.json_path = cfg.json_path;
    return out;
  }
};

int run_theory(int r, double d, double eps, const std::vector<double>& sweep) {
  if (sweep.empty()) {
    write_json("", to_json(theory::theory_report(r, d, eps)));
    return kOk;
  }
  if (sweep[2] < 1 || sweep[2] != static_cast<double>(static_cast<std::size_t>(sweep[2])))
    throw std::invalid_argument("--sweep steps must be a positive integer");
  const auto grid = log_grid(sweep[0], sweep[1], static_cast<std::size_t>(sweep[2]));
  const TheoryTable table = theory_table(r, eps, grid);
  std::cout << "r,d,eps,c,z2,z1,fm_value,certified,chi_pred,alpha_frac_pred\n"
            << std::setprecision(17);
  for (const auto& row : table.rows) {
    std::cout << row.r << ',' << row.d << ',' << row.eps << ',' << row.c << ',' << row.z2 << ','
              << row.z1 << ',' << row.fm_value << ',' << (row.certified ? "true" : "false") << ','
              << row.chi_pred << ',' << row.alpha_frac_pred << '\n';
  }
  if (table.d0) {
    std::cerr << "certified from d0 = " << *table.d0 << '\n';
  } else {
    std::cerr << "no stable certified range on this grid\n";
  }
  return kOk;
}

struct SampleArgs {
  std::string model = "regular";
  std::size_t n = 0;
  std::uint32_t d = 0;
  int r = 3;
  double p = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  bool simple = false;
  std::string out;
  std::string diagnostics;
};

int run_sample(const SampleArgs& a) {
  Rng rng(a.seed);
  const Model model = parse_model(a.model);
  if (model != Model::regular && !a.diagnostics.empty())
    throw std::invalid_argument("--diagnostics applies to the regular model only");
  if (model == Model::regular) {
    const RegularSample s =
        a.simple ? sample_regular_simple(a.n, a.d, a.r, rng) : sample_regular(a.n, a.d, a.r, rng);
    with_output(a.out, [&](std::ostream& out) { io::write_hypergraph(out, s.hypergraph); });
    if (!a.diagnostics.empty()) write_json(a.diagnostics, to_json(s.diagnostics));
    return kOk;
  }
  const Hypergraph h = model == Model::binomial ? sample_binomial(a.n, a.p, a.r, rng)
                                                : sample_uniform_m(a.n, a.m, a.r, rng);
  with_output(a.out, [&](std::ostream& out) { io::write_hypergraph(out, h); });
  return kOk;
}

struct ColorArgs {
  std::string in;
  std::string order = "random";
  std::uint64_t seed = 1;
  std::string out;
  int delta = 0;
};

// Greedy coloring of a hypergraph file; with --delta, monochromatic loop edges
// are repaired. The coloring goes to --out (or stdout), a JSON summary to
// stderr. Exits 2 when the written coloring is not proper.
int run_color(const ColorArgs& a) {
  const Hypergraph h = io::load_hypergraph(a.in);
  Rng rng(a.seed);
  const GreedyOrder order = parse_order(a.order);
  const auto perm = order == GreedyOrder::random ? random_order(h.n(), rng)
                                                 : degree_descending_order(h);
  Coloring col = greedy_color(h, perm);
  const int colors_initial = static_cast<int>(col.colors_used());
  const auto bad = find_bad_edges(h, col);
  json report = {{"n", h.n()},
                 {"M", h.num_edges()},
                 {"order", std::string(to_string(order))},
                 {"colors_initial", colors_initial},
                 {"bad_edges", bad.size()}};
  if (!bad.empty() && a.delta > 0) {
    try {
      RepairResult rep = repair(h, col, bad, a.delta);
      report["u"] = rep.uncolored.size();
      report["degeneracy_u"] = rep.degeneracy;
      col = std::move(rep.coloring);
    } catch (const RepairError& e) {
      report["repair_failure"] = e.what();
    }
  }
  const bool proper = col.is_total() && is_proper(h, col);
  report["colors_final"] = col.colors_used();
  report["proper"] = proper;
  with_output(a.out, [&](std::ostream& out) { io::write_coloring(out, col); });
  std::cerr << report.dump() << '\n';
  return proper ? kOk : kValidationFailure;
}

json pipeline_summary(const std::vector<PipelineResult>& results) {
  std::size_t ok = 0, proper = 0;
  double colors = 0, bad = 0, u = 0;
  for (const auto& r : results) {
    if (r.status == TrialStatus::ok) ++ok;
    if (r.proper) ++proper;
    colors += r.colors_final;
    bad += static_cast<double>(r.bad_edges);
    u += static_cast<double>(r.u);
  }
  const double t = static_cast<double>(results.size());
  return {{"trials", results.size()},
          {"ok", ok},
          {"proper", proper},
          {"mean_colors_final", colors / t},
          {"mean_bad_edges", bad / t},
          {"mean_u", u / t}};
}

int run_pipeline(const ExperimentConfig& cfg, std::optional<int> delta,
                 const std::string& json_path) {
  const auto results = run_pipeline_trials(cfg, delta);
  const double chi_pred = theory::predicted_chi(cfg.r, cfg.d);
  json trials = json::array();
  for (std::size_t t = 0; t < results.size(); ++t) {
    json j = to_json(results[t]);
    j["trial"] = t;
    j["seed"] = derive_seed(cfg.master_seed, t);
    trials.push_back(std::move(j));
  }
  json summary = pipeline_summary(results);
  summary["chi_pred"] = chi_pred;
  write_json(json_path, {{"n", cfg.n},
                         {"d", cfg.d},
                         {"r", cfg.r},
                         {"eps", cfg.eps},
                         {"master_seed", cfg.master_seed},
                         {"order", std::string(to_string(cfg.order))},
                         {"trials", trials},
                         {"summary", summary}});
  for (const auto& r : results)
    if (r.status != TrialStatus::ok || !r.proper) return kValidationFailure;
  return kOk;
}

int run_experiment_cmd(const ExperimentConfig& cfg) {
  const ExperimentResult result = run_experiment(cfg);
  with_output(cfg.csv_path,
              [&](std::ostream& out) { write_csv(out, result.records, cfg.record_timing); });
  if (!cfg.json_path.empty()) {
    json records = json::array();
    for (const auto& rec : result.records) records.push_back(to_json(rec, cfg.record_timing));
    write_json(cfg.json_path, {{"config",
                                {{"r", cfg.r},
                                 {"d", cfg.d},
                                 {"n", cfg.n},
                                 {"eps", cfg.eps},
                                 {"p", cfg.p},
                                 {"m", cfg.m},
                                 {"trials", cfg.trials},
                                 {"master_seed", cfg.master_seed},
                                 {"model", std::string(to_string(cfg.model))},
                                 {"order", std::string(to_string(cfg.order))}}},
                               {"records", records},
                               {"summary", to_json(result.summary)}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random regular hypergraph coloring workbench"};
  app.require_subcommand(1);
  std::function<int()> action;

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "Predicted chi, alpha and certificate values");
  int th_r = 3;
  double th_d = 100, th_eps = 0.1;
  std::vector<double> sweep;
  theory_cmd->add_option("--r", th_r, "Edge size")->capture_default_str();
  theory_cmd->add_option("--d", th_d, "Degree")->capture_default_str();
  theory_cmd->add_option("--eps", th_eps, "Slack epsilon")->capture_default_str();
  theory_cmd->add_option("--sweep", sweep, "dmin dmax steps: CSV over a log grid")
      ->expected(3);
  theory_cmd->callback([&] { action = [&] { return run_theory(th_r, th_d, th_eps, sweep); }; });

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Sample a hypergraph");
  SampleArgs sa;
  sample_cmd->add_option("--model", sa.model, "regular | binomial | uniform-m")
      ->check(CLI::IsMember({"regular", "binomial", "uniform-m"}))
      ->capture_default_str();
  sample_cmd->add_option("--n", sa.n, "Vertices")->required();
  sample_cmd->add_option("--d", sa.d, "Degree (regular)");
  sample_cmd->add_option("--r", sa.r, "Edge size")->capture_default_str();
  sample_cmd->add_option("--p", sa.p, "Edge probability (binomial)");
  sample_cmd->add_option("--m", sa.m, "Edge count (uniform-m)");
  sample_cmd->add_option("--seed", sa.seed, "Seed")->capture_default_str();
  sample_cmd->add_flag("--simple", sa.simple, "Resample until simple (regular)");
  sample_cmd->add_option("--out", sa.out, "Hypergraph file (default stdout)");
  sample_cmd->add_option("--diagnostics", sa.diagnostics, "Degree diagnostics JSON file");
  sample_cmd->callback([&] { action = [&] { return run_sample(sa); }; });

  // color
  auto* color_cmd = app.add_subcommand("color", "Greedy-color a hypergraph file");
  ColorArgs ca;
  color_cmd->add_option("--in", ca.in, "Hypergraph file")->required();
  color_cmd->add_option("--order", ca.order, "random | degree")
      ->check(CLI::IsMember({"random", "degree"}))
      ->capture_default_str();
  color_cmd->add_option("--seed", ca.seed, "Seed for the random order")->capture_default_str();
  color_cmd->add_option("--out", ca.out, "Coloring file (default stdout)");
  color_cmd->add_option("--delta", ca.delta, "Fresh colors for repairing loop edges")
      ->check(CLI::NonNegativeNumber);
  color_cmd->callback([&] { action = [&] { return run_color(ca); }; });

  // pipeline
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run the coloring pipeline");
  ExperimentConfig pc;
  pc.trials = 1;
  std::string pc_order = "random", pc_json;
  pipeline_cmd->add_option("--n", pc.n, "Vertices")->capture_default_str();
  pipeline_cmd->add_option("--d", pc.d, "Degree")->capture_default_str();
  pipeline_cmd->add_option("--r", pc.r, "Edge size")->capture_default_str();
  pipeline_cmd->add_option("--eps", pc.eps, "Slack epsilon")->capture_default_str();
  pipeline_cmd->add_option("--trials", pc.trials, "Trials")->capture_default_str();
  pipeline_cmd->add_option("--seed", pc.master_seed, "Master seed")->capture_default_str();
  pipeline_cmd->add_option("--workers", pc.workers, "Concurrent trials")->capture_default_str();
  pipeline_cmd->add_option("--order", pc_order, "random | degree")
      ->check(CLI::IsMember({"random", "degree"}))
      ->capture_default_str();
  std::optional<int> pc_delta;
  pipeline_cmd->add_option("--delta", pc_delta, "Fresh repair colors (default from r, d, eps)")
      ->check(CLI::PositiveNumber);
  pipeline_cmd->add_option("--json", pc_json, "Output JSON file (default stdout)");
  pipeline_cmd->callback([&] {
    action = [&] {
      pc.order = parse_order(pc_order);
      return run_pipeline(pc, pc_delta, pc_json);
    };
  });

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Exact and statistical self-checks");
  validate_cmd->require_subcommand(1);
  auto* qk_cmd = validate_cmd->add_subcommand("qk", "q_k against full enumeration");
  int max_r = 4;
  std::size_t max_a = 3;
  qk_cmd->add_option("--max-r", max_r, "Largest r")->capture_default_str();
  qk_cmd->add_option("--max-a", max_a, "Largest a")->capture_default_str();
  qk_cmd->callback([&] {
    action = [&] {
      const QkValidation v = validate_qk(max_r, max_a);
      write_json("", to_json(v));
      return v.passed ? kOk : kValidationFailure;
    };
  });

  auto* uni_cmd = validate_cmd->add_subcommand("uniformity", "Chi-square test of augmentation");
  std::size_t un = 2;
  std::uint32_t ud = 3;
  int ur = 3;
  std::uint64_t usamples = 100000, useed = 1;
  double uthreshold = kChiSquareThreshold;
  uni_cmd->add_option("--n", un, "Vertices")->capture_default_str();
  uni_cmd->add_option("--d", ud, "Degree")->capture_default_str();
  uni_cmd->add_option("--r", ur, "Edge size")->capture_default_str();
  uni_cmd->add_option("--samples", usamples, "Samples per mode")->capture_default_str();
  uni_cmd->add_option("--seed", useed, "Seed")->capture_default_str();
  uni_cmd->add_option("--threshold", uthreshold, "Minimum p-value")->capture_default_str();
  uni_cmd->callback([&] {
    action = [&] {
      const UniformityValidation v = validate_uniformity(un, ud, ur, usamples, useed, uthreshold);
      write_json("", {{"full_pipeline", to_json(v.full_pipeline)},
                      {"single_step", to_json(v.single_step)},
                      {"passed", v.passed}});
      return v.passed ? kOk : kValidationFailure;
    };
  });

  auto* loops_cmd = validate_cmd->add_subcommand("loops", "Loop and multi-edge counts of strip");
  std::size_t ln = 100000, ltrials = 200;
  std::uint32_t ld = 50;
  int lr = 3;
  std::uint64_t lseed = 1;
  unsigned lworkers = 1;
  loops_cmd->add_option("--n", ln, "Vertices")->capture_default_str();
  loops_cmd->add_option("--d", ld, "Degree")->capture_default_str();
  loops_cmd->add_option("--r", lr, "Edge size")->capture_default_str();
  loops_cmd->add_option("--trials", ltrials, "Trials")->capture_default_str();
  loops_cmd->add_option("--seed", lseed, "Master seed")->capture_default_str();
  loops_cmd->add_option("--workers", lworkers, "Concurrent trials")->capture_default_str();
  loops_cmd->callback([&] {
    action = [&] {
      const LoopValidation v = validate_loops(ln, ld, lr, ltrials, lseed, lworkers);
      write_json("", to_json(v));
      return v.passed ? kOk : kValidationFailure;
    };
  });

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Seeded Monte Carlo trials to CSV/JSON");
  ExperimentFlags ef;
  exp_cmd->add_option("--config", ef.config, "JSON config file")->check(CLI::ExistingFile);
  ef.r = exp_cmd->add_option("--r", ef.cfg.r, "Edge size");
  ef.d = exp_cmd->add_option("--d", ef.cfg.d, "Degree (regular)");
  ef.n = exp_cmd->add_option("--n", ef.cfg.n, "Vertices");
  ef.eps = exp_cmd->add_option("--eps", ef.cfg.eps, "Slack epsilon");
  ef.p = exp_cmd->add_option("--p", ef.cfg.p, "Edge probability (binomial)");
  ef.m = exp_cmd->add_option("--m", ef.cfg.m, "Edge count (uniform-m)");
  ef.trials = exp_cmd->add_option("--trials", ef.cfg.trials, "Trials");
  ef.seed = exp_cmd->add_option("--seed", ef.cfg.master_seed, "Master seed");
  ef.model_opt = exp_cmd->add_option("--model", ef.model, "regular | binomial | uniform-m");
  ef.workers = exp_cmd->add_option("--workers", ef.cfg.workers, "Concurrent trials");
  ef.order_opt = exp_cmd->add_option("--order", ef.order, "random | degree");
  ef.timing = exp_cmd->add_flag("--timing", "Record runtime_ms (breaks byte-identical reruns)");
  ef.csv = exp_cmd->add_option("--csv", ef.cfg.csv_path, "CSV file (default stdout)");
  ef.json_out = exp_cmd->add_option("--json", ef.cfg.json_path, "JSON file");
  exp_cmd->callback([&] { action = [&] { return run_experiment_cmd(ef.resolve()); }; });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Greedy and repair against exact oracles");
  std::uint64_t oseed = 1;
  std::size_t ocases = 200, on = 8;
  int or_ = 3;
  double op = 0.25;
  oracle_cmd->add_option("--seed", oseed, "Seed")->capture_default_str();
  oracle_cmd->add_option("--cases", ocases, "Random instances")->capture_default_str();
  oracle_cmd->add_option("--n", on, "Vertices per instance (<= 12)")->capture_default_str();
  oracle_cmd->add_option("--r", or_, "Edge size")->capture_default_str();
  oracle_cmd->add_option("--p", op, "Edge probability")->capture_default_str();
  oracle_cmd->callback([&] {
    action = [&] {
      const OracleReport rep = oracle_suite(oseed, ocases, on, or_, op);
      write_json("", to_json(rep));
      return rep.failures == 0 ? kOk : kValidationFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
