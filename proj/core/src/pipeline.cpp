#include "hyperchrom/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"

namespace hyperchrom {

std::string_view to_string(TrialStatus status) noexcept {
  switch (status) {
    case TrialStatus::ok:
      return "ok";
    case TrialStatus::repair_failed:
      return "repair_failed";
    case TrialStatus::invalid:
      return "invalid";
  }
  return "invalid";
}

int repair_palette(int r, double d, double eps) {
  return std::max(1, static_cast<int>(std::floor(eps / 2 * theory::predicted_chi(r, d))));
}

PipelineRun pipeline_chi_upper(std::size_t n, std::uint32_t d, int r, double eps, Rng& rng,
                               const PipelineOptions& options) {
  if (d < 2) throw std::invalid_argument("pipeline needs d >= 2");
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if ((n * d) % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument("r must divide n*d");
  }

  PipelineRun run;
  PipelineResult& res = run.result;
  res.delta = options.delta.value_or(repair_palette(r, d, eps));
  res.m = options.m.value_or(default_multi_edges(n, d, r));
  const std::vector<double> kappa = profile_thresholds(r, d, eps);

  PointSystem multi = sample_multi(n, res.m, r, rng);
  const StripResult stripped = strip(to_hypergraph(multi));
  res.M = stripped.hypergraph.num_edges();

  const auto order = options.order == GreedyOrder::random
                         ? random_order(n, rng)
                         : degree_descending_order(stripped.hypergraph);
  const Coloring initial = greedy_color(stripped.hypergraph, order);
  if (!is_proper(stripped.hypergraph, initial)) {
    throw std::logic_error("greedy coloring of a loop-free hypergraph is improper");
  }
  res.colors_initial = static_cast<int>(initial.colors_used());
  res.profile_initial_ok = check_profile(stripped.hypergraph, initial, kappa, n, 1.0);

  TrackResult tracked = transform_and_track(trim(std::move(multi), d), initial, d, rng);
  res.created_bad = tracked.created_bad;
  res.bad_edges = tracked.bad.size();
  res.profile_ok = check_profile(tracked.hypergraph, initial, kappa, n, 2.0);

  try {
    RepairResult repaired = repair(tracked.hypergraph, initial, tracked.bad, res.delta);
    res.u = repaired.uncolored.size();
    res.degeneracy_u = repaired.degeneracy;
    res.proper = is_proper(tracked.hypergraph, repaired.coloring);
    res.colors_final = static_cast<int>(repaired.coloring.colors_used());
    res.status = res.proper ? TrialStatus::ok : TrialStatus::invalid;
    if (!res.proper) res.failure = "repaired coloring is not proper";
    run.coloring = std::move(repaired.coloring);
  } catch (const RepairError& e) {
    // Report U and its degeneracy even though the recoloring failed.
    std::vector<Vertex> u;
    for (std::size_t e_id : tracked.bad) u.push_back(tracked.hypergraph.edge(e_id).front());
    std::ranges::sort(u);
    u.erase(std::unique(u.begin(), u.end()), u.end());
    res.u = u.size();
    res.degeneracy_u = degeneracy_order(tracked.hypergraph, u).degeneracy;
    res.status = TrialStatus::repair_failed;
    res.failure = e.what();
    run.coloring = initial;
    for (Vertex v : u) run.coloring.clear(v);
  }
  run.hypergraph = std::move(tracked.hypergraph);
  return run;
}

}  // namespace hyperchrom
