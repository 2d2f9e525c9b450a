#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/rng.hpp"

namespace hyperchrom {

enum class GreedyOrder { random, degree };

enum class TrialStatus { ok, repair_failed, invalid };

std::string_view to_string(TrialStatus status) noexcept;

// max(1, floor((eps/2) * predicted_chi(r, d))).
int repair_palette(int r, double d, double eps);

struct PipelineOptions {
  GreedyOrder order = GreedyOrder::random;
  std::optional<int> delta;     // defaults to repair_palette(r, d, eps)
  std::optional<std::size_t> m; // defaults to default_multi_edges(n, d, r)
};

struct PipelineResult {
  std::size_t m = 0;              // multi-hypergraph edges
  std::size_t M = 0;              // edges after stripping
  int colors_initial = 0;         // greedy palette on the stripped hypergraph
  bool profile_initial_ok = false;  // X_{A,j} <= kappa_j n on the stripped hypergraph
  std::size_t created_bad = 0;
  std::size_t bad_edges = 0;      // monochromatic edges of the regular hypergraph
  std::size_t u = 0;              // |U|
  std::size_t degeneracy_u = 0;
  int delta = 0;
  int colors_final = 0;           // 0 when repair failed
  bool profile_ok = false;        // X_{A,j} <= 2 kappa_j n before repair
  bool proper = false;
  TrialStatus status = TrialStatus::invalid;
  std::string failure;
};

struct PipelineRun {
  PipelineResult result;
  Hypergraph hypergraph;  // the d-regular output
  Coloring coloring;      // final coloring; partial only if repair failed
};

// sample_multi -> strip -> greedy_color -> trim -> transform_and_track ->
// repair, then a final properness check. Repair failure is recorded in the
// result, never retried. Throws std::invalid_argument for r not dividing n*d,
// d < 2 or eps <= 0.
PipelineRun pipeline_chi_upper(std::size_t n, std::uint32_t d, int r, double eps, Rng& rng,
                               const PipelineOptions& options = {});

}  // namespace hyperchrom
