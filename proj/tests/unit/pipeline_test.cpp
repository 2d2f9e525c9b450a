#include <gtest/gtest.h>

#include <stdexcept>

#include "hyperchrom/pipeline.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"

namespace hyperchrom {
namespace {

TEST(RepairPalette, Values) {
  EXPECT_EQ(repair_palette(3, 100, 0.2), 1);
  EXPECT_EQ(repair_palette(3, 1e6, 0.2), 21);
  EXPECT_EQ(repair_palette(3, 1e6, 0.01), 1);
}

TEST(Pipeline, FieldsAreConsistent) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Rng rng(seed);
    const PipelineRun run = pipeline_chi_upper(1500, 20, 3, 0.2, rng);
    const PipelineResult& res = run.result;
    EXPECT_EQ(res.m, default_multi_edges(1500, 20, 3));
    EXPECT_LE(res.M, res.m);
    EXPECT_EQ(res.delta, repair_palette(3, 20, 0.2));
    EXPECT_LE(res.u, res.bad_edges);
    EXPECT_EQ(run.hypergraph.num_edges(), 1500u * 20 / 3);
    for (auto deg : run.hypergraph.degrees()) ASSERT_EQ(deg, 20u);
    if (res.status == TrialStatus::ok) {
      EXPECT_TRUE(res.proper);
      EXPECT_TRUE(is_proper(run.hypergraph, run.coloring));
      EXPECT_LE(res.colors_final, res.colors_initial + res.delta);
      EXPECT_TRUE(res.failure.empty());
    } else {
      EXPECT_EQ(res.status, TrialStatus::repair_failed);
      EXPECT_EQ(res.colors_final, 0);
      EXPECT_FALSE(res.failure.empty());
      EXPECT_GE(res.degeneracy_u + 1, static_cast<std::size_t>(res.delta));
    }
  }
}

TEST(Pipeline, WidePaletteRepairsEverything) {
  Rng rng(4);
  PipelineOptions opts;
  opts.delta = 40;
  const PipelineRun run = pipeline_chi_upper(1500, 20, 3, 0.2, rng, opts);
  ASSERT_EQ(run.result.status, TrialStatus::ok) << run.result.failure;
  EXPECT_TRUE(is_proper(run.hypergraph, run.coloring));
  EXPECT_LE(run.result.colors_final, run.result.colors_initial + 40);
  EXPECT_GT(run.result.degeneracy_u, 0u);
  EXPECT_LE(run.result.colors_final,
            run.result.colors_initial + static_cast<int>(run.result.degeneracy_u) + 1);
}

TEST(Pipeline, DegreeOrderAndPureAugmentation) {
  Rng rng(5);
  PipelineOptions opts;
  opts.order = GreedyOrder::degree;
  opts.m = 0;
  opts.delta = 40;
  const PipelineRun run = pipeline_chi_upper(300, 6, 3, 0.5, rng, opts);
  EXPECT_EQ(run.result.m, 0u);
  EXPECT_EQ(run.result.colors_initial, 1);
  EXPECT_EQ(run.result.status, TrialStatus::ok);
}

TEST(Pipeline, Deterministic) {
  Rng a(6), b(6);
  const PipelineRun x = pipeline_chi_upper(600, 10, 3, 0.2, a);
  const PipelineRun y = pipeline_chi_upper(600, 10, 3, 0.2, b);
  EXPECT_EQ(x.hypergraph, y.hypergraph);
  EXPECT_EQ(x.result.bad_edges, y.result.bad_edges);
  EXPECT_EQ(x.result.colors_initial, y.result.colors_initial);
}

TEST(Pipeline, Preconditions) {
  Rng rng(7);
  EXPECT_THROW(pipeline_chi_upper(100, 10, 3, 0.2, rng), std::invalid_argument);
  EXPECT_THROW(pipeline_chi_upper(99, 1, 3, 0.2, rng), std::invalid_argument);
  EXPECT_THROW(pipeline_chi_upper(99, 10, 3, 0.0, rng), std::invalid_argument);
}

TEST(TrialStatus, Names) {
  EXPECT_EQ(to_string(TrialStatus::ok), "ok");
  EXPECT_EQ(to_string(TrialStatus::repair_failed), "repair_failed");
  EXPECT_EQ(to_string(TrialStatus::invalid), "invalid");
}

}  // namespace
}  // namespace hyperchrom
