#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/experiment.hpp"
#include "hyperchrom/pipeline.hpp"
#include "hyperchrom/rng.hpp"
#include "hyperchrom/sampler.hpp"

// Larger seeded Monte Carlo checks. The pipeline-scale ones run at n = 20001
// because 3 does not divide 20000 * 100.

namespace hyperchrom {
namespace {

TEST(MonteCarlo, GreedyProfileHoldsAtSlackOne) {
  const std::size_t n = 10000, trials = 100;
  const std::uint32_t d = 100;
  const auto kappa = profile_thresholds(3, d, 0.2);
  std::size_t passed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(101, t));
    const Hypergraph h =
        strip(to_hypergraph(sample_multi(n, default_multi_edges(n, d, 3), 3, rng))).hypergraph;
    const Coloring col = greedy_color(h, random_order(n, rng));
    if (check_profile(h, col, kappa, n, 1.0)) ++passed;
  }
  EXPECT_GE(passed, 95u);
}

TEST(MonteCarlo, FewBucketsStartFarBelowDegree) {
  const std::size_t n = 100000, trials = 50;
  const std::uint32_t d = 200;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(202, t));
    const PointSystem before = sample_multi(n, default_multi_edges(n, d, 3), 3, rng);
    const DegreeDiagnostics diag = degree_diagnostics(before, trim(before, d), d);
    ASSERT_LT(static_cast<double>(diag.s0) / n, 0.01) << "trial " << t;
  }
}

TEST(MonteCarlo, BadListIsSmallAtDegree100) {
  const std::size_t n = 20001, trials = 20;
  std::size_t within = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(303, t));
    const PipelineResult res = pipeline_chi_upper(n, 100, 3, 0.2, rng).result;
    if (static_cast<double>(res.bad_edges) < 0.05 * n) ++within;
    std::printf("trial %zu: bad_edges=%zu u=%zu degeneracy_u=%zu status=%s\n", t, res.bad_edges,
                res.u, res.degeneracy_u, std::string(to_string(res.status)).c_str());
  }
  EXPECT_EQ(within, trials);
}

TEST(MonteCarlo, RepairSucceedsAtDegree100) {
  const std::size_t n = 20001, trials = 20;
  std::size_t ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(404, t));
    const PipelineResult res = pipeline_chi_upper(n, 100, 3, 0.2, rng).result;
    if (res.status == TrialStatus::ok) ++ok;
  }
  EXPECT_EQ(ok, trials);
}

}  // namespace
}  // namespace hyperchrom
