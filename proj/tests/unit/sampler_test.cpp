#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hyperchrom/rng.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/validation.hpp"

namespace hyperchrom {
namespace {

std::vector<Vertex> as_vector(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

// Blocks of the partition as sorted point sets, for comparisons that ignore
// part order.
std::set<std::vector<PointId>> blocks(const PointSystem& ps) {
  std::set<std::vector<PointId>> out;
  for (std::size_t i = 0; i < ps.num_parts(); ++i) {
    std::vector<PointId> b(ps.part(i).begin(), ps.part(i).end());
    std::ranges::sort(b);
    out.insert(b);
  }
  return out;
}

TEST(SampleMulti, SingleBucketGivesFullLoop) {
  Rng rng(1);
  const PointSystem ps = sample_multi(1, 1, 3, rng);
  EXPECT_EQ(ps.num_parts(), 1u);
  EXPECT_EQ(ps.occupancy()[0], 3u);
  const Hypergraph h = to_hypergraph(ps);
  EXPECT_EQ(as_vector(h.edge(0)), (std::vector<Vertex>{0, 0, 0}));
}

TEST(SampleMulti, Conservation) {
  Rng rng(2);
  const PointSystem ps = sample_multi(5, 10, 3, rng);
  ps.check_invariants();
  EXPECT_EQ(ps.num_parts(), 10u);
  std::uint32_t total = 0;
  for (auto occ : ps.occupancy()) total += occ;
  EXPECT_EQ(total, 30u);
  // Ranks are 1..occupancy in point-id order within each bucket.
  std::vector<std::uint32_t> seen(5, 0);
  for (PointId p = 0; p < ps.num_points(); ++p) EXPECT_EQ(ps.rank(p), ++seen[ps.bucket(p)]);
  EXPECT_EQ(sample_multi(5, 0, 3, rng).num_parts(), 0u);
}

TEST(SampleMulti, PartitionIsUniform) {
  Rng rng(3);
  std::map<std::vector<std::uint8_t>, std::uint64_t> tally;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) ++tally[partition_labels(sample_multi(4, 2, 3, rng))];
  ASSERT_EQ(tally.size(), 10u);
  std::vector<std::uint64_t> counts;
  for (const auto& [labels, count] : tally) counts.push_back(count);
  EXPECT_GT(chi_square_uniform(counts).p_value, 0.001);
}

TEST(ToHypergraph, EdgeIsMultisetOfBuckets) {
  PointSystem ps(8, 3);
  const PointId p[] = {ps.add_point(4, false), ps.add_point(7, false), ps.add_point(4, false)};
  EXPECT_EQ(to_hypergraph(ps).num_edges(), 0u);
  ps.append_part(p);
  EXPECT_EQ(as_vector(to_hypergraph(ps).edge(0)), (std::vector<Vertex>{4, 4, 7}));
}

TEST(ToHypergraph, KeepsMultiplicity) {
  Rng rng(4);
  const PointSystem ps = sample_multi(2, 7, 2, rng);
  EXPECT_EQ(to_hypergraph(ps).num_edges(), 7u);
}

TEST(Strip, Example) {
  const Hypergraph h(3, 5, {{0, 1, 2}, {0, 1, 2}, {3, 3, 4}});
  const StripResult s = strip(h);
  EXPECT_EQ(s.hypergraph.num_edges(), 0u);
  EXPECT_EQ(s.loops_removed, 1u);
  EXPECT_EQ(s.multiedges_removed, 2u);
}

TEST(Strip, SimpleIsUnchanged) {
  const Hypergraph h(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  const StripResult s = strip(h);
  EXPECT_EQ(s.hypergraph, h);
  EXPECT_EQ(s.loops_removed + s.multiedges_removed, 0u);
}

TEST(Strip, PropertiesOnRandomMultigraphs) {
  Rng rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 2 + rng.uniform_below(8);
    const Hypergraph h = to_hypergraph(sample_multi(n, rng.uniform_below(20), 3, rng));
    const StripResult s = strip(h);
    ASSERT_TRUE(is_simple(s.hypergraph));
    ASSERT_EQ(s.hypergraph.num_edges() + s.loops_removed + s.multiedges_removed, h.num_edges());
    const StripResult again = strip(s.hypergraph);
    ASSERT_EQ(again.hypergraph, s.hypergraph);
    ASSERT_EQ(again.loops_removed + again.multiedges_removed, 0u);
  }
}

TEST(Trim, IdentityWhenNothingExceeds) {
  Rng rng(6);
  const PointSystem ps = sample_multi(50, 10, 3, rng);
  const PointSystem t = trim(ps, 100);
  EXPECT_EQ(to_hypergraph(t), to_hypergraph(ps));
  EXPECT_EQ(t.live_points(), ps.live_points());
}

TEST(Trim, SingleBucketPigeonhole) {
  Rng rng(7);
  const PointSystem ps = sample_multi(1, 2, 3, rng);
  const PointSystem t = trim(ps, 3);
  EXPECT_LT(t.num_parts(), 2u);
  EXPECT_LE(t.occupancy()[0], 3u);
}

TEST(Trim, PropertiesOnRandomSystems) {
  Rng rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng.uniform_below(20);
    const auto d = static_cast<std::uint32_t>(1 + rng.uniform_below(6));
    const PointSystem ps = sample_multi(n, rng.uniform_below(3 * n), 3, rng);
    const PointSystem t = trim(ps, d);
    t.check_invariants();
    for (auto occ : t.occupancy()) ASSERT_LE(occ, d);
    // Surviving parts are original parts; deleted parts held a rank > d point.
    const auto before = blocks(ps), after = blocks(t);
    for (const auto& b : after) ASSERT_TRUE(before.count(b));
    for (const auto& b : before) {
      const bool has_high = std::ranges::any_of(b, [&](PointId p) { return ps.rank(p) > d; });
      ASSERT_EQ(!after.count(b), has_high);
    }
    ASSERT_EQ(blocks(trim(ps, d)), after);
    ASSERT_EQ(blocks(trim(t, d)), after);
  }
}

TEST(Augment, EmptyPartitionTakesNewPoints) {
  PointSystem ps(3, 3);
  Rng rng(9);
  const AugmentOutcome out = augment_in_place(ps, 1, rng);
  EXPECT_EQ(out.k, 1);
  ASSERT_EQ(ps.num_parts(), 1u);
  EXPECT_EQ(as_vector(to_hypergraph(ps).edge(0)), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(ps.part_is_created(0));
}

TEST(Augment, FillsLowestOpenSlotsFirst) {
  PointSystem ps(4, 3);
  Rng rng(10);
  augment_in_place(ps, 2, rng);
  EXPECT_EQ(std::vector<std::uint32_t>(ps.occupancy().begin(), ps.occupancy().end()),
            (std::vector<std::uint32_t>{2, 1, 0, 0}));
  augment_in_place(ps, 2, rng);
  EXPECT_EQ(std::vector<std::uint32_t>(ps.occupancy().begin(), ps.occupancy().end()),
            (std::vector<std::uint32_t>{2, 2, 2, 0}));
  EXPECT_THROW(augment_in_place(ps, 2, rng), std::invalid_argument);
  ps.check_invariants();
}

TEST(Augment, PartCountGrowsByOneAndCreatedPartsHoldNewPoints) {
  Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 3 + rng.uniform_below(10);
    const std::uint32_t d = 3;
    PointSystem ps = trim(sample_multi(n, rng.uniform_below(n), 3, rng), d);
    if (deficiency(ps, d) < 3) continue;
    const std::size_t before = ps.num_parts();
    const std::size_t first_new = ps.num_points();
    const AugmentOutcome out = augment_in_place(ps, d, rng);
    ps.check_invariants();
    ASSERT_EQ(ps.num_parts(), before + 1);
    ASSERT_GE(out.k, 1);
    ASSERT_LE(out.k, 3);
    ASSERT_EQ(ps.num_parts() - out.first_created_part, static_cast<std::size_t>(out.k));
    for (std::size_t i = 0; i < ps.num_parts(); ++i) {
      const bool has_new = std::ranges::any_of(ps.part(i), [&](PointId p) { return p >= first_new; });
      ASSERT_EQ(has_new, i >= out.first_created_part);
      ASSERT_EQ(ps.part_is_created(i), std::ranges::any_of(ps.part(i), [&](PointId p) {
                  return ps.augmented(p);
                }));
    }
  }
}

TEST(Augment, StepChecksDeficiency) {
  Rng rng(12);
  PointSystem ps(2, 3);
  EXPECT_THROW(augment_step(ps, 2, rng), std::invalid_argument);  // deficiency 4
  const PointSystem next = augment_step(PointSystem(2, 3), 3, rng);
  EXPECT_EQ(next.num_parts(), 1u);
}

TEST(DefaultMultiEdges, Values) {
  EXPECT_EQ(default_multi_edges(20001, 100, 3), 359673u);
  EXPECT_EQ(default_multi_edges(100000, 50, 3), 744594u);
  EXPECT_EQ(default_multi_edges(300, 1, 3), 100u);
}

TEST(SampleRegular, DegreesAndEdgeCount) {
  Rng rng(13);
  for (const auto& [n, d, r] : std::vector<std::tuple<std::size_t, std::uint32_t, int>>{
           {300, 6, 3}, {100, 9, 3}, {50, 8, 4}, {7, 5, 5}, {40, 13, 2}}) {
    for (int iter = 0; iter < 10; ++iter) {
      const RegularSample s = sample_regular(n, d, r, rng);
      s.points.check_invariants();
      ASSERT_EQ(s.hypergraph.num_edges(), n * d / r);
      for (auto deg : s.hypergraph.degrees()) ASSERT_EQ(deg, d);
    }
  }
}

TEST(SampleRegular, PureAugmentation) {
  Rng rng(14);
  RegularOptions opts;
  opts.m = 0;
  const RegularSample s = sample_regular(30, 4, 3, rng, opts);
  EXPECT_EQ(s.diagnostics.m, 0u);
  for (auto deg : s.hypergraph.degrees()) ASSERT_EQ(deg, 4u);
}

TEST(SampleRegular, Errors) {
  Rng rng(15);
  EXPECT_THROW(sample_regular(10, 4, 3, rng), std::invalid_argument);
  EXPECT_THROW(sample_regular(10, 0, 2, rng), std::invalid_argument);
}

TEST(SampleRegular, SimpleVariant) {
  Rng rng(16);
  const RegularSample s = sample_regular_simple(30, 3, 3, rng);
  EXPECT_TRUE(is_simple(s.hypergraph));
  EXPECT_THROW(sample_regular_simple(3, 3, 3, rng, 5), std::runtime_error);
}

TEST(SampleRegular, Deterministic) {
  Rng a(99), b(99);
  EXPECT_EQ(sample_regular(201, 10, 3, a).hypergraph, sample_regular(201, 10, 3, b).hypergraph);
}

TEST(UniformM, ForcedAndDistinct) {
  Rng rng(17);
  const Hypergraph all = sample_uniform_m(5, 10, 3, rng);
  EXPECT_EQ(all.num_edges(), 10u);
  EXPECT_TRUE(is_simple(all));
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = 3 + rng.uniform_below(30);
    const std::size_t m = rng.uniform_below(std::min<std::uint64_t>(choose(n, 3), 200) + 1);
    const Hypergraph h = sample_uniform_m(n, m, 3, rng);
    ASSERT_EQ(h.num_edges(), m);
    ASSERT_TRUE(is_simple(h));
  }
  EXPECT_THROW(sample_uniform_m(5, 11, 3, rng), std::invalid_argument);
}

TEST(Binomial, Extremes) {
  Rng rng(18);
  EXPECT_EQ(sample_binomial(6, 0.0, 3, rng).num_edges(), 0u);
  EXPECT_EQ(sample_binomial(6, 1.0, 3, rng).num_edges(), 20u);
  EXPECT_THROW(sample_binomial(6, 1.5, 3, rng), std::invalid_argument);
}

TEST(Binomial, EdgeCountMoments) {
  Rng rng(19);
  const int draws = 10000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < draws; ++i) {
    const auto m = static_cast<double>(sample_binomial(10, 0.1, 3, rng).num_edges());
    sum += m;
    sum_sq += m * m;
  }
  const double mean = sum / draws;
  const double var = sum_sq / draws - mean * mean;
  const double sigma = std::sqrt(120 * 0.1 * 0.9);
  EXPECT_NEAR(mean, 12.0, 3 * sigma / std::sqrt(draws));
  EXPECT_NEAR(var, 10.8, 0.6);
}

TEST(Choose, ValuesAndSaturation) {
  EXPECT_EQ(choose(10, 3), 120u);
  EXPECT_EQ(choose(3, 5), 0u);
  EXPECT_EQ(choose(62, 31), 465428353255261088u);
  EXPECT_EQ(choose(1000, 500), std::numeric_limits<std::uint64_t>::max());
}

TEST(Diagnostics, ContainmentProperties) {
  Rng rng(20);
  for (int iter = 0; iter < 30; ++iter) {
    const std::uint32_t d = 20 + static_cast<std::uint32_t>(rng.uniform_below(40));
    const std::size_t n = 300;
    const PointSystem before = sample_multi(n, default_multi_edges(n, d, 3), 3, rng);
    const PointSystem after = trim(before, d);
    const DegreeDiagnostics diag = degree_diagnostics(before, after, d);
    ASSERT_LE(diag.s0, diag.s1 + diag.s2);
    ASSERT_EQ(diag.m, before.num_parts());
    ASSERT_EQ(diag.m - diag.parts_trimmed, after.num_parts());
  }
  // Without trimming nothing is lost.
  const PointSystem small = sample_multi(100, 30, 3, rng);
  const DegreeDiagnostics diag = degree_diagnostics(small, trim(small, 1000), 1000);
  EXPECT_EQ(diag.s2, 0u);
  EXPECT_EQ(diag.parts_trimmed, 0u);
  EXPECT_LE(diag.s0, diag.s1);
  EXPECT_THROW(degree_diagnostics(small, sample_multi(100, 30, 3, rng), 5), std::invalid_argument);
}

}  // namespace
}  // namespace hyperchrom
