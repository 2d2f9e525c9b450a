#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/io.hpp"
#include "hyperchrom/rng.hpp"

namespace hyperchrom {
namespace {

Hypergraph complete_k4() { return Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

TEST(Hypergraph, EdgesAreStoredSorted) {
  const Hypergraph h(3, 5, {{4, 0, 2}, {3, 3, 1}});
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()), (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(std::vector<Vertex>(h.edge(1).begin(), h.edge(1).end()), (std::vector<Vertex>{1, 3, 3}));
}

TEST(Hypergraph, RejectsBadInput) {
  EXPECT_THROW(Hypergraph(1, 3), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 0), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 3, std::vector<Vertex>{0, 1}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1, 3}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1}}), std::invalid_argument);
}

TEST(Hypergraph, DegreesCountLoopSlots) {
  const Hypergraph h(3, 4, {{0, 0, 1}, {1, 2, 3}, {3, 3, 3}});
  EXPECT_EQ(h.degrees(), (std::vector<std::size_t>{2, 2, 1, 4}));
}

TEST(Hypergraph, Simplicity) {
  EXPECT_TRUE(is_simple(complete_k4()));
  EXPECT_FALSE(is_simple(Hypergraph(3, 4, {{0, 0, 1}})));
  EXPECT_FALSE(is_simple(Hypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}})));
  EXPECT_TRUE(is_simple(Hypergraph(3, 4)));
  const std::vector<Vertex> loop{2, 2, 2}, partial{2, 2, 3};
  EXPECT_TRUE(is_full_loop(loop));
  EXPECT_FALSE(is_full_loop(partial));
}

TEST(Incidence, ListsEachEdgeOncePerDistinctVertex) {
  const Hypergraph h(3, 3, {{0, 0, 1}, {0, 1, 2}});
  const Incidence inc(h);
  EXPECT_EQ(std::vector<std::size_t>(inc.edges_of(0).begin(), inc.edges_of(0).end()),
            (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(inc.edges_of(2).size(), 1u);
}

TEST(Coloring, PaletteAndUsage) {
  Coloring col({0, 2, kUncolored, 2});
  EXPECT_EQ(col.palette_size(), 3);
  EXPECT_EQ(col.colors_used(), 2u);
  EXPECT_FALSE(col.is_total());
  EXPECT_EQ(col.uncolored_vertices(), (std::vector<Vertex>{2}));
  col.set(2, 5);
  EXPECT_TRUE(col.is_total());
  EXPECT_EQ(col.palette_size(), 6);
  col.clear(0);
  EXPECT_EQ(col[0], kUncolored);
  EXPECT_THROW(Coloring({0, 3}, 2), std::invalid_argument);
}

TEST(Coloring, MonochromaticAndProper) {
  const Hypergraph h = complete_k4();
  const Coloring split({0, 0, 1, 1});
  EXPECT_TRUE(is_proper(h, split));
  EXPECT_TRUE(find_bad_edges(h, split).empty());
  const Coloring three_zero({0, 0, 0, 1});
  EXPECT_FALSE(is_proper(h, three_zero));
  EXPECT_EQ(find_bad_edges(h, three_zero), (std::vector<std::size_t>{0}));
  EXPECT_THROW(is_proper(h, Coloring({0, 0, 1, kUncolored})), std::invalid_argument);

  const std::vector<Vertex> loop{1, 1, 1};
  EXPECT_TRUE(is_monochromatic(loop, split));
  const std::vector<Vertex> edge{0, 1, 2};
  EXPECT_FALSE(is_monochromatic(edge, Coloring({0, 0, kUncolored, 0})));
}

TEST(Coloring, ClassProfileCountsSlots) {
  const Hypergraph h(3, 4, {{0, 1, 2}, {0, 0, 3}, {1, 2, 3}, {0, 1, 1}});
  const Coloring col({0, 0, 1, 1});
  const ClassProfile p = class_profile(h, col);
  // {0,1,2}: class 0 twice, class 1 once. {0,0,3}: 0 twice, 1 once.
  // {1,2,3}: 0 once, 1 twice. {0,1,1}: monochromatic.
  EXPECT_EQ(p.at(0, 2), 2u);
  EXPECT_EQ(p.at(0, 1), 1u);
  EXPECT_EQ(p.at(1, 1), 2u);
  EXPECT_EQ(p.at(1, 2), 1u);
  EXPECT_EQ(p.bad, 1u);
}

TEST(Independence, Basic) {
  const Hypergraph h = complete_k4();
  const std::vector<Vertex> pair{0, 3}, triple{0, 1, 3};
  EXPECT_TRUE(is_independent(h, pair));
  EXPECT_FALSE(is_independent(h, triple));
}

TEST(Degeneracy, CompleteK4) {
  const Hypergraph h = complete_k4();
  const std::vector<Vertex> all{0, 1, 2, 3};
  const DegeneracyOrder d = degeneracy_order(h, all);
  EXPECT_EQ(d.degeneracy, 3u);
  EXPECT_EQ(d.order, (std::vector<Vertex>{0, 1, 2, 3}));
  // Once vertex 0 is gone only {1,2,3} survives, so each remaining vertex lies
  // in exactly one surviving edge.
  const std::vector<Vertex> rest{1, 2, 3};
  EXPECT_EQ(degeneracy_order(h, rest).degeneracy, 1u);
}

TEST(Degeneracy, IgnoresEdgesLeavingTheSet) {
  const Hypergraph h(3, 6, {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}});
  const std::vector<Vertex> set{0, 1, 2, 4};
  const DegeneracyOrder d = degeneracy_order(h, set);
  EXPECT_EQ(d.degeneracy, 1u);
  EXPECT_EQ(d.order.front(), 4u);
  EXPECT_EQ(d.order.size(), 4u);
}

TEST(Degeneracy, LoopCountsOnce) {
  const Hypergraph h(3, 3, {{0, 0, 1}, {0, 1, 1}});
  const std::vector<Vertex> set{0, 1};
  EXPECT_EQ(degeneracy_order(h, set).degeneracy, 2u);
}

TEST(Io, HypergraphRoundTrip) {
  const Hypergraph h(3, 5, {{0, 1, 2}, {2, 2, 4}, {0, 1, 2}});
  std::stringstream ss;
  io::write_hypergraph(ss, h);
  EXPECT_EQ(ss.str(), "3 5 3\n0 1 2\n2 2 4\n0 1 2\n");
  EXPECT_EQ(io::read_hypergraph(ss), h);
}

TEST(Io, RandomHypergraphsRoundTrip) {
  Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int r = 2 + static_cast<int>(rng.uniform_below(4));
    const std::size_t n = 1 + rng.uniform_below(30);
    const std::size_t m = rng.uniform_below(40);
    std::vector<Vertex> slots(m * r);
    for (auto& v : slots) v = static_cast<Vertex>(rng.uniform_below(n));
    const Hypergraph h(r, n, slots);
    std::stringstream ss;
    io::write_hypergraph(ss, h);
    ASSERT_EQ(io::read_hypergraph(ss), h);
  }
}

TEST(Io, HypergraphParseErrors) {
  for (const char* text : {"", "3 4", "3 4 1\n0 1", "3 4 1\n0 1 4", "1 4 0", "3 4 1\n0 1 2 3",
                           "3 4 1\n0 x 2", "3 4 1\n0 -1 2"}) {
    std::istringstream in(text);
    EXPECT_THROW(io::read_hypergraph(in), std::runtime_error) << text;
  }
}

TEST(Io, ColoringRoundTripWithUncolored) {
  Coloring col({2, kUncolored, 0});
  std::stringstream ss;
  io::write_coloring(ss, col);
  EXPECT_EQ(ss.str(), "0 2\n1 -\n2 0\n");
  EXPECT_EQ(io::read_coloring(ss, 3).assignment()[1], kUncolored);
  std::istringstream shuffled("2 0\n0 2\n1 -\n");
  const Coloring back = io::read_coloring(shuffled, 3);
  EXPECT_EQ(std::vector<Color>(back.assignment().begin(), back.assignment().end()),
            (std::vector<Color>{2, kUncolored, 0}));
}

TEST(Io, ColoringParseErrors) {
  for (const char* text : {"0 1\n", "0 1\n0 1\n", "0 1\n5 1\n", "0 1\n1 q\n", "0 1\n1 -2\n"}) {
    std::istringstream in(text);
    EXPECT_ANY_THROW(io::read_coloring(in, 2)) << text;
  }
}

}  // namespace
}  // namespace hyperchrom
