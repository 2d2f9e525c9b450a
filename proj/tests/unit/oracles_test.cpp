#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/oracles.hpp"
#include "hyperchrom/rng.hpp"
#include "hyperchrom/sampler.hpp"

namespace hyperchrom {
namespace {

// Plain enumeration of all k^n colorings.
int brute_chromatic(const Hypergraph& h) {
  const std::size_t n = h.n();
  for (int k = 1;; ++k) {
    std::vector<Color> col(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t e = 0; e < h.num_edges() && ok; ++e) {
        const auto edge = h.edge(e);
        bool mono = true;
        for (const Vertex v : edge) mono = mono && col[v] == col[edge[0]];
        ok = !mono;
      }
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
}

std::size_t brute_alpha(const Hypergraph& h) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << h.n()); ++mask) {
    bool ok = true;
    for (std::size_t e = 0; e < h.num_edges() && ok; ++e) {
      bool inside = true;
      for (const Vertex v : h.edge(e)) inside = inside && ((mask >> v) & 1u);
      ok = !inside;
    }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

TEST(Oracles, CompleteK4) {
  const Hypergraph h(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(exact_chromatic(h), 2);
  EXPECT_EQ(exact_alpha(h), 2u);
}

TEST(Oracles, Edgeless) {
  const Hypergraph h(3, 6);
  EXPECT_EQ(exact_chromatic(h), 1);
  EXPECT_EQ(exact_alpha(h), 6u);
}

TEST(Oracles, CompleteGraphNeedsNColors) {
  std::vector<Vertex> slots;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b) slots.insert(slots.end(), {a, b});
  const Hypergraph k5(2, 5, slots);
  EXPECT_EQ(exact_chromatic(k5), 5);
  EXPECT_EQ(exact_alpha(k5), 1u);
}

TEST(Oracles, Guards) {
  EXPECT_THROW(exact_chromatic(Hypergraph(3, kExactChromaticMaxN + 1)), std::length_error);
  EXPECT_THROW(exact_alpha(Hypergraph(3, kExactAlphaMaxN + 1)), std::length_error);
  EXPECT_THROW(exact_chromatic(Hypergraph(3, 3, {{1, 1, 1}})), std::domain_error);
  // A partial loop is an ordinary constraint.
  EXPECT_EQ(exact_chromatic(Hypergraph(3, 3, {{1, 1, 2}})), 2);
  EXPECT_EQ(exact_alpha(Hypergraph(3, 3, {{1, 1, 2}})), 2u);
}

TEST(Oracles, AgreeWithBruteForceOnRandomInstances) {
  Rng rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const int r = 2 + static_cast<int>(rng.uniform_below(2));
    const std::size_t n = 3 + rng.uniform_below(5);
    const Hypergraph h = sample_binomial(n, 0.35, r, rng);
    ASSERT_EQ(exact_chromatic(h), brute_chromatic(h)) << "iter " << iter;
    ASSERT_EQ(exact_alpha(h), brute_alpha(h)) << "iter " << iter;
  }
}

}  // namespace
}  // namespace hyperchrom
