#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/rng.hpp"
#include "hyperchrom/sampler.hpp"

namespace hyperchrom {

std::vector<Vertex> random_order(std::size_t n, Rng& rng);
// Highest degree first, ties by smaller id.
std::vector<Vertex> degree_descending_order(const Hypergraph& h);

// First-fit in the given order: v takes the smallest color c such that no
// edge through v has all its other slots already colored c. A vertex on a
// full loop has no other slots to consult; it gets the smallest color allowed
// by its remaining edges and its loop stays monochromatic for repair.
Coloring greedy_color(const Hypergraph& h, std::span<const Vertex> order);

// Random-order greedy maximal independent set, returned sorted.
std::vector<Vertex> greedy_independent_set(const Hypergraph& h, Rng& rng);

// kappa_j = (10 d / r) C(r, j) a^j for j = 1..r-1 (index 0 and r unused), with
// a = (1 + eps/2) (r ln d / ((r-1) d))^{1/(r-1)}.
std::vector<double> profile_thresholds(int r, double d, double eps);

// True iff X_{A,j} <= slack * kappa_j * n for every class A and 1 <= j <= r-1.
bool check_profile(const Hypergraph& h, const Coloring& col, std::span<const double> kappa,
                   std::size_t n, double slack);

struct TrackResult {
  Hypergraph hypergraph;
  Coloring coloring;
  std::vector<std::size_t> bad;    // monochromatic edges of the final hypergraph
  std::size_t created_bad = 0;     // created parts monochromatic when created
  std::size_t steps = 0;
};

// Augments `ps` to d points per bucket under a fixed coloring of the buckets
// and reports which final edges are monochromatic. Those are created parts,
// or loops and multi-edge copies surviving from the trimmed system.
TrackResult transform_and_track(PointSystem ps, const Coloring& coloring, std::uint32_t d,
                                Rng& rng);

// Thrown when the fresh palette cannot absorb the uncolored set.
class RepairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepairResult {
  Coloring coloring;
  std::vector<Vertex> uncolored;  // U, ascending
  std::size_t degeneracy = 0;     // degeneracy of the hypergraph induced on U
};

// Uncolors the smallest vertex of each bad edge, then recolors those vertices
// in reverse degeneracy order with fresh colors palette..palette+delta-1,
// first-fit against edges lying inside U. Requires every non-bad edge to be
// non-monochromatic (std::invalid_argument otherwise); throws RepairError when
// some vertex finds all delta fresh colors blocked.
RepairResult repair(const Hypergraph& h, const Coloring& col, std::span<const std::size_t> bad,
                    int delta);

}  // namespace hyperchrom
