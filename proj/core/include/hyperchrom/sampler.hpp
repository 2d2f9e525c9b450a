#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/rng.hpp"

namespace hyperchrom {

using PointId = std::uint32_t;

// Bucket/point model. Buckets are vertices, points are edge slots, and a
// partition of the live points into r-sets ("parts") induces the edges.
//
// Point ids are never reused: points deleted by trimming stay in the arrays
// with alive() == false. Points created during augmentation carry
// augmented() == true; a part is "created" iff it holds an augmented point.
class PointSystem {
 public:
  PointSystem(std::size_t n, int r);

  std::size_t n() const noexcept { return occupancy_.size(); }
  int r() const noexcept { return r_; }

  std::size_t num_points() const noexcept { return bucket_.size(); }
  std::size_t live_points() const noexcept { return live_; }
  std::size_t num_parts() const noexcept { return parts_.size() / r_; }

  Vertex bucket(PointId p) const { return bucket_[p]; }
  // 1-based arrival index within the bucket.
  std::uint32_t rank(PointId p) const { return rank_[p]; }
  bool alive(PointId p) const { return alive_[p]; }
  bool augmented(PointId p) const { return augmented_[p]; }

  std::span<const PointId> part(std::size_t i) const {
    return {parts_.data() + i * r_, static_cast<std::size_t>(r_)};
  }
  std::span<const std::uint32_t> occupancy() const noexcept { return occupancy_; }
  std::span<const Vertex> buckets() const noexcept { return bucket_; }

  bool part_is_created(std::size_t i) const;

  // Low-level mutators used by the pipeline operations below. They keep the
  // occupancy/liveness bookkeeping but not the partition invariant, which
  // holds only between whole operations.
  PointId add_point(Vertex bucket, bool augmented);
  void kill_point(PointId p);
  void append_part(std::span<const PointId> points);
  // Removes part i by moving the last part into its place.
  void remove_part(std::size_t i);
  void clear_parts() { parts_.clear(); }

  // First bucket that may still have room; buckets before it are full for
  // every target degree seen by augment_in_place since the last trim.
  std::size_t fill_cursor() const noexcept { return fill_cursor_; }
  void set_fill_cursor(std::size_t b) noexcept { fill_cursor_ = b; }

  // Throws std::logic_error describing the first violated invariant:
  // every live point in exactly one part, parts of size r, occupancy equal to
  // live points per bucket.
  void check_invariants() const;

 private:
  int r_;
  std::vector<Vertex> bucket_;
  std::vector<std::uint32_t> rank_;
  std::vector<bool> alive_;
  std::vector<bool> augmented_;
  std::vector<std::uint32_t> occupancy_;
  std::vector<std::uint32_t> arrivals_;
  std::vector<PointId> parts_;
  std::size_t live_ = 0;
  std::size_t fill_cursor_ = 0;
};

struct DegreeDiagnostics {
  std::size_t s0 = 0;  // buckets with <= d - 3 sqrt(d) ln d points of P'
  std::size_t s1 = 0;  // buckets with <= d - 2 sqrt(d) ln d points of P
  std::size_t s2 = 0;  // buckets losing >= sqrt(d) ln d points to trimming
  std::size_t m = 0;   // edges of the multi-hypergraph
  std::size_t M = 0;   // edges left after stripping
  std::size_t loops_removed = 0;
  std::size_t multiedges_removed = 0;
  std::size_t parts_trimmed = 0;
};

struct StripResult {
  Hypergraph hypergraph;
  std::size_t loops_removed = 0;
  std::size_t multiedges_removed = 0;
};

// rm points into independent uniform buckets, ranks in point-id order, and a
// uniform partition into m parts (uniform shuffle, consecutive blocks).
PointSystem sample_multi(std::size_t n, std::size_t m, int r, Rng& rng);

// One edge per part: the multiset of its points' buckets.
Hypergraph to_hypergraph(const PointSystem& ps);

// Drops every edge with a repeated vertex, then every copy of any simple edge
// occurring more than once. Surviving edges keep their order.
StripResult strip(const Hypergraph& h);

// Deletes each part holding a point of rank > d, together with its points.
PointSystem trim(PointSystem ps, std::uint32_t d);

// Sum over buckets of max(0, d - occupancy).
std::size_t deficiency(const PointSystem& ps, std::uint32_t d);

struct AugmentOutcome {
  int k = 0;                         // parts met by the new points
  std::size_t first_created_part = 0;  // created parts are [first, num_parts)
};

// One augmentation step, in place: r new points fill the first open bucket
// slots in ascending bucket order, K ~ q(a) is drawn, K-1 uniform parts are
// dissolved, and the Kr free points are repartitioned uniformly among
// partitions giving every part a new point (rejection sampling). Throws
// std::invalid_argument when fewer than r open slots remain.
AugmentOutcome augment_in_place(PointSystem& ps, std::uint32_t d, Rng& rng);

// Value-returning step; additionally checks that the total deficiency is a
// positive multiple of r.
PointSystem augment_step(PointSystem ps, std::uint32_t d, Rng& rng);

// floor(((d - sqrt(d) ln d) / r) n), or 0 when that is not positive.
std::size_t default_multi_edges(std::size_t n, std::uint32_t d, int r);

struct RegularSample {
  Hypergraph hypergraph;
  DegreeDiagnostics diagnostics;
  PointSystem points;
};

struct RegularOptions {
  // Overrides default_multi_edges; 0 gives pure augmentation.
  std::optional<std::size_t> m;
};

// sample_multi -> trim -> augment until every bucket holds d points. Every
// vertex of the result has degree exactly d; loops and multi-edges may remain.
// Throws std::invalid_argument unless r divides n*d.
RegularSample sample_regular(std::size_t n, std::uint32_t d, int r, Rng& rng,
                             const RegularOptions& options = {});

// Resamples until the output is simple; throws std::runtime_error after
// max_attempts failures.
RegularSample sample_regular_simple(std::size_t n, std::uint32_t d, int r, Rng& rng,
                                    std::size_t max_attempts = 1000);

// C(n, r), saturating at UINT64_MAX.
std::uint64_t choose(std::uint64_t n, std::uint64_t r);

// m distinct r-subsets, uniformly. Throws std::invalid_argument if m > C(n, r).
Hypergraph sample_uniform_m(std::size_t n, std::size_t m, int r, Rng& rng);

// Each r-subset independently with probability p: draws Bin(C(n,r), p) then
// a uniform set of that many r-subsets.
Hypergraph sample_binomial(std::size_t n, double p, int r, Rng& rng);

// S0/S1/S2 for a point system before and after trimming (P' counts only
// non-augmented live points of `after`), plus strip and trim counters.
// Throws std::invalid_argument when the two systems disagree on buckets.
DegreeDiagnostics degree_diagnostics(const PointSystem& before, const PointSystem& after,
                                     std::uint32_t d);

}  // namespace hyperchrom
