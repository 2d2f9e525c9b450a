#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hyperchrom {

using Vertex = std::uint32_t;
using Color = std::int32_t;

inline constexpr Color kUncolored = -1;

// An r-uniform multi-hypergraph on vertices [0, n). Each edge is stored as a
// sorted multiset of r vertex ids, so loops ({v, v, w}) and repeated edges are
// representable. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int r, std::size_t n);
  // `slots` holds the edges back to back, r entries each.
  Hypergraph(int r, std::size_t n, std::vector<Vertex> slots);
  Hypergraph(int r, std::size_t n,
             std::initializer_list<std::initializer_list<Vertex>> edges);

  int r() const noexcept { return r_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return r_ == 0 ? 0 : slots_.size() / r_; }

  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {slots_.data() + i * r_, static_cast<std::size_t>(r_)};
  }
  std::span<const Vertex> slots() const noexcept { return slots_; }

  // Edge-slot count per vertex; loops count with multiplicity.
  std::vector<std::size_t> degrees() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int r_ = 0;
  std::size_t n_ = 0;
  std::vector<Vertex> slots_;
};

// True when no edge repeats a vertex and no two edges coincide.
bool is_simple(const Hypergraph& h);

// True when every vertex of the edge is the same vertex.
bool is_full_loop(std::span<const Vertex> edge) noexcept;

// Vertex -> incident edge ids in CSR form. An edge appears once per distinct
// vertex it contains, even when the vertex fills several slots.
class Incidence {
 public:
  explicit Incidence(const Hypergraph& h);

  std::span<const std::size_t> edges_of(Vertex v) const noexcept {
    return {edge_ids_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> edge_ids_;
};

// Vertex -> color, possibly partial. Colors live in [0, palette_size).
class Coloring {
 public:
  Coloring() = default;
  // Palette size is inferred as max color + 1.
  explicit Coloring(std::vector<Color> assignment);
  Coloring(std::vector<Color> assignment, Color palette_size);

  static Coloring uncolored(std::size_t n, Color palette_size = 0) {
    return Coloring(std::vector<Color>(n, kUncolored), palette_size);
  }

  std::size_t size() const noexcept { return assignment_.size(); }
  Color operator[](Vertex v) const noexcept { return assignment_[v]; }
  Color palette_size() const noexcept { return palette_size_; }
  std::span<const Color> assignment() const noexcept { return assignment_; }

  bool is_total() const noexcept;
  std::vector<Vertex> uncolored_vertices() const;
  // Number of distinct colors actually used.
  std::size_t colors_used() const;

  // Widens the palette when `c` lies beyond it.
  void set(Vertex v, Color c);
  void clear(Vertex v) { assignment_[v] = kUncolored; }

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<Color> assignment_;
  Color palette_size_ = 0;
};

// X_{A,j} counts edges with exactly j vertex slots in color class A,
// 1 <= j <= r-1. Monochromatic edges go to `bad` instead.
struct ClassProfile {
  int r = 0;
  // counts[A][j], j in [0, r]; only 1..r-1 are populated.
  std::vector<std::vector<std::size_t>> counts;
  std::size_t bad = 0;

  std::size_t at(Color color, int j) const { return counts.at(color).at(j); }
};

// An edge is monochromatic when every slot carries the same color; a full
// loop is therefore monochromatic under any total coloring. Edges touching an
// uncolored vertex are never monochromatic.
bool is_monochromatic(std::span<const Vertex> edge, const Coloring& col) noexcept;

// Throws std::invalid_argument unless `col` colors every vertex of `h`.
bool is_proper(const Hypergraph& h, const Coloring& col);

bool is_independent(const Hypergraph& h, std::span<const Vertex> set);

ClassProfile class_profile(const Hypergraph& h, const Coloring& col);

// Ascending indices of monochromatic edges.
std::vector<std::size_t> find_bad_edges(const Hypergraph& h, const Coloring& col);

struct DegeneracyOrder {
  std::vector<Vertex> order;  // removal order
  std::size_t degeneracy = 0;
};

// Repeatedly removes a vertex of minimum induced degree (edges fully inside
// the remaining set, each counted once per vertex). Ties go to the smallest
// vertex id.
DegeneracyOrder degeneracy_order(const Hypergraph& h, std::span<const Vertex> set);

}  // namespace hyperchrom
