#include "hyperchrom/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyperchrom {

namespace {

// Edges bucketed by their largest vertex, so each edge is checked exactly once,
// at the moment its last vertex is decided.
std::vector<std::vector<std::size_t>> edges_by_last_vertex(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> by_last(h.n());
  for (std::size_t e = 0; e < h.num_edges(); ++e) by_last[h.edge(e).back()].push_back(e);
  return by_last;
}

class ChromaticSearch {
 public:
  ChromaticSearch(const Hypergraph& h, int palette)
      : h_(h), palette_(palette), by_last_(edges_by_last_vertex(h)), colors_(h.n(), kUncolored) {}

  bool solve() { return assign(0, 0); }

 private:
  bool assign(Vertex v, int used) {
    if (v == h_.n()) return true;
    // Colors are interchangeable: vertex v never needs a color beyond used.
    const int limit = std::min(palette_, used + 1);
    for (int c = 0; c < limit; ++c) {
      colors_[v] = c;
      if (consistent(v) && assign(v + 1, std::max(used, c + 1))) return true;
    }
    colors_[v] = kUncolored;
    return false;
  }

  bool consistent(Vertex v) const {
    for (std::size_t e : by_last_[v]) {
      auto edge = h_.edge(e);
      if (std::ranges::all_of(edge, [&](Vertex w) { return colors_[w] == colors_[v]; })) {
        return false;
      }
    }
    return true;
  }

  const Hypergraph& h_;
  int palette_;
  std::vector<std::vector<std::size_t>> by_last_;
  std::vector<Color> colors_;
};

class AlphaSearch {
 public:
  explicit AlphaSearch(const Hypergraph& h) : n_(h.n()), by_last_(h.n()) {
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::uint32_t support = 0;
      for (Vertex v : h.edge(e)) support |= 1u << v;
      by_last_[h.edge(e).back()].push_back(support);
    }
  }

  std::size_t solve() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t v, std::uint32_t chosen, std::size_t size) {
    if (size + (n_ - v) <= best_) return;
    if (v == n_) {
      best_ = size;
      return;
    }
    const std::uint32_t with = chosen | (1u << v);
    const bool blocked = std::ranges::any_of(
        by_last_[v], [&](std::uint32_t support) { return (support & ~with) == 0; });
    if (!blocked) search(v + 1, with, size + 1);
    search(v + 1, chosen, size);
  }

  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> by_last_;
  std::size_t best_ = 0;
};

}  // namespace

int exact_chromatic(const Hypergraph& h) {
  if (h.n() > kExactChromaticMaxN) {
    throw std::length_error("exact_chromatic is limited to n <= 14");
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (is_full_loop(h.edge(e))) {
      throw std::domain_error("hypergraph has a full loop; no proper coloring exists");
    }
  }
  for (int k = 1;; ++k) {
    if (ChromaticSearch(h, k).solve()) return k;
  }
}

std::size_t exact_alpha(const Hypergraph& h) {
  if (h.n() > kExactAlphaMaxN) throw std::length_error("exact_alpha is limited to n <= 20");
  return AlphaSearch(h).solve();
}

}  // namespace hyperchrom
