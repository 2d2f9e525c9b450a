#include "hyperchrom/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace hyperchrom {

Hypergraph::Hypergraph(int r, std::size_t n) : Hypergraph(r, n, std::vector<Vertex>{}) {}

Hypergraph::Hypergraph(int r, std::size_t n, std::vector<Vertex> slots)
    : r_(r), n_(n), slots_(std::move(slots)) {
  if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
  if (n < 1) throw std::invalid_argument("vertex count n must be at least 1");
  if (slots_.size() % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument("slot count is not a multiple of r");
  }
  for (Vertex v : slots_) {
    if (v >= n) {
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(n) + ")");
    }
  }
  for (auto it = slots_.begin(); it != slots_.end(); it += r) std::sort(it, it + r);
}

Hypergraph::Hypergraph(int r, std::size_t n,
                       std::initializer_list<std::initializer_list<Vertex>> edges)
    : Hypergraph(r, n, [&] {
        std::vector<Vertex> slots;
        for (const auto& e : edges) {
          if (e.size() != static_cast<std::size_t>(r)) {
            throw std::invalid_argument("edge does not have exactly r entries");
          }
          slots.insert(slots.end(), e.begin(), e.end());
        }
        return slots;
      }()) {}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (Vertex v : slots_) ++deg[v];
  return deg;
}

bool is_full_loop(std::span<const Vertex> edge) noexcept {
  return !edge.empty() && edge.front() == edge.back();
}

bool is_simple(const Hypergraph& h) {
  std::vector<std::size_t> idx(h.num_edges());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i : idx) {
    auto e = h.edge(i);
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
  }
  auto less = [&](std::size_t a, std::size_t b) {
    auto ea = h.edge(a), eb = h.edge(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (std::ranges::equal(h.edge(idx[i - 1]), h.edge(idx[i]))) return false;
  }
  return true;
}

Incidence::Incidence(const Hypergraph& h) : offsets_(h.n() + 1, 0) {
  const std::size_t m = h.num_edges();
  // Edges are sorted, so distinct vertices are the starts of runs.
  for (std::size_t e = 0; e < m; ++e) {
    auto edge = h.edge(e);
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k == 0 || edge[k] != edge[k - 1]) ++offsets_[edge[k] + 1];
    }
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  edge_ids_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < m; ++e) {
    auto edge = h.edge(e);
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k == 0 || edge[k] != edge[k - 1]) edge_ids_[fill[edge[k]]++] = e;
    }
  }
}

Coloring::Coloring(std::vector<Color> assignment) : assignment_(std::move(assignment)) {
  for (Color c : assignment_) {
    if (c < kUncolored) throw std::invalid_argument("negative color id");
    palette_size_ = std::max(palette_size_, c + 1);
  }
}

Coloring::Coloring(std::vector<Color> assignment, Color palette_size)
    : assignment_(std::move(assignment)), palette_size_(palette_size) {
  if (palette_size < 0) throw std::invalid_argument("negative palette size");
  for (Color c : assignment_) {
    if (c < kUncolored || c >= palette_size) {
      throw std::invalid_argument("color id outside [0, palette_size)");
    }
  }
}

bool Coloring::is_total() const noexcept {
  return std::ranges::none_of(assignment_, [](Color c) { return c == kUncolored; });
}

std::vector<Vertex> Coloring::uncolored_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == kUncolored) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t Coloring::colors_used() const {
  std::vector<bool> seen(static_cast<std::size_t>(palette_size_), false);
  std::size_t used = 0;
  for (Color c : assignment_) {
    if (c != kUncolored && !seen[c]) {
      seen[c] = true;
      ++used;
    }
  }
  return used;
}

void Coloring::set(Vertex v, Color c) {
  if (c < 0) throw std::invalid_argument("use clear() to uncolor a vertex");
  assignment_.at(v) = c;
  palette_size_ = std::max(palette_size_, c + 1);
}

bool is_monochromatic(std::span<const Vertex> edge, const Coloring& col) noexcept {
  const Color first = col[edge.front()];
  if (first == kUncolored) return false;
  for (Vertex v : edge.subspan(1)) {
    if (col[v] != first) return false;
  }
  return true;
}

namespace {

void require_total(const Hypergraph& h, const Coloring& col) {
  if (col.size() != h.n()) throw std::invalid_argument("coloring size differs from n");
  if (!col.is_total()) throw std::invalid_argument("coloring leaves vertices uncolored");
}

}  // namespace

bool is_proper(const Hypergraph& h, const Coloring& col) {
  require_total(h, col);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (is_monochromatic(h.edge(e), col)) return false;
  }
  return true;
}

bool is_independent(const Hypergraph& h, std::span<const Vertex> set) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : set) in.at(v) = true;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (std::ranges::all_of(h.edge(e), [&](Vertex v) { return in[v]; })) return false;
  }
  return true;
}

ClassProfile class_profile(const Hypergraph& h, const Coloring& col) {
  require_total(h, col);
  ClassProfile p;
  p.r = h.r();
  p.counts.assign(static_cast<std::size_t>(col.palette_size()),
                  std::vector<std::size_t>(static_cast<std::size_t>(h.r()) + 1, 0));
  std::vector<Color> classes;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    classes.clear();
    for (Vertex v : h.edge(e)) classes.push_back(col[v]);
    std::ranges::sort(classes);
    if (classes.front() == classes.back()) {
      ++p.bad;
      continue;
    }
    for (std::size_t i = 0; i < classes.size();) {
      std::size_t j = i;
      while (j < classes.size() && classes[j] == classes[i]) ++j;
      ++p.counts[classes[i]][j - i];
      i = j;
    }
  }
  return p;
}

std::vector<std::size_t> find_bad_edges(const Hypergraph& h, const Coloring& col) {
  if (col.size() != h.n()) throw std::invalid_argument("coloring size differs from n");
  std::vector<std::size_t> bad;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (is_monochromatic(h.edge(e), col)) bad.push_back(e);
  }
  return bad;
}

DegeneracyOrder degeneracy_order(const Hypergraph& h, std::span<const Vertex> set) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : set) in.at(v) = true;

  const Incidence inc(h);
  std::vector<bool> edge_alive(h.num_edges(), false);
  std::vector<std::size_t> deg(h.n(), 0);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    if (!std::ranges::all_of(edge, [&](Vertex v) { return in[v]; })) continue;
    edge_alive[e] = true;
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k == 0 || edge[k] != edge[k - 1]) ++deg[edge[k]];
    }
  }

  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < h.n(); ++v) {
    if (in[v]) queue.emplace(deg[v], static_cast<Vertex>(v));
  }

  DegeneracyOrder out;
  out.order.reserve(queue.size());
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    in[v] = false;
    out.order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    for (std::size_t e : inc.edges_of(v)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = false;
      auto edge = h.edge(e);
      for (std::size_t k = 0; k < edge.size(); ++k) {
        const Vertex w = edge[k];
        if (w == v || (k > 0 && edge[k - 1] == w)) continue;
        queue.erase({deg[w], w});
        queue.emplace(--deg[w], w);
      }
    }
  }
  return out;
}

}  // namespace hyperchrom
