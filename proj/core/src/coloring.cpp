#include "hyperchrom/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperchrom/theory.hpp"

namespace hyperchrom {

namespace {

// Color blocked for v by edge e: every slot other than v shares one color.
// Returns kUncolored when the edge blocks nothing and `full_loop` when v is
// the only vertex of the edge.
Color blocked_color(std::span<const Vertex> edge, Vertex v, const Coloring& col,
                    bool& full_loop) {
  Color shared = kUncolored;
  bool any_other = false;
  for (Vertex w : edge) {
    if (w == v) continue;
    const Color c = col[w];
    if (c == kUncolored) return kUncolored;
    if (!any_other) {
      shared = c;
      any_other = true;
    } else if (c != shared) {
      return kUncolored;
    }
  }
  full_loop = !any_other;
  return shared;
}

// Smallest color in [first, first + limit) not marked in `stamp` for `mark`.
Color first_free(const std::vector<std::size_t>& stamp, std::size_t mark, Color first,
                 Color limit) {
  for (Color c = first; c < first + limit; ++c) {
    if (static_cast<std::size_t>(c) >= stamp.size() || stamp[c] != mark) return c;
  }
  return kUncolored;
}

}  // namespace

std::vector<Vertex> random_order(std::size_t n, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<Vertex>(order));
  return order;
}

std::vector<Vertex> degree_descending_order(const Hypergraph& h) {
  const auto deg = h.degrees();
  std::vector<Vertex> order(h.n());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::stable_sort(order, [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  return order;
}

Coloring greedy_color(const Hypergraph& h, std::span<const Vertex> order) {
  if (order.size() != h.n()) throw std::invalid_argument("order must list every vertex once");
  const Incidence inc(h);
  Coloring col = Coloring::uncolored(h.n());
  std::vector<std::size_t> stamp;
  std::size_t mark = 0;
  for (Vertex v : order) {
    if (col[v] != kUncolored) throw std::invalid_argument("order repeats a vertex");
    ++mark;
    for (std::size_t e : inc.edges_of(v)) {
      bool full_loop = false;
      const Color c = blocked_color(h.edge(e), v, col, full_loop);
      if (c == kUncolored) continue;
      if (static_cast<std::size_t>(c) >= stamp.size()) stamp.resize(c + 1, 0);
      stamp[c] = mark;
    }
    col.set(v, first_free(stamp, mark, 0, static_cast<Color>(stamp.size()) + 1));
  }
  return col;
}

std::vector<Vertex> greedy_independent_set(const Hypergraph& h, Rng& rng) {
  const Incidence inc(h);
  std::vector<bool> in(h.n(), false);
  for (Vertex v : random_order(h.n(), rng)) {
    const bool completes = std::ranges::any_of(inc.edges_of(v), [&](std::size_t e) {
      return std::ranges::all_of(h.edge(e), [&](Vertex w) { return w == v || in[w]; });
    });
    if (!completes) in[v] = true;
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < h.n(); ++v) {
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<double> profile_thresholds(int r, double d, double eps) {
  const double a = (1 + eps / 2) * theory::predicted_alpha_frac(r, d);
  std::vector<double> kappa(static_cast<std::size_t>(r) + 1, 0.0);
  double binom = 1;
  for (int j = 1; j < r; ++j) {
    binom = binom * (r - j + 1) / j;
    kappa[j] = 10 * d / r * binom * std::pow(a, j);
  }
  return kappa;
}

bool check_profile(const Hypergraph& h, const Coloring& col, std::span<const double> kappa,
                   std::size_t n, double slack) {
  if (kappa.size() < static_cast<std::size_t>(h.r())) {
    throw std::invalid_argument("kappa must cover j = 1..r-1");
  }
  const ClassProfile profile = class_profile(h, col);
  for (const auto& row : profile.counts) {
    for (int j = 1; j < h.r(); ++j) {
      if (static_cast<double>(row[j]) > slack * kappa[j] * static_cast<double>(n)) return false;
    }
  }
  return true;
}

TrackResult transform_and_track(PointSystem ps, const Coloring& coloring, std::uint32_t d,
                                Rng& rng) {
  if (coloring.size() != ps.n() || !coloring.is_total()) {
    throw std::invalid_argument("coloring must be total on the buckets");
  }
  const std::size_t target = ps.n() * d;
  if (ps.live_points() > target || (target - ps.live_points()) % ps.r() != 0) {
    throw std::invalid_argument("deficiency is not a multiple of r");
  }
  if (std::ranges::any_of(ps.occupancy(), [&](std::uint32_t occ) { return occ > d; })) {
    throw std::invalid_argument("a bucket already exceeds d points");
  }

  TrackResult out;
  std::vector<Vertex> edge(ps.r());
  while (ps.live_points() < target) {
    const AugmentOutcome step = augment_in_place(ps, d, rng);
    ++out.steps;
    for (std::size_t i = step.first_created_part; i < ps.num_parts(); ++i) {
      std::ranges::transform(ps.part(i), edge.begin(), [&](PointId p) { return ps.bucket(p); });
      if (is_monochromatic(edge, coloring)) ++out.created_bad;
    }
  }
  out.hypergraph = to_hypergraph(ps);
  out.coloring = coloring;
  out.bad = find_bad_edges(out.hypergraph, coloring);
  return out;
}

RepairResult repair(const Hypergraph& h, const Coloring& col, std::span<const std::size_t> bad,
                    int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  if (col.size() != h.n() || !col.is_total()) {
    throw std::invalid_argument("repair needs a total coloring");
  }
  std::vector<bool> listed(h.num_edges(), false);
  for (std::size_t e : bad) listed.at(e) = true;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (!listed[e] && is_monochromatic(h.edge(e), col)) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " is monochromatic but not listed as bad");
    }
  }

  RepairResult out;
  out.coloring = col;
  if (bad.empty()) return out;

  for (std::size_t e : bad) out.uncolored.push_back(h.edge(e).front());
  std::ranges::sort(out.uncolored);
  out.uncolored.erase(std::unique(out.uncolored.begin(), out.uncolored.end()),
                      out.uncolored.end());

  const Color fresh = col.palette_size();
  for (Vertex v : out.uncolored) out.coloring.clear(v);

  const DegeneracyOrder order = degeneracy_order(h, out.uncolored);
  out.degeneracy = order.degeneracy;

  // Edges leaving U keep an old color on their outside slots, so only edges
  // inside U can turn monochromatic under fresh colors. Uncolored slots never
  // block, which restricts the check to inside edges already recolored.
  const Incidence inc(h);
  std::vector<std::size_t> stamp(static_cast<std::size_t>(fresh) + delta, 0);
  std::size_t mark = 0;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    const Vertex v = *it;
    ++mark;
    for (std::size_t e : inc.edges_of(v)) {
      bool full_loop = false;
      const Color c = blocked_color(h.edge(e), v, out.coloring, full_loop);
      if (full_loop) {
        throw RepairError("vertex " + std::to_string(v) + " lies on a full loop");
      }
      if (c >= fresh) stamp[c] = mark;
    }
    const Color c = first_free(stamp, mark, fresh, delta);
    if (c == kUncolored) {
      throw RepairError("fresh palette of " + std::to_string(delta) +
                        " colors exhausted at vertex " + std::to_string(v) +
                        " (degeneracy of U is " + std::to_string(out.degeneracy) + ")");
    }
    out.coloring.set(v, c);
  }
  return out;
}

}  // namespace hyperchrom
