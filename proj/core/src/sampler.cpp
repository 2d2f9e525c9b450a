#include "hyperchrom/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "hyperchrom/qk.hpp"

namespace hyperchrom {

PointSystem::PointSystem(std::size_t n, int r) : r_(r), occupancy_(n, 0), arrivals_(n, 0) {
  if (n < 1) throw std::invalid_argument("bucket count n must be at least 1");
  if (r < 2) throw std::invalid_argument("part size r must be at least 2");
}

bool PointSystem::part_is_created(std::size_t i) const {
  return std::ranges::any_of(part(i), [&](PointId p) { return augmented_[p]; });
}

PointId PointSystem::add_point(Vertex b, bool augmented) {
  if (b >= n()) throw std::out_of_range("bucket id out of range");
  if (bucket_.size() >= std::numeric_limits<PointId>::max()) {
    throw std::length_error("point id space exhausted");
  }
  const auto id = static_cast<PointId>(bucket_.size());
  bucket_.push_back(b);
  rank_.push_back(++arrivals_[b]);
  alive_.push_back(true);
  augmented_.push_back(augmented);
  ++occupancy_[b];
  ++live_;
  return id;
}

void PointSystem::kill_point(PointId p) {
  if (!alive_[p]) return;
  alive_[p] = false;
  --occupancy_[bucket_[p]];
  --live_;
  fill_cursor_ = 0;
}

void PointSystem::append_part(std::span<const PointId> points) {
  if (points.size() != static_cast<std::size_t>(r_)) {
    throw std::invalid_argument("part must have exactly r points");
  }
  parts_.insert(parts_.end(), points.begin(), points.end());
}

void PointSystem::remove_part(std::size_t i) {
  const std::size_t last = num_parts() - 1;
  if (i != last) {
    std::copy_n(parts_.begin() + last * r_, r_, parts_.begin() + i * r_);
  }
  parts_.resize(last * r_);
}

void PointSystem::check_invariants() const {
  std::vector<int> membership(num_points(), 0);
  for (PointId p : parts_) {
    if (p >= num_points()) throw std::logic_error("part references unknown point");
    if (!alive_[p]) throw std::logic_error("part holds a dead point");
    ++membership[p];
  }
  std::vector<std::uint32_t> occ(n(), 0);
  for (std::size_t p = 0; p < num_points(); ++p) {
    if (!alive_[p]) continue;
    if (membership[p] != 1) {
      throw std::logic_error("live point " + std::to_string(p) + " is in " +
                             std::to_string(membership[p]) + " parts");
    }
    ++occ[bucket_[p]];
  }
  if (occ != occupancy_) throw std::logic_error("bucket occupancy out of sync");
  if (num_parts() * static_cast<std::size_t>(r_) != live_) {
    throw std::logic_error("part count x r differs from live point count");
  }
}

PointSystem sample_multi(std::size_t n, std::size_t m, int r, Rng& rng) {
  PointSystem ps(n, r);
  const std::size_t total = m * static_cast<std::size_t>(r);
  std::vector<PointId> order(total);
  for (std::size_t i = 0; i < total; ++i) {
    order[i] = ps.add_point(static_cast<Vertex>(rng.uniform_below(n)), false);
  }
  rng.shuffle(std::span<PointId>(order));
  for (std::size_t i = 0; i < m; ++i) {
    ps.append_part(std::span<const PointId>(order).subspan(i * r, r));
  }
  return ps;
}

Hypergraph to_hypergraph(const PointSystem& ps) {
  std::vector<Vertex> slots;
  slots.reserve(ps.num_parts() * ps.r());
  for (std::size_t i = 0; i < ps.num_parts(); ++i) {
    for (PointId p : ps.part(i)) slots.push_back(ps.bucket(p));
  }
  return Hypergraph(ps.r(), ps.n(), std::move(slots));
}

StripResult strip(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  std::vector<bool> keep(m, true);
  StripResult out;
  std::vector<std::size_t> simple;
  for (std::size_t e = 0; e < m; ++e) {
    auto edge = h.edge(e);
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      keep[e] = false;
      ++out.loops_removed;
    } else {
      simple.push_back(e);
    }
  }
  std::ranges::sort(simple, [&](std::size_t a, std::size_t b) {
    auto ea = h.edge(a), eb = h.edge(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  for (std::size_t i = 0; i < simple.size();) {
    std::size_t j = i + 1;
    while (j < simple.size() && std::ranges::equal(h.edge(simple[i]), h.edge(simple[j]))) ++j;
    if (j - i > 1) {
      for (std::size_t k = i; k < j; ++k) keep[simple[k]] = false;
      out.multiedges_removed += j - i;
    }
    i = j;
  }
  std::vector<Vertex> slots;
  slots.reserve((m - out.loops_removed - out.multiedges_removed) * h.r());
  for (std::size_t e = 0; e < m; ++e) {
    if (keep[e]) slots.insert(slots.end(), h.edge(e).begin(), h.edge(e).end());
  }
  out.hypergraph = Hypergraph(h.r(), h.n(), std::move(slots));
  return out;
}

PointSystem trim(PointSystem ps, std::uint32_t d) {
  std::vector<PointId> kept;
  kept.reserve(ps.num_parts() * ps.r());
  std::vector<PointId> doomed;
  for (std::size_t i = 0; i < ps.num_parts(); ++i) {
    auto part = ps.part(i);
    auto& dest = std::ranges::any_of(part, [&](PointId p) { return ps.rank(p) > d; }) ? doomed : kept;
    dest.insert(dest.end(), part.begin(), part.end());
  }
  if (doomed.empty()) return ps;
  for (PointId p : doomed) ps.kill_point(p);
  ps.clear_parts();
  for (std::size_t i = 0; i < kept.size(); i += ps.r()) {
    ps.append_part(std::span<const PointId>(kept).subspan(i, ps.r()));
  }
  return ps;
}

std::size_t deficiency(const PointSystem& ps, std::uint32_t d) {
  std::size_t total = 0;
  for (std::uint32_t occ : ps.occupancy()) total += occ < d ? d - occ : 0;
  return total;
}

namespace {

int draw_k(int r, std::size_t a, Rng& rng) {
  const std::vector<double> q = qk_distribution(r, a).to_double();
  double u = rng.uniform01();
  for (std::size_t k = 0; k + 1 < q.size(); ++k) {
    if (u < q[k]) return static_cast<int>(k) + 1;
    u -= q[k];
  }
  return static_cast<int>(q.size());
}

}  // namespace

AugmentOutcome augment_in_place(PointSystem& ps, std::uint32_t d, Rng& rng) {
  const int r = ps.r();
  const auto first_new = static_cast<PointId>(ps.num_points());

  // Locate the r slots before touching anything so a failure leaves ps intact.
  std::vector<Vertex> targets;
  targets.reserve(r);
  std::size_t cursor = ps.fill_cursor();
  std::uint32_t pending = 0;
  while (targets.size() < static_cast<std::size_t>(r)) {
    if (cursor >= ps.n()) throw std::invalid_argument("fewer than r open bucket slots remain");
    if (ps.occupancy()[cursor] + pending < d) {
      targets.push_back(static_cast<Vertex>(cursor));
      ++pending;
    } else {
      ++cursor;
      pending = 0;
    }
  }
  ps.set_fill_cursor(targets.front());
  for (Vertex b : targets) ps.add_point(b, true);

  const std::size_t a = ps.num_parts();
  const int k = draw_k(r, a, rng);

  std::vector<PointId> free_points;
  free_points.reserve(static_cast<std::size_t>(k) * r);
  for (PointId p = first_new; p < ps.num_points(); ++p) free_points.push_back(p);
  for (int i = 0; i + 1 < k; ++i) {
    const std::size_t victim = rng.uniform_below(ps.num_parts());
    auto part = ps.part(victim);
    free_points.insert(free_points.end(), part.begin(), part.end());
    ps.remove_part(victim);
  }

  std::span<PointId> pool(free_points);
  auto every_block_has_new = [&] {
    for (std::size_t i = 0; i < pool.size(); i += r) {
      if (std::none_of(pool.begin() + i, pool.begin() + i + r,
                       [&](PointId p) { return p >= first_new; })) {
        return false;
      }
    }
    return true;
  };
  do {
    rng.shuffle(pool);
  } while (!every_block_has_new());

  AugmentOutcome out{k, ps.num_parts()};
  for (std::size_t i = 0; i < pool.size(); i += r) ps.append_part(pool.subspan(i, r));
  return out;
}

PointSystem augment_step(PointSystem ps, std::uint32_t d, Rng& rng) {
  const std::size_t def = deficiency(ps, d);
  if (def < static_cast<std::size_t>(ps.r()) || def % ps.r() != 0) {
    throw std::invalid_argument("deficiency " + std::to_string(def) +
                                " is not a positive multiple of r");
  }
  augment_in_place(ps, d, rng);
  return ps;
}

std::size_t default_multi_edges(std::size_t n, std::uint32_t d, int r) {
  const double per_vertex = (d - std::sqrt(static_cast<double>(d)) * std::log(d)) / r;
  if (!(per_vertex > 0)) return 0;
  return static_cast<std::size_t>(std::floor(per_vertex * static_cast<double>(n)));
}

DegreeDiagnostics degree_diagnostics(const PointSystem& before, const PointSystem& after,
                                     std::uint32_t d) {
  if (before.n() != after.n() || before.r() != after.r()) {
    throw std::invalid_argument("point systems have different shapes");
  }
  const std::size_t shared = std::min(before.num_points(), after.num_points());
  if (!std::equal(before.buckets().begin(), before.buckets().begin() + shared,
                  after.buckets().begin())) {
    throw std::invalid_argument("point systems disagree on bucket assignment");
  }
  for (std::size_t p = shared; p < after.num_points(); ++p) {
    if (!after.augmented(static_cast<PointId>(p))) {
      throw std::invalid_argument("after-trim system has points unknown to the original");
    }
  }

  std::vector<std::uint32_t> original(after.n(), 0);
  for (std::size_t p = 0; p < after.num_points(); ++p) {
    const auto id = static_cast<PointId>(p);
    if (after.alive(id) && !after.augmented(id)) ++original[after.bucket(id)];
  }

  const double spread = std::sqrt(static_cast<double>(d)) * std::log(d);
  DegreeDiagnostics diag;
  for (std::size_t b = 0; b < before.n(); ++b) {
    const double in_p = before.occupancy()[b];
    const double in_p_prime = original[b];
    if (in_p_prime <= d - 3 * spread) ++diag.s0;
    if (in_p <= d - 2 * spread) ++diag.s1;
    if (in_p - in_p_prime >= spread) ++diag.s2;
  }
  diag.m = before.num_parts();
  std::size_t surviving = 0;
  for (std::size_t i = 0; i < after.num_parts(); ++i) {
    if (!after.part_is_created(i)) ++surviving;
  }
  diag.parts_trimmed = diag.m - surviving;
  const StripResult stripped = strip(to_hypergraph(before));
  diag.M = stripped.hypergraph.num_edges();
  diag.loops_removed = stripped.loops_removed;
  diag.multiedges_removed = stripped.multiedges_removed;
  return diag;
}

RegularSample sample_regular(std::size_t n, std::uint32_t d, int r, Rng& rng,
                             const RegularOptions& options) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if ((n * d) % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument("r must divide n*d");
  }
  const std::size_t m = options.m.value_or(default_multi_edges(n, d, r));
  PointSystem multi = sample_multi(n, m, r, rng);
  PointSystem ps = trim(multi, d);
  DegreeDiagnostics diag = degree_diagnostics(multi, ps, d);
  while (ps.live_points() < n * d) augment_in_place(ps, d, rng);
  Hypergraph h = to_hypergraph(ps);
  return {std::move(h), diag, std::move(ps)};
}

RegularSample sample_regular_simple(std::size_t n, std::uint32_t d, int r, Rng& rng,
                                    std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    RegularSample s = sample_regular(n, d, r, rng);
    if (is_simple(s.hypergraph)) return s;
  }
  throw std::runtime_error("no simple sample within " + std::to_string(max_attempts) +
                           " attempts");
}

std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    if (out > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(out);
}

namespace {

// Dense requests enumerate all subsets in lexicographic order and keep a
// uniform sample of their ranks; sparse ones reject duplicates.
constexpr std::uint64_t kEnumerateLimit = 20'000'000;

void next_combination(std::vector<Vertex>& comb, std::size_t n) {
  std::size_t i = comb.size();
  while (i-- > 0) {
    if (comb[i] < n - comb.size() + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
      return;
    }
  }
}

}  // namespace

Hypergraph sample_uniform_m(std::size_t n, std::size_t m, int r, Rng& rng) {
  const std::uint64_t total = choose(n, r);
  if (m > total) throw std::invalid_argument("m exceeds C(n, r)");
  std::vector<Vertex> slots;
  slots.reserve(m * r);

  if (2 * static_cast<std::uint64_t>(m) > total && total <= kEnumerateLimit) {
    std::vector<std::uint64_t> ranks(total);
    std::iota(ranks.begin(), ranks.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::swap(ranks[i], ranks[i + rng.uniform_below(total - i)]);
    }
    std::vector<std::uint64_t> chosen(ranks.begin(), ranks.begin() + m);
    std::vector<std::uint64_t> sorted = chosen;
    std::ranges::sort(sorted);
    std::vector<std::vector<Vertex>> subsets(m);
    std::vector<Vertex> comb(r);
    std::iota(comb.begin(), comb.end(), 0);
    std::size_t next = 0;
    for (std::uint64_t rank = 0; next < sorted.size(); ++rank, next_combination(comb, n)) {
      if (rank == sorted[next]) subsets[next++] = comb;
    }
    // Emit in draw order.
    for (std::uint64_t rank : chosen) {
      const auto pos = std::ranges::lower_bound(sorted, rank) - sorted.begin();
      slots.insert(slots.end(), subsets[pos].begin(), subsets[pos].end());
    }
  } else {
    std::set<std::vector<Vertex>> seen;
    std::vector<Vertex> edge(r);
    while (seen.size() < m) {
      for (int i = 0; i < r; ++i) {
        Vertex v;
        do {
          v = static_cast<Vertex>(rng.uniform_below(n));
        } while (std::find(edge.begin(), edge.begin() + i, v) != edge.begin() + i);
        edge[i] = v;
      }
      std::vector<Vertex> key = edge;
      std::ranges::sort(key);
      if (seen.insert(key).second) slots.insert(slots.end(), key.begin(), key.end());
    }
  }
  return Hypergraph(r, n, std::move(slots));
}

Hypergraph sample_binomial(std::size_t n, double p, int r, Rng& rng) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::uint64_t total = choose(n, r);
  std::uint64_t count = 0;
  if (p == 1) {
    count = total;
  } else if (p > 0 && total > 0) {
    std::binomial_distribution<std::uint64_t> bin(total, p);
    count = bin(rng);
  }
  return sample_uniform_m(n, static_cast<std::size_t>(count), r, rng);
}

}  // namespace hyperchrom
