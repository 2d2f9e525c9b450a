#include "hyperchrom/validation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/experiment.hpp"
#include "hyperchrom/oracles.hpp"

namespace hyperchrom {

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) return {0, 0, 1};
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  ChiSquareResult out;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    out.statistic += diff * diff / expected;
  }
  out.df = static_cast<int>(counts.size()) - 1;
  out.p_value = boost::math::cdf(
      boost::math::complement(boost::math::chi_squared(out.df), out.statistic));
  return out;
}

BigInt partition_count(std::size_t points, int r) {
  if (points % static_cast<std::size_t>(r) != 0) return 0;
  // (points)! / ((r!)^blocks blocks!), built up one block at a time:
  // each block picks its smallest free point and r-1 companions.
  BigInt count = 1;
  for (std::size_t left = points; left > 0; left -= r) {
    BigInt ways = 1;
    for (int i = 1; i < r; ++i) ways = ways * (left - i) / i;
    count *= ways;
  }
  return count;
}

namespace {

class PartitionWalker {
 public:
  PartitionWalker(std::size_t points, int r,
                  const std::function<void(std::span<const std::uint8_t>)>& visit)
      : r_(r), labels_(points, 0), free_((points == 32 ? 0 : (1u << points)) - 1), visit_(visit) {}

  void run() { open_block(0); }

 private:
  void open_block(std::uint8_t block) {
    if (free_ == 0) {
      visit_(labels_);
      return;
    }
    const int first = std::countr_zero(free_);
    take(first, block);
    choose(first + 1, r_ - 1, block);
    release(first);
  }

  void choose(int from, int remaining, std::uint8_t block) {
    if (remaining == 0) {
      open_block(block + 1);
      return;
    }
    for (int p = from; p < static_cast<int>(labels_.size()); ++p) {
      if (!(free_ & (1u << p))) continue;
      take(p, block);
      choose(p + 1, remaining - 1, block);
      release(p);
    }
  }

  void take(int p, std::uint8_t block) {
    free_ &= ~(1u << p);
    labels_[p] = block;
  }
  void release(int p) { free_ |= 1u << p; }

  int r_;
  std::vector<std::uint8_t> labels_;
  std::uint32_t free_;
  const std::function<void(std::span<const std::uint8_t>)>& visit_;
};

std::uint64_t pack(std::span<const std::uint8_t> labels) {
  std::uint64_t key = 0;
  for (auto l : labels) key = key << 4 | l;
  return key;
}

}  // namespace

void for_each_partition(std::size_t points, int r,
                        const std::function<void(std::span<const std::uint8_t>)>& visit) {
  if (points > 32) throw std::length_error("partition enumeration is limited to 32 points");
  if (r < 1 || points % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument("points must be a multiple of r");
  }
  PartitionWalker(points, r, visit).run();
}

std::vector<std::uint8_t> partition_labels(const PointSystem& ps) {
  std::vector<std::pair<PointId, std::size_t>> firsts;
  for (std::size_t i = 0; i < ps.num_parts(); ++i) {
    auto part = ps.part(i);
    firsts.emplace_back(*std::ranges::min_element(part), i);
  }
  std::ranges::sort(firsts);
  std::vector<std::uint8_t> labels(ps.num_points(), 0);
  for (std::size_t block = 0; block < firsts.size(); ++block) {
    for (PointId p : ps.part(firsts[block].second)) labels[p] = static_cast<std::uint8_t>(block);
  }
  return labels;
}

QkValidation validate_qk(int max_r, std::size_t max_a) {
  if (max_r < 2 || max_r > kQkMaxR || max_a > kQkMaxA) {
    throw std::invalid_argument("validate_qk needs 2 <= max_r <= 5 and max_a <= 4");
  }
  for (int r = 2; r <= max_r; ++r) {
    for (std::size_t a = 0; a <= max_a; ++a) {
      const BigInt total = partition_count(static_cast<std::size_t>(r) * (a + 1), r);
      if (total > kMaxEnumeratedPartitions) {
        throw std::length_error("(r=" + std::to_string(r) + ", a=" + std::to_string(a) + ") has " +
                                total.str() + " partitions, beyond the enumeration budget");
      }
    }
  }
  QkValidation report;
  for (int r = 2; r <= max_r; ++r) {
    for (std::size_t a = 0; a <= max_a; ++a) {
      const std::size_t points = static_cast<std::size_t>(r) * (a + 1);
      const BigInt total = partition_count(points, r);
      std::vector<std::uint64_t> met(r + 1, 0);
      for_each_partition(points, r, [&](std::span<const std::uint8_t> labels) {
        // Q is the first r points; blocks are numbered by smallest point, so
        // the blocks Q meets are exactly 0..max label among Q.
        std::uint8_t top = 0;
        for (int p = 0; p < r; ++p) top = std::max(top, labels[p]);
        ++met[top + 1];
      });

      QkCheck check{r, a, {}, qk_distribution(r, a).probs, true};
      const int kmax = static_cast<int>(std::min<std::size_t>(r, a + 1));
      for (int k = 1; k <= r; ++k) {
        const Rational observed(BigInt(met[k]), total);
        if (k <= kmax) {
          check.enumerated.push_back(observed);
        } else if (met[k] != 0 && check.match) {
          check.match = false;
          report.first_mismatch = "(r=" + std::to_string(r) + ", a=" + std::to_string(a) +
                                  ", k=" + std::to_string(k) + ")";
        }
      }
      for (int k = 1; k <= kmax && check.match; ++k) {
        if (check.enumerated[k - 1] != check.computed[k - 1]) {
          check.match = false;
          report.first_mismatch = "(r=" + std::to_string(r) + ", a=" + std::to_string(a) +
                                  ", k=" + std::to_string(k) + ")";
        }
      }
      report.passed = report.passed && check.match;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

namespace {

UniformityCheck tally(const std::string& mode, const std::map<std::uint64_t, std::size_t>& index,
                      std::uint64_t samples, double threshold,
                      const std::function<std::vector<std::uint8_t>()>& draw) {
  std::vector<std::uint64_t> counts(index.size(), 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto labels = draw();
    const auto it = index.find(pack(labels));
    if (it == index.end()) throw std::logic_error("sampled an invalid partition");
    ++counts[it->second];
  }
  UniformityCheck check;
  check.mode = mode;
  check.cells = counts.size();
  check.samples = samples;
  check.chi = chi_square_uniform(counts);
  const double uniform = 1.0 / static_cast<double>(counts.size());
  for (auto c : counts) {
    check.total_variation +=
        0.5 * std::abs(static_cast<double>(c) / static_cast<double>(samples) - uniform);
  }
  check.passed = counts.size() < 2 || check.chi.p_value > threshold;
  return check;
}

}  // namespace

UniformityValidation validate_uniformity(std::size_t n, std::uint32_t d, int r,
                                         std::uint64_t samples, std::uint64_t seed,
                                         double threshold) {
  const std::size_t points = n * d;
  if (r < 2 || points % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument("r must divide n*d");
  }
  if (points > kUniformityMaxPoints) {
    throw std::invalid_argument("uniformity check is limited to n*d <= 8 points");
  }
  if (samples == 0) throw std::invalid_argument("samples must be positive");

  std::map<std::uint64_t, std::size_t> index;
  for_each_partition(points, r, [&](std::span<const std::uint8_t> labels) {
    index.emplace(pack(labels), index.size());
  });

  UniformityValidation out;
  Rng full_rng(derive_seed(seed, 0));
  out.full_pipeline = tally("full-pipeline", index, samples, threshold, [&] {
    RegularOptions options;
    options.m = 0;
    return partition_labels(sample_regular(n, d, r, full_rng, options).points);
  });

  Rng step_rng(derive_seed(seed, 1));
  const std::size_t start_points = points - r;
  out.single_step = tally("single-step", index, samples, threshold, [&] {
    PointSystem ps(n, r);
    std::vector<PointId> ids;
    for (std::size_t slot = 0; slot < start_points; ++slot) {
      ids.push_back(ps.add_point(static_cast<Vertex>(slot / d), false));
    }
    step_rng.shuffle(std::span<PointId>(ids));
    for (std::size_t i = 0; i < ids.size(); i += r) {
      ps.append_part(std::span<const PointId>(ids).subspan(i, r));
    }
    augment_in_place(ps, d, step_rng);
    return partition_labels(ps);
  });
  out.passed = out.full_pipeline.passed && out.single_step.passed;
  return out;
}

LoopValidation validate_loops(std::size_t n, std::uint32_t d, int r, std::size_t trials,
                              std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  LoopValidation out;
  out.trials = trials;
  out.m = default_multi_edges(n, d, r);
  out.expected_loops = static_cast<double>(out.m) * r * (r - 1) / 2 / static_cast<double>(n);

  std::vector<std::size_t> loops(trials, 0), multis(trials, 0);
  for_each_trial(trials, workers, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const StripResult s = strip(to_hypergraph(sample_multi(n, out.m, r, rng)));
    loops[t] = s.loops_removed;
    multis[t] = s.multiedges_removed;
  });
  for (std::size_t t = 0; t < trials; ++t) {
    out.mean_loops += static_cast<double>(loops[t]);
    out.multiedges_total += multis[t];
  }
  out.mean_loops /= static_cast<double>(trials);
  out.relative_error =
      out.expected_loops > 0 ? std::abs(out.mean_loops - out.expected_loops) / out.expected_loops
                             : 0;
  out.passed = out.relative_error <= 0.15 && out.multiedges_total <= 3;
  return out;
}

std::vector<double> log_grid(double dmin, double dmax, std::size_t steps) {
  if (!(dmin > 0) || !(dmax >= dmin) || steps < 1) {
    throw std::invalid_argument("log grid needs 0 < dmin <= dmax and steps >= 1");
  }
  std::vector<double> grid;
  if (steps == 1) return {dmin};
  // Base 10 so decade grids hit powers of ten exactly.
  const double lo = std::log10(dmin), hi = std::log10(dmax);
  for (std::size_t i = 0; i < steps; ++i) {
    grid.push_back(std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / (steps - 1)));
  }
  grid.front() = dmin;
  grid.back() = dmax;
  return grid;
}

TheoryTable theory_table(int r, double eps, std::span<const double> d_grid) {
  TheoryTable table;
  for (double d : d_grid) {
    if (!(d > 1)) throw std::invalid_argument("grid values must exceed 1");
    table.rows.push_back(theory::theory_report(r, d, eps));
  }
  std::vector<std::size_t> idx(table.rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::ranges::sort(idx, [&](std::size_t a, std::size_t b) { return table.rows[a].d < table.rows[b].d; });
  for (auto it = idx.rbegin(); it != idx.rend() && table.rows[*it].certified; ++it) {
    table.d0 = table.rows[*it].d;
  }
  return table;
}

OracleReport oracle_suite(std::uint64_t seed, std::size_t cases, std::size_t n, int r, double p) {
  if (n < 1 || n > 12) throw std::invalid_argument("oracle suite instances need 1 <= n <= 12");
  OracleReport report;
  auto expect = [&](bool ok, std::size_t c, const std::string& what) {
    ++report.checks;
    if (!ok) {
      ++report.failures;
      report.messages.push_back("case " + std::to_string(c) + ": " + what);
    }
  };

  for (std::size_t c = 0; c < cases; ++c) {
    ++report.cases;
    Rng rng(derive_seed(seed, c));
    const Hypergraph h = sample_binomial(n, p, r, rng);
    const int chi = exact_chromatic(h);
    const std::size_t alpha = exact_alpha(h);

    for (const auto& order : {random_order(n, rng), degree_descending_order(h)}) {
      const Coloring col = greedy_color(h, order);
      expect(is_proper(h, col), c, "greedy coloring improper");
      expect(static_cast<int>(col.colors_used()) >= chi, c, "greedy beat exact_chromatic");
    }

    const auto independent = greedy_independent_set(h, rng);
    expect(is_independent(h, independent), c, "greedy set not independent");
    expect(independent.size() <= alpha, c, "greedy set larger than exact_alpha");

    // Force a few random edges monochromatic, then repair.
    Coloring col = greedy_color(h, random_order(n, rng));
    for (int hits = 0; hits < 2 && h.num_edges() > 0; ++hits) {
      auto edge = h.edge(rng.uniform_below(h.num_edges()));
      for (Vertex v : edge) col.set(v, col[edge.front()]);
    }
    const auto bad = find_bad_edges(h, col);
    try {
      const RepairResult wide = repair(h, col, bad, static_cast<int>(n));
      expect(is_proper(h, wide.coloring), c, "repair with delta = n left the coloring improper");
      const RepairResult tight =
          repair(h, col, bad, static_cast<int>(wide.degeneracy) + 1);
      expect(is_proper(h, tight.coloring), c, "repair with delta = degeneracy + 1 improper");
      expect(tight.uncolored.size() <= bad.size(), c, "|U| exceeds the bad edge count");
    } catch (const RepairError& e) {
      expect(false, c, std::string("repair failed: ") + e.what());
    }

    const StripResult once = strip(h);
    expect(strip(once.hypergraph).hypergraph == once.hypergraph, c, "strip not idempotent");
    const PointSystem multi = sample_multi(n, 2 * n, r, rng);
    const std::uint32_t d = static_cast<std::uint32_t>(r) + 1;
    const PointSystem trimmed = trim(multi, d);
    const PointSystem twice = trim(trimmed, d);
    expect(to_hypergraph(twice) == to_hypergraph(trimmed), c, "trim not idempotent");
    const StripResult multi_once = strip(to_hypergraph(multi));
    expect(strip(multi_once.hypergraph).hypergraph == multi_once.hypergraph, c,
           "strip not idempotent on a multi-hypergraph");
  }
  return report;
}

}  // namespace hyperchrom
