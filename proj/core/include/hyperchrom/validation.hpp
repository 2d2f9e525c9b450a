#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperchrom/qk.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"

namespace hyperchrom {

// Statistical and exact self-checks behind the `validate`, `oracle` and
// `theory --sweep` commands.

struct ChiSquareResult {
  double statistic = 0;
  int df = 0;
  double p_value = 1;
};

// Goodness of fit of `counts` against equiprobable cells.
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts);

// Number of partitions of `points` labeled points into blocks of size r.
BigInt partition_count(std::size_t points, int r);

// Calls visit(labels) for every partition of `points` labeled points into
// blocks of size r; labels[p] is the block of point p, blocks numbered by
// their smallest point. Throws std::length_error beyond 32 points.
void for_each_partition(std::size_t points, int r,
                        const std::function<void(std::span<const std::uint8_t>)>& visit);

// Canonical labels of a point system's partition (same numbering as above).
std::vector<std::uint8_t> partition_labels(const PointSystem& ps);

struct QkCheck {
  int r = 0;
  std::size_t a = 0;
  std::vector<Rational> enumerated;
  std::vector<Rational> computed;
  bool match = false;
};

struct QkValidation {
  std::vector<QkCheck> checks;
  bool passed = true;
  std::string first_mismatch;  // "(r=.., a=.., k=..)" when a check fails
};

inline constexpr int kQkMaxR = 5;
inline constexpr std::size_t kQkMaxA = 4;
// Enumeration budget per (r, a); (5, 3) and beyond exceed it.
inline constexpr std::uint64_t kMaxEnumeratedPartitions = 50'000'000;

// Compares qk_distribution with full enumeration for 2 <= r <= max_r,
// 0 <= a <= max_a. Throws std::invalid_argument outside the guard and
// std::length_error when a case exceeds the enumeration budget.
QkValidation validate_qk(int max_r, std::size_t max_a);

struct UniformityCheck {
  std::string mode;  // "full-pipeline" or "single-step"
  std::size_t cells = 0;
  std::uint64_t samples = 0;
  ChiSquareResult chi;
  double total_variation = 0;
  bool passed = false;
};

struct UniformityValidation {
  UniformityCheck full_pipeline;
  UniformityCheck single_step;
  bool passed = false;
};

inline constexpr std::size_t kUniformityMaxPoints = 8;
inline constexpr double kChiSquareThreshold = 0.001;

// Tallies final partitions of sample_regular with m = 0, and of a single
// augmentation step from a uniform partition of the first nd - r slots,
// against the uniform law on partitions of nd points. Requires nd <= 8.
UniformityValidation validate_uniformity(std::size_t n, std::uint32_t d, int r,
                                         std::uint64_t samples, std::uint64_t seed,
                                         double threshold = kChiSquareThreshold);

struct LoopValidation {
  std::size_t trials = 0;
  std::size_t m = 0;
  double mean_loops = 0;
  double expected_loops = 0;  // m C(r,2) / n
  double relative_error = 0;
  std::size_t multiedges_total = 0;
  bool passed = false;  // within 15% and at most 3 multi-edge removals
};

// Strip statistics of the multi-hypergraph at m = default_multi_edges(n, d, r).
LoopValidation validate_loops(std::size_t n, std::uint32_t d, int r, std::size_t trials,
                              std::uint64_t seed, unsigned workers = 1);

std::vector<double> log_grid(double dmin, double dmax, std::size_t steps);

struct TheoryTable {
  std::vector<theory::TheoryReport> rows;
  // Smallest grid d certified together with every larger grid point.
  std::optional<double> d0;
};

TheoryTable theory_table(int r, double eps, std::span<const double> d_grid);

struct OracleReport {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
};

// Random binomial instances on n <= 12 vertices checked against the exact
// oracles, plus adversarial repair and strip/trim idempotence.
OracleReport oracle_suite(std::uint64_t seed, std::size_t cases, std::size_t n = 8, int r = 3,
                          double p = 0.25);

}  // namespace hyperchrom
