#include "hyperchrom/qk.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace hyperchrom {

namespace {

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// sum over compositions (j_1..j_k) of `remaining` into `parts` positive parts
// of prod C(r, j_i).
BigInt composition_sum(int r, int remaining, int parts) {
  if (parts == 0) return remaining == 0 ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  for (int j = 1; j <= remaining - (parts - 1); ++j) {
    total += binomial(r, j) * composition_sum(r, remaining - j, parts - 1);
  }
  return total;
}

// coefficients[k-1] = (r!/k!) * composition_sum(r, r, k).
const std::vector<BigInt>& coefficients(int r) {
  static std::shared_mutex mutex;
  static std::map<int, std::vector<BigInt>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  std::vector<BigInt> coeff;
  const BigInt r_fact = factorial(r);
  for (int k = 1; k <= r; ++k) coeff.push_back(r_fact / factorial(k) * composition_sum(r, r, k));
  std::unique_lock lock(mutex);
  return cache.try_emplace(r, std::move(coeff)).first->second;
}

}  // namespace

std::vector<double> QkDistribution::to_double() const {
  std::vector<double> out;
  out.reserve(probs.size());
  for (const auto& q : probs) out.push_back(q.convert_to<double>());
  return out;
}

QkDistribution qk_distribution(int r, std::size_t a) {
  if (r < 1) throw std::invalid_argument("qk_distribution requires r >= 1");
  const auto& coeff = coefficients(r);
  const BigInt parts = BigInt(a) + 1;
  const BigInt points = parts * r;

  BigInt denominator = 1;
  for (int i = 0; i < r; ++i) denominator *= points - i;

  QkDistribution out{r, a, {}};
  const int kmax = static_cast<int>(std::min<std::size_t>(r, a + 1));
  BigInt falling = 1;  // (a+1)_k
  for (int k = 1; k <= kmax; ++k) {
    falling *= parts - (k - 1);
    out.probs.emplace_back(coeff[k - 1] * falling, denominator);
  }
  return out;
}

}  // namespace hyperchrom
