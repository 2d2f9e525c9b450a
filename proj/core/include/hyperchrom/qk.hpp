#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperchrom {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Law of the number of parts met by a fixed r-set Q of points, in a uniform
// partition of r(a+1) points into a+1 parts of size r.
struct QkDistribution {
  int r = 0;
  std::size_t a = 0;
  // probs[k-1] = q_k for k = 1 .. min(r, a+1); q_k = 0 beyond that.
  std::vector<Rational> probs;

  Rational q(int k) const {
    return k >= 1 && static_cast<std::size_t>(k) <= probs.size() ? probs[k - 1] : Rational(0);
  }
  std::vector<double> to_double() const;
};

// Exact counting. A partition meeting Q in blocks of sizes j_1..j_k is fixed
// by a set partition of Q (r! / (k! prod j_i!) ways), completions of each
// block from the N-r outside points (multinomial), and any partition of the
// rest. After cancelling against the total partition count this becomes
//   q_k = (r!/k!) * sum_{j composition of r into k} prod C(r, j_i)
//         * (a+1)_k / (N)_r,        N = r(a+1),
// with (x)_k the falling factorial. Per-r composition sums are cached.
QkDistribution qk_distribution(int r, std::size_t a);

}  // namespace hyperchrom
