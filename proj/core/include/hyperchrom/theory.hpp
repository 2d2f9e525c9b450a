#pragma once

#include <cmath>
#include <stdexcept>

namespace hyperchrom::theory {

// Left side of the z2 equation,
//   z((z+1)^{r-1} - z^{r-1}) / ((z+1)^r - z^r),
// evaluated as t * sum_{i<r-1} t^i / sum_{i<r} t^i with t = z/(z+1), which
// has no cancellation for tiny or huge z. Strictly increasing from 0 toward
// (r-1)/r.
template <typename Real>
Real z2_equation_lhs(int r, const Real& z) {
  const Real t = z / (z + 1);
  Real power = 1, partial = 0;
  for (int i = 0; i < r - 1; ++i) {
    partial += power;
    power *= t;
  }
  const Real full = partial + power;
  return t * partial / full;
}

// Bisection on [0, hi] with hi doubled from 1 until it brackets c; iterates
// until the bracket cannot shrink further in Real's precision, so the
// residual is at the rounding floor (well under 1e-12 for double).
template <typename Real>
Real solve_z2_as(int r, const Real& c) {
  using std::abs;
  if (r < 3) throw std::invalid_argument("solve_z2 requires r >= 3");
  if (!(c > 0) || !(c < Real(r - 1) / r)) {
    throw std::domain_error("c must lie strictly inside (0, (r-1)/r)");
  }
  Real lo = 0, hi = 1;
  int doublings = 0;
  while (z2_equation_lhs(r, hi) < c) {
    if (++doublings > 256) throw std::domain_error("failed to bracket the z2 root");
    lo = hi;
    hi *= 2;
  }
  for (int iter = 0; iter < 4096; ++iter) {
    const Real mid = (lo + hi) / 2;
    if (!(mid > lo) || !(mid < hi)) break;
    if (z2_equation_lhs(r, mid) < c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return abs(z2_equation_lhs(r, lo) - c) <= abs(z2_equation_lhs(r, hi) - c) ? lo : hi;
}

double solve_z2(int r, double c);

// d / (r((z2+1)^r - z2^r)).
double z1_of(int r, double d, double z2);

// Left side of the first-moment condition
//   h(d/r) + h(dc) + h(d(1-c)) - h(c) - h(1-c) - h(d) - (d/r) ln z1 - dc ln z2,
// h(x) = x ln x. Negative values certify alpha < cn w.h.p. Evaluated in
// 50-digit arithmetic and rounded to double.
double first_moment_value(int r, double d, double c);

// ((r-1)d / (r ln d))^{1/(r-1)}; requires d > 1.
double predicted_chi(int r, double d);
// (r ln d / ((r-1)d))^{1/(r-1)}; requires d > 1.
double predicted_alpha_frac(int r, double d);

struct AlphaCertificate {
  double c = 0;
  double fm_value = NAN;
  bool in_range = false;  // false means d is too small for this eps
  bool certified = false;
};

// c = (1+eps) * predicted_alpha_frac(r, d); certified when the condition value
// at c is negative. An out-of-range c is reported, not thrown.
AlphaCertificate certify_alpha_upper(int r, double d, double eps);

struct TheoryReport {
  int r = 0;
  double d = 0;
  double eps = 0;
  double c = 0;
  double z2 = NAN;
  double z1 = NAN;
  double fm_value = NAN;
  bool in_range = false;
  bool certified = false;
  double chi_pred = 0;
  double alpha_frac_pred = 0;
};

TheoryReport theory_report(int r, double d, double eps);

}  // namespace hyperchrom::theory
