#include "hyperchrom/theory.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hyperchrom::theory {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

Wide xlogx(const Wide& x) { return x * log(x); }

Wide ipow(Wide base, int e) {
  Wide out = 1;
  for (; e > 0; --e) out *= base;
  return out;
}

void require_positive_log(double d) {
  if (!(d > 1)) throw std::domain_error("predictions need d > 1");
}

}  // namespace

double solve_z2(int r, double c) { return solve_z2_as<double>(r, c); }

double z1_of(int r, double d, double z2) {
  if (r < 2 || !(d > 0) || !(z2 >= 0)) throw std::domain_error("z1_of: invalid arguments");
  return d / (r * (std::pow(z2 + 1, r) - std::pow(z2, r)));
}

double first_moment_value(int r, double d, double c) {
  if (!(d >= 2)) throw std::domain_error("first_moment_value requires d >= 2");
  const Wide cw = c;
  const Wide dw = d;
  const Wide z2 = solve_z2_as<Wide>(r, cw);
  const Wide z1 = dw / (r * (ipow(z2 + 1, r) - ipow(z2, r)));
  const Wide value = xlogx(dw / r) + xlogx(dw * cw) + xlogx(dw * (1 - cw)) - xlogx(cw) -
                     xlogx(1 - cw) - xlogx(dw) - (dw / r) * log(z1) - dw * cw * log(z2);
  return value.convert_to<double>();
}

double predicted_chi(int r, double d) {
  require_positive_log(d);
  return std::pow((r - 1) * d / (r * std::log(d)), 1.0 / (r - 1));
}

double predicted_alpha_frac(int r, double d) {
  require_positive_log(d);
  return std::pow(r * std::log(d) / ((r - 1) * d), 1.0 / (r - 1));
}

AlphaCertificate certify_alpha_upper(int r, double d, double eps) {
  if (!(eps > 0)) throw std::domain_error("eps must be positive");
  AlphaCertificate out;
  out.c = (1 + eps) * predicted_alpha_frac(r, d);
  out.in_range = r >= 3 && d >= 2 && out.c > 0 && out.c < static_cast<double>(r - 1) / r;
  if (out.in_range) {
    out.fm_value = first_moment_value(r, d, out.c);
    out.certified = out.fm_value < 0;
  }
  return out;
}

TheoryReport theory_report(int r, double d, double eps) {
  TheoryReport rep;
  rep.r = r;
  rep.d = d;
  rep.eps = eps;
  rep.chi_pred = predicted_chi(r, d);
  rep.alpha_frac_pred = predicted_alpha_frac(r, d);
  const AlphaCertificate cert = certify_alpha_upper(r, d, eps);
  rep.c = cert.c;
  rep.in_range = cert.in_range;
  rep.certified = cert.certified;
  rep.fm_value = cert.fm_value;
  if (cert.in_range) {
    rep.z2 = solve_z2(r, rep.c);
    rep.z1 = z1_of(r, d, rep.z2);
  }
  return rep;
}

}  // namespace hyperchrom::theory
