#include "squeezetrap/coherent.hpp"

#include <cmath>
#include <string>

namespace squeezetrap {

XiEtaState disk_to_xieta(complexd z) {
  const double r2 = std::norm(z);
  if (r2 >= 1.0)
    throw std::invalid_argument("disk_to_xieta: |z| must be < 1");
  const double denom = 1.0 - r2;
  XiEtaState s;
  s.xi = std::norm(1.0 + z) / denom;
  s.eta = std::norm(1.0 - z) / denom;
  s.sigma = 2.0 * z.imag() / denom;
  return s;
}

complexd xieta_to_disk(const XiEtaState& s, int epsilon, double tol) {
  if (s.xi <= 0.0 || s.eta <= 0.0)
    throw std::invalid_argument("xieta_to_disk: xi and eta must be > 0");
  const double prod = s.xi * s.eta;
  if (prod < 1.0 - tol)
    throw std::invalid_argument("xieta_to_disk: xi*eta < 1 is off the sheet");
  // xi + eta + 2 = 4/(1-|z|^2), xi - eta = 4 Re z/(1-|z|^2).
  const double denom = s.xi + s.eta + 2.0;
  const double re = (s.xi - s.eta) / denom;
  const double abs_sigma = std::sqrt(std::max(0.0, prod - 1.0));
  const double im = 2.0 * (epsilon >= 0 ? abs_sigma : -abs_sigma) / denom;
  return complexd(re, im);
}

double sheet_residual(const XiEtaState& s) {
  return s.sigma * s.sigma - s.xi * s.eta + 1.0;
}

double husimi_Q(int n, const ModeLabels& lab) {
  const double k = lab.k;
  const double m = lab.m;
  switch (n) {
    case 1:
      return 2.0 * (k + m);
    case 2:
      return 2.0 * k * (2.0 * k + 1.0) + 12.0 * k * m + 6.0 * m * m;
    case 3:
      // Third moment of 2K0 + K+ + K- on |k,m>: with n0 = k+m,
      // b = m(2k+m-1), c = (m+1)(2k+m) the six zero-weight words sum to
      // 8 n0^3 + 2b(3 n0 - 1) + 2c(3 n0 + 1).
      return 4.0 * k * (k + 1.0) * (2.0 * k + 1.0) +
             4.0 * k * m * (3.0 + 12.0 * k) + 60.0 * k * m * m +
             20.0 * m * m * m + 4.0 * m;
    default:
      throw std::invalid_argument("husimi_Q: n must be 1, 2 or 3");
  }
}

double S_value(int n, complexd z, const ModeLabels& lab) {
  return S_from_xi(n, disk_to_xieta(z).xi, lab);
}

double S_from_xi(int n, double xi, const ModeLabels& lab) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= xi;
  return p * husimi_Q(n, lab);
}

double kinetic_expectation(complexd z, const ModeLabels& lab) {
  return kinetic_from_eta(disk_to_xieta(z).eta, lab);
}

double kinetic_from_eta(double eta, const ModeLabels& lab) {
  return (lab.k + lab.m) * eta;
}

double h4_average(double S1_a, double S2_a, double S1_r, double S2_r) {
  return 8.0 * S2_a - 24.0 * S1_r * S1_a + 3.0 * S2_r;
}

double h6_average(double S1_a, double S2_a, double S3_a, double S1_r,
                  double S2_r, double S3_r) {
  return 16.0 * S3_a - 120.0 * S2_a * S1_r + 90.0 * S1_a * S2_r - 5.0 * S3_r;
}

}  // namespace squeezetrap
