#include "squeezetrap/trap.hpp"

#include <cmath>

#include "squeezetrap/floquet.hpp"

namespace squeezetrap {

double quadrupole_coefficient(double r0, double z0) {
  const double s = r0 * r0 + 2.0 * z0 * z0;
  if (s <= 0.0)
    throw std::invalid_argument("quadrupole_coefficient: degenerate geometry");
  return -1.0 / s;
}

double drive_amplitude(const DriveParams& d, double t) {
  return d.U0 + d.V0 * std::cos(d.Omega * t);
}

ElasticConstants elastic_constants(const Particle& p, const TrapGeometry& g,
                                   const DriveParams& d, double t) {
  const double A = drive_amplitude(d, t);
  const double omega_c = (g.kind == TrapKind::combined) ? p.Q * g.B0 / p.M : 0.0;
  ElasticConstants kc;
  kc.K_a = 4.0 * p.Q * g.c2 * A;
  kc.K_r = p.M * omega_c * omega_c / 4.0 - 2.0 * p.Q * g.c2 * A;
  return kc;
}

double harmonic_polynomial(int k, double rho, double z) {
  if (k < 0) throw std::invalid_argument("harmonic_polynomial: k must be >= 0");
  auto factorial = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  double sum = 0.0;
  const double f2k = factorial(2 * k);
  for (int j = 0; j <= k; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double term = sign * f2k * std::pow(rho, 2 * j) *
                        std::pow(z, 2 * (k - j)) /
                        (std::pow(4.0, j) * factorial(2 * (k - j)) *
                         factorial(j) * factorial(j));
    sum += term;
  }
  return sum;
}

double laplacian_residual(int k, double rho, double z, double h) {
  // Cylindrical Laplacian for an axially symmetric field:
  // f_rr + f_r / rho + f_zz, by centered second differences.
  auto f = [k](double r, double zz) { return harmonic_polynomial(k, r, zz); };
  const double frr =
      (f(rho + h, z) - 2.0 * f(rho, z) + f(rho - h, z)) / (h * h);
  const double fr = (f(rho + h, z) - f(rho - h, z)) / (2.0 * h * rho);
  const double fzz =
      (f(rho, z + h) - 2.0 * f(rho, z) + f(rho, z - h)) / (h * h);
  return frr + fr + fzz;
}

ModeFrequencies derive_frequencies(const Particle& p, const TrapGeometry& g,
                                   const DriveParams& d, double hbar,
                                   double omega_a_override,
                                   double omega_r_override) {
  ModeFrequencies f;
  f.hbar = hbar;
  f.omega_c = (g.kind == TrapKind::combined) ? p.Q * g.B0 / p.M : 0.0;

  auto secular = [&](Mode mode) {
    if (d.V0 != 0.0) {
      if (d.Omega <= 0.0)
        throw std::invalid_argument(
            "derive_frequencies: RF drive requires Omega > 0");
      const MathieuParams mp = mathieu_params(p, g, d, mode);
      const double radicand = mp.a + mp.q * mp.q / 2.0;
      if (radicand <= 0.0)
        throw std::invalid_argument(
            "derive_frequencies: mode is not confining; specify the secular "
            "frequency explicitly");
      return 0.5 * d.Omega * std::sqrt(radicand);
    }
    const ElasticConstants kc = elastic_constants(p, g, d, 0.0);
    const double K = (mode == Mode::axial) ? kc.K_a : kc.K_r;
    if (K <= 0.0)
      throw std::invalid_argument(
          "derive_frequencies: static well is not confining; specify the "
          "secular frequency explicitly");
    return std::sqrt(K / p.M);
  };

  f.omega_a = (omega_a_override > 0.0) ? omega_a_override : secular(Mode::axial);
  f.omega_r = (omega_r_override > 0.0) ? omega_r_override : secular(Mode::radial);
  f.lambda_a = 2.0 * hbar / (p.M * f.omega_a);
  f.lambda_r = 2.0 * hbar / (p.M * f.omega_r);
  return f;
}

}  // namespace squeezetrap
