#pragma once

// Hill/Mathieu stability of the harmonic dynamics, Floquet exponents,
// quasienergy spectrum, and the Riccati evolution of the disk parameter
// and phase of each mode.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "squeezetrap/dynamics.hpp"

namespace squeezetrap {

struct MathieuParams {
  double a = 0.0;
  double q = 0.0;
};

// With tau = Omega t / 2, M u'' + K_j(t) u = 0 becomes
// u'' + (a - 2q cos 2 tau) u = 0 with
//   a_a = 16 Q c2 U0 / (M Omega^2),            q_a = -8 Q c2 V0 / (M Omega^2)
//   a_r = w_c^2/Omega^2 - 8 Q c2 U0/(M Omega^2), q_r = 4 Q c2 V0 / (M Omega^2)
MathieuParams mathieu_params(const Particle& p, const TrapGeometry& g,
                             const DriveParams& d, Mode mode);
MathieuParams mathieu_params(const HamiltonianParams& p, Mode mode);

struct FloquetResult {
  Eigen::Matrix2d monodromy;
  bool stable = false;
  double beta = 0.0;  // characteristic exponent in [0, 1]; NaN when unstable
  double mu = 0.0;    // beta * Omega / 2; NaN when unstable
};

// Fundamental matrix of u'' + (a - 2q cos 2 tau) u = 0 over tau in [0, pi]
// from identity initial data; stable iff |trace| <= 2.
FloquetResult monodromy(const MathieuParams& mp, double Omega = 2.0,
                        double tol = 1e-12);

// E = 2 hbar [mu_a (k_a + m_a) + mu_r (k_r + m_r) - w_c l / 4].
double quasienergy(double mu_a, double mu_r, const ModeLabels& labels_a,
                   const ModeLabels& labels_r, int l, double omega_c,
                   double hbar);
// Checked form; throws std::domain_error when either mode is unstable.
double quasienergy(const FloquetResult& axial, const FloquetResult& radial,
                   const ModeLabels& labels_a, const ModeLabels& labels_r,
                   int l, double omega_c, double hbar);

struct StabilityPoint {
  double a = 0.0;
  double q = 0.0;
  bool stable = false;
  double beta = 0.0;  // NaN when unstable
};

struct StabilityGrid {
  double a_min = 0.0, a_max = 1.0;
  int na = 50;
  double q_min = 0.0, q_max = 1.0;
  int nq = 50;
};

// Row-major over (a, q), q fastest.  threads <= 0 uses the library default.
std::vector<StabilityPoint> stability_scan(const StabilityGrid& grid,
                                           double Omega = 2.0,
                                           int threads = 0);
std::vector<StabilityPoint> stability_scan_serial(const StabilityGrid& grid,
                                                  double Omega = 2.0);

// Per-mode coefficients of the harmonic classical Hamiltonian,
// H_j / n_j = A_j eta_j + B_j(t) xi_j with B_j(t) = B_dc + B_ac cos(Omega t):
//   A_a = 2 hbar w_a, B_a(t) = 2 hbar K_a(t) / (M w_a)
//   A_r = hbar w_r,   B_r(t) = 2 hbar K_r(t) / (M w_r)
struct RiccatiModeCoefficients {
  double A = 0.0;
  double B_dc = 0.0;
  double B_ac = 0.0;
};

struct RiccatiCoefficients {
  RiccatiModeCoefficients axial;
  RiccatiModeCoefficients radial;
  double Omega = 0.0;
  double hbar = kHbarSI;
};

RiccatiCoefficients riccati_from_params(const HamiltonianParams& p);
// Gauge with A = hbar Omega, B_dc = a hbar Omega, B_ac = -2 q hbar Omega,
// for which the mode reduces exactly to the Mathieu equation (a, q).
RiccatiCoefficients riccati_from_mathieu(const MathieuParams& axial,
                                         const MathieuParams& radial,
                                         double Omega, double hbar = 1.0);

// tdvp: dz/dt = -(i/2hbar) [(A+B)z + ((B-A)/2)(z^2+1)], the disk flow of
// the harmonic Hamiltonian.  constant_term drops the linear term in favor
// of a constant one and is kept only for comparison:
// dz/dt = -(i/2hbar) [-(A+B) + ((A-B)/2)(z^2+1)].
enum class RiccatiForm { tdvp, constant_term };

struct RiccatiState {
  complexd z_a;
  complexd z_r;
  double phi_a = 0.0;
  double phi_r = 0.0;
};

struct RiccatiTrajectory {
  struct Sample {
    double t = 0.0;
    RiccatiState state;
  };
  std::vector<Sample> samples;
  OdeStatus status = OdeStatus::completed;
  std::string diagnostic;
  int steps = 0;
};

// Phases obey dphi/dt = [-(A+B) + (A-B) Re z] / (2 hbar).
RiccatiTrajectory riccati_evolve(const RiccatiState& initial,
                                 const RiccatiCoefficients& coeffs, double t0,
                                 double t1, double tol = 1e-10,
                                 RiccatiForm form = RiccatiForm::tdvp);

// Closed-form Moebius step for dz/dt = az^2 + bz + c with constant
// coefficients; used as the constant-coefficient oracle.
complexd riccati_constant_step(complexd z0, complexd a, complexd b, complexd c,
                               double dt);

}  // namespace squeezetrap
