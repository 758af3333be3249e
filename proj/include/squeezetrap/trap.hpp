#pragma once

// Trap electrode model: drive waveform, elastic constants of the quadrupole
// part, axially symmetric harmonic polynomials for the anharmonic terms, and
// the secular mode frequencies used to scale the classical Hamiltonian.

#include <stdexcept>

namespace squeezetrap {

inline constexpr double kHbarSI = 1.054571817e-34;

enum class Mode { axial, radial };

struct Particle {
  double Q = 0.0;  // charge, C
  double M = 0.0;  // mass, kg
};

struct DriveParams {
  double U0 = 0.0;     // static voltage, V
  double V0 = 0.0;     // RF amplitude, V
  double Omega = 0.0;  // RF angular frequency, rad/s
};

enum class TrapKind { combined, ideal_paul };

struct TrapGeometry {
  TrapKind kind = TrapKind::combined;
  double c2 = 0.0;  // quadrupole coefficient, -1/(r0^2 + 2 z0^2) when built
  double D = 0.0;   // octupole coefficient of the combined trap, m^-4
  double C4 = 0.0;  // static quartic coefficient of the ideal Paul trap
  double C6 = 0.0;  // static sextic coefficient of the ideal Paul trap
  double B0 = 0.0;  // axial magnetic field, T (combined trap only)
};

// c2 from electrode radii; the sign convention makes K_a = 4 Q c2 A(t).
double quadrupole_coefficient(double r0, double z0);

// A(t) = U0 + V0 cos(Omega t).
double drive_amplitude(const DriveParams& d, double t);

struct ElasticConstants {
  double K_r = 0.0;
  double K_a = 0.0;
};

// K_r = M omega_c^2/4 - 2 Q c2 A(t), K_a = 4 Q c2 A(t); omega_c = Q B0 / M.
ElasticConstants elastic_constants(const Particle& p, const TrapGeometry& g,
                                   const DriveParams& d, double t);

// Axially symmetric solid harmonic of degree 2k in cylindrical coordinates:
// H_{2k}(rho, z) = sum_j (-1)^j (2k)! rho^{2j} z^{2(k-j)} /
//                  (4^j (2k-2j)! (j!)^2).
double harmonic_polynomial(int k, double rho, double z);

// Second-difference Laplacian of H_{2k} at (rho, z); should vanish up to
// discretization error.
double laplacian_residual(int k, double rho, double z, double h = 1e-4);

struct ModeFrequencies {
  double omega_a = 0.0;   // axial secular frequency
  double omega_r = 0.0;   // radial secular frequency
  double omega_c = 0.0;   // cyclotron frequency Q B0 / M
  double hbar = kHbarSI;
  double lambda_a = 0.0;  // 2 hbar / (M omega_a)
  double lambda_r = 0.0;  // 2 hbar / (M omega_r)
};

// Secular frequencies from the drive: with RF on, the lowest-order
// pseudopotential values omega_j = (Omega/2) sqrt(a_j + q_j^2/2); with RF
// off, the static-well values sqrt(K_j(0)/M).  Explicit overrides win.
// Throws std::invalid_argument when a mode is not confining.
ModeFrequencies derive_frequencies(const Particle& p, const TrapGeometry& g,
                                   const DriveParams& d, double hbar = kHbarSI,
                                   double omega_a_override = 0.0,
                                   double omega_r_override = 0.0);

}  // namespace squeezetrap
