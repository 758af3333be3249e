#pragma once

// Stationary configurations of the classical energy in (xi_a, xi_r): the
// linear system of the combined trap and the quadratic pseudopotential
// system of the ideal Paul trap, solved by direct elimination and by
// multistart Newton respectively.

#include <string>
#include <vector>

#include "squeezetrap/dynamics.hpp"

namespace squeezetrap {

// Coefficients of the stationarity equations, dimensionless:
//   r1 = ca + g4 (16 Q2a xi_a - 96 na nr xi_r)
//           + g6 (48 Q3a xi_a^2 - 240 Q2a Q1r xi_a xi_r + 90 Q1a Q2r xi_r)
//   r2 = cr + g4 (-96 na nr xi_a + 6 Q2r xi_r)
//           + g6 (-120 Q2a Q1r xi_a^2 + 180 Q1a Q2r xi_a xi_r - 15 Q3r xi_r^2)
// The sextic block is kept exactly as displayed upstream of this library,
// including the term linear in xi_r, so reported residuals check the
// displayed equations verbatim.
struct StationaritySystem {
  double ca = 0.0;  // constant of the axial equation
  double cr = 0.0;  // constant of the radial equation
  double g4 = 0.0;  // quartic coupling
  double g6 = 0.0;  // sextic coupling
  double Q1a = 0.0, Q2a = 0.0, Q3a = 0.0;
  double Q1r = 0.0, Q2r = 0.0, Q3r = 0.0;
  double na = 0.0, nr = 0.0;  // k_j + m_j
};

struct ResidualPair {
  double r1 = 0.0;
  double r2 = 0.0;
  double max_abs() const;
};

ResidualPair system_residual(const StationaritySystem& sys, double xi_a,
                             double xi_r);

struct StationaryPoint {
  double xi_a = 0.0;
  double xi_r = 0.0;
  double residual = 0.0;   // max absolute equation residual
  bool admissible = false;  // xi_a > 0 and xi_r > 0
};

enum class StationaryClass { minimum, saddle, maximum, degenerate };

std::string to_string(StationaryClass c);

// Combined trap: harmonic constants at drive time t plus the octupole
// quartic coupling Q A(t) D; the system is linear in (xi_a, xi_r).
StationaritySystem combined_system(double t, const HamiltonianParams& p);
ResidualPair combined_residual(double xi_a, double xi_r, double t,
                               const HamiltonianParams& p);
// Direct elimination; empty when the 2x2 matrix is singular.
std::vector<StationaryPoint> solve_combined(double t,
                                            const HamiltonianParams& p);

// Ideal Paul trap in the pseudopotential approximation: static couplings
// Q C4, Q C6 and elastic constants at the DC component of the drive.
StationaritySystem pseudopotential_system(const HamiltonianParams& p);
ResidualPair pseudopotential_residual(double xi_a, double xi_r,
                                      const HamiltonianParams& p);

struct MultistartOptions {
  double lo = 0.1;
  double hi = 10.0;
  int grid = 4;        // grid x grid log-spaced starting points
  int max_iter = 60;
  double tol = 1e-12;  // Newton convergence on the residual
  double dedup = 1e-8;
  int threads = 0;     // 0: library default
};

struct SolveReport {
  std::vector<StationaryPoint> roots;
  int starts = 0;
  int converged = 0;
  int discarded = 0;  // duplicates and non-converged starts
};

SolveReport solve_system(const StationaritySystem& sys,
                         const MultistartOptions& opts = {});
SolveReport solve_pseudopotential(const HamiltonianParams& p,
                                  const MultistartOptions& opts = {});

// Classification by the true (symmetric) second derivatives of the energy,
// which differ from the Jacobian of the displayed system in the sextic
// block.
StationaryClass classify_stationary(const StationaryPoint& pt,
                                    const HamiltonianParams& p,
                                    double t = 0.0);
StationaryClass classify_system(const StationaritySystem& sys,
                                const StationaryPoint& pt);

}  // namespace squeezetrap
