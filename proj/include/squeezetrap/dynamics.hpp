#pragma once

// Classical Hamilton function of the two-mode squeezed state, its exact
// gradient, and the evolution equations in both coordinate charts.

#include <complex>
#include <string>
#include <vector>

#include "squeezetrap/coherent.hpp"
#include "squeezetrap/ode.hpp"
#include "squeezetrap/trap.hpp"

namespace squeezetrap {

struct PhaseState {
  XiEtaState axial;
  XiEtaState radial;
};

struct HamiltonianParams {
  ModeLabels labels_a{0.25, 0};
  ModeLabels labels_r{0.5, 0};  // k_r = (l+1)/2
  int l = 0;                    // axial angular momentum quantum number
  Particle particle;
  TrapGeometry geometry;
  DriveParams drive;
  ModeFrequencies freq;
  // Scale the moments entering the anharmonic averages by the mode lengths
  // lambda_j; off, the averages are taken in dimensionless xi directly.
  bool physical_scales = true;
};

// H = hbar w_r n_r eta_r + 2 hbar w_a n_a eta_a
//     + (2 hbar K_r(t)/(M w_r)) n_r xi_r + (2 hbar K_a(t)/(M w_a)) n_a xi_a
//     - (w_c/2) hbar l + anharmonic averages of the trap kind.
double classical_hamiltonian(const PhaseState& s, double t,
                             const HamiltonianParams& p);

struct Gradient {
  double dxi_a = 0.0;
  double deta_a = 0.0;
  double dxi_r = 0.0;
  double deta_r = 0.0;
};

Gradient gradient(const PhaseState& s, double t, const HamiltonianParams& p);

struct PhaseDeriv {
  XiEtaState axial;
  XiEtaState radial;
};

// Per mode: n xi' = (sigma/hbar) dH/deta, n eta' = -(sigma/hbar) dH/dxi,
// n sigma' = (eta dH/deta - xi dH/dxi)/(2 hbar).
PhaseDeriv eom_rhs(const PhaseState& s, double t, const HamiltonianParams& p);

// Same flow in the disk chart:
// dz/dt = -i [H_xi (1+z)^2 - H_eta (1-z)^2] / (4 n hbar).
// The other mode's xi enters the anharmonic cross terms.
complexd disk_eom_rhs(complexd z, double t, Mode mode,
                      const HamiltonianParams& p, complexd z_other);

struct Trajectory {
  struct Sample {
    double t = 0.0;
    PhaseState state;
    double energy = 0.0;
    double res_a = 0.0;  // sheet residual sigma^2 - xi eta + 1, axial
    double res_r = 0.0;
  };
  std::vector<Sample> samples;
  OdeStatus status = OdeStatus::completed;
  std::string diagnostic;
  int steps = 0;
};

// Adaptive integration of the (xi, eta, sigma) equations; every accepted
// step is renormalized onto the sheet sigma^2 - xi eta + 1 = 0 (a first
// integral of the exact flow) and recorded.  Divergence yields the partial
// trajectory with status = diverged rather than a throw.
Trajectory integrate(const PhaseState& initial, double t0, double t1,
                     const HamiltonianParams& p, double tol = 1e-10);

struct DiskTrajectory {
  struct Sample {
    double t = 0.0;
    complexd z_a;
    complexd z_r;
  };
  std::vector<Sample> samples;
  OdeStatus status = OdeStatus::completed;
  std::string diagnostic;
  int steps = 0;
};

DiskTrajectory integrate_disk(complexd z_a0, complexd z_r0, double t0,
                              double t1, const HamiltonianParams& p,
                              double tol = 1e-10);

}  // namespace squeezetrap
