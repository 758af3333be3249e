#pragma once

// Closed-form expectation values on squeezed states and the two classical
// coordinate charts: the unit-disk variable z and the hyperboloid sheet
// (xi, eta, sigma) with sigma^2 = xi eta - 1.

#include <complex>
#include <stdexcept>

namespace squeezetrap {

using complexd = std::complex<double>;

struct XiEtaState {
  double xi = 1.0;
  double eta = 1.0;
  double sigma = 0.0;
};

struct ModeLabels {
  double k = 0.25;  // Bargmann index
  int m = 0;        // excitation within the representation
};

// xi = |1+z|^2/(1-|z|^2), eta = |1-z|^2/(1-|z|^2), sigma = 2 Im z/(1-|z|^2).
XiEtaState disk_to_xieta(complexd z);

// Inverse chart.  The sheet constraint fixes |sigma| = sqrt(xi eta - 1);
// epsilon = +/-1 selects the sign branch when reconstructing Im z.
// Throws if xi <= 0, eta <= 0 or xi*eta < 1 - tol.
complexd xieta_to_disk(const XiEtaState& s, int epsilon = +1,
                       double tol = 1e-9);

// sigma^2 - xi eta + 1; identically zero on the constraint surface.
double sheet_residual(const XiEtaState& s);

// n-th moment of Omega = 2 K0 + K+ + K- on the basis state |k,m>,
// n in {1,2,3}.  These are the polynomial factors in S_n = xi^n Q_n.
double husimi_Q(int n, const ModeLabels& lab);

// S_n(z) = xi(z)^n Q_n(k,m); closed form for <z,k,m| Omega^n |z,k,m>.
double S_value(int n, complexd z, const ModeLabels& lab);
double S_from_xi(int n, double xi, const ModeLabels& lab);

// <K0 - K1> = (k+m) eta; the kinetic part of a single-mode Hamiltonian.
double kinetic_expectation(complexd z, const ModeLabels& lab);
double kinetic_from_eta(double eta, const ModeLabels& lab);

// Angular averages of the anharmonic polynomials over the two-mode squeezed
// state, expressed through the per-mode moments S_n:
//   <H4> = 8 S2_a - 24 S1_r S1_a + 3 S2_r
//   <H6> = 16 S3_a - 120 S2_a S1_r + 90 S1_a S2_r - 5 S3_r
double h4_average(double S1_a, double S2_a, double S1_r, double S2_r);
double h6_average(double S1_a, double S2_a, double S3_a, double S1_r,
                  double S2_r, double S3_r);

}  // namespace squeezetrap
