#include "squeezetrap/floquet.hpp"

#include <cmath>
#include <limits>

#include "squeezetrap/ode.hpp"
#include "squeezetrap/parallel.hpp"

namespace squeezetrap {

MathieuParams mathieu_params(const Particle& p, const TrapGeometry& g,
                             const DriveParams& d, Mode mode) {
  if (d.Omega <= 0.0)
    throw std::invalid_argument("mathieu_params: Omega must be > 0");
  const double W2 = d.Omega * d.Omega;
  const double base = p.Q * g.c2 / (p.M * W2);
  MathieuParams mp;
  if (mode == Mode::axial) {
    mp.a = 16.0 * base * d.U0;
    mp.q = -8.0 * base * d.V0;
  } else {
    const double omega_c =
        (g.kind == TrapKind::combined) ? p.Q * g.B0 / p.M : 0.0;
    mp.a = omega_c * omega_c / W2 - 8.0 * base * d.U0;
    mp.q = 4.0 * base * d.V0;
  }
  return mp;
}

MathieuParams mathieu_params(const HamiltonianParams& p, Mode mode) {
  return mathieu_params(p.particle, p.geometry, p.drive, mode);
}

FloquetResult monodromy(const MathieuParams& mp, double Omega, double tol) {
  // Two fundamental columns of u'' + (a - 2q cos 2 tau) u = 0 propagated
  // together: y = (u1, u1', u2, u2').
  std::array<double, 4> y = {1.0, 0.0, 0.0, 1.0};
  auto rhs = [&](double tau, const std::array<double, 4>& v,
                 std::array<double, 4>& dv) {
    const double w = mp.a - 2.0 * mp.q * std::cos(2.0 * tau);
    dv[0] = v[1];
    dv[1] = -w * v[0];
    dv[2] = v[3];
    dv[3] = -w * v[2];
  };
  auto observe = [](double, const std::array<double, 4>&) {};
  auto guard = [](double, const std::array<double, 4>&) -> std::string {
    return {};
  };
  const double pi = std::acos(-1.0);
  const OdeRunInfo info = dopri5<4>(rhs, y, 0.0, pi, tol, tol, observe, guard);
  if (info.status != OdeStatus::completed)
    throw std::runtime_error("monodromy: integration failed: " +
                             info.diagnostic);

  FloquetResult res;
  res.monodromy << y[0], y[2], y[1], y[3];
  const double tr = y[0] + y[3];
  res.stable = std::abs(tr) <= 2.0;
  if (res.stable) {
    const double c = std::clamp(tr / 2.0, -1.0, 1.0);
    res.beta = std::acos(c) / pi;
    res.mu = res.beta * Omega / 2.0;
  } else {
    res.beta = std::numeric_limits<double>::quiet_NaN();
    res.mu = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

double quasienergy(double mu_a, double mu_r, const ModeLabels& labels_a,
                   const ModeLabels& labels_r, int l, double omega_c,
                   double hbar) {
  return 2.0 * hbar *
         (mu_a * (labels_a.k + labels_a.m) + mu_r * (labels_r.k + labels_r.m) -
          omega_c * l / 4.0);
}

double quasienergy(const FloquetResult& axial, const FloquetResult& radial,
                   const ModeLabels& labels_a, const ModeLabels& labels_r,
                   int l, double omega_c, double hbar) {
  if (!axial.stable)
    throw std::domain_error("quasienergy: axial mode is unstable");
  if (!radial.stable)
    throw std::domain_error("quasienergy: radial mode is unstable");
  return quasienergy(axial.mu, radial.mu, labels_a, labels_r, l, omega_c,
                     hbar);
}

namespace {

std::vector<StabilityPoint> scan_impl(const StabilityGrid& grid, double Omega,
                                      int threads, bool serial) {
  const int n = grid.na * grid.nq;
  std::vector<StabilityPoint> out(n);
  auto point = [&](int idx) {
    const int ia = idx / grid.nq;
    const int iq = idx % grid.nq;
    MathieuParams mp;
    mp.a = (grid.na == 1)
               ? grid.a_min
               : grid.a_min + (grid.a_max - grid.a_min) * ia / (grid.na - 1);
    mp.q = (grid.nq == 1)
               ? grid.q_min
               : grid.q_min + (grid.q_max - grid.q_min) * iq / (grid.nq - 1);
    const FloquetResult fr = monodromy(mp, Omega);
    out[idx] = {mp.a, mp.q, fr.stable, fr.beta};
  };
  if (serial) {
    for (int i = 0; i < n; ++i) point(i);
  } else {
    parallel_index(n, threads, point);
  }
  return out;
}

}  // namespace

std::vector<StabilityPoint> stability_scan(const StabilityGrid& grid,
                                           double Omega, int threads) {
  return scan_impl(grid, Omega, threads, false);
}

std::vector<StabilityPoint> stability_scan_serial(const StabilityGrid& grid,
                                                  double Omega) {
  return scan_impl(grid, Omega, 0, true);
}

RiccatiCoefficients riccati_from_params(const HamiltonianParams& p) {
  RiccatiCoefficients rc;
  rc.Omega = p.drive.Omega;
  rc.hbar = p.freq.hbar;

  DriveParams dc = p.drive;
  dc.V0 = 0.0;
  const ElasticConstants k_dc =
      elastic_constants(p.particle, p.geometry, dc, 0.0);
  const ElasticConstants k_full =
      elastic_constants(p.particle, p.geometry, p.drive, 0.0);

  const double hbar = p.freq.hbar;
  rc.axial.A = 2.0 * hbar * p.freq.omega_a;
  rc.axial.B_dc = 2.0 * hbar * k_dc.K_a / (p.particle.M * p.freq.omega_a);
  rc.axial.B_ac =
      2.0 * hbar * (k_full.K_a - k_dc.K_a) / (p.particle.M * p.freq.omega_a);
  rc.radial.A = hbar * p.freq.omega_r;
  rc.radial.B_dc = 2.0 * hbar * k_dc.K_r / (p.particle.M * p.freq.omega_r);
  rc.radial.B_ac =
      2.0 * hbar * (k_full.K_r - k_dc.K_r) / (p.particle.M * p.freq.omega_r);
  return rc;
}

RiccatiCoefficients riccati_from_mathieu(const MathieuParams& axial,
                                         const MathieuParams& radial,
                                         double Omega, double hbar) {
  // A = hbar Omega makes the mode's linear reduction w'' + (A B / (hbar
  // Omega)^2) w = 0 in tau coincide with the Mathieu equation (a, q).
  RiccatiCoefficients rc;
  rc.Omega = Omega;
  rc.hbar = hbar;
  rc.axial = {hbar * Omega, axial.a * hbar * Omega,
              -2.0 * axial.q * hbar * Omega};
  rc.radial = {hbar * Omega, radial.a * hbar * Omega,
               -2.0 * radial.q * hbar * Omega};
  return rc;
}

RiccatiTrajectory riccati_evolve(const RiccatiState& initial,
                                 const RiccatiCoefficients& coeffs, double t0,
                                 double t1, double tol, RiccatiForm form) {
  RiccatiTrajectory tr;
  std::array<double, 6> y = {initial.z_a.real(), initial.z_a.imag(),
                             initial.z_r.real(), initial.z_r.imag(),
                             initial.phi_a,      initial.phi_r};

  auto mode_rhs = [&](const RiccatiModeCoefficients& mc, double t, complexd z,
                      complexd& dz, double& dphi) {
    const double B = mc.B_dc + mc.B_ac * std::cos(coeffs.Omega * t);
    const double A = mc.A;
    const complexd i(0.0, 1.0);
    if (form == RiccatiForm::tdvp) {
      dz = -i / (2.0 * coeffs.hbar) *
           ((A + B) * z + 0.5 * (B - A) * (z * z + 1.0));
    } else {
      dz = -i / (2.0 * coeffs.hbar) *
           (-(A + B) + 0.5 * (A - B) * (z * z + 1.0));
    }
    dphi = (-(A + B) + (A - B) * z.real()) / (2.0 * coeffs.hbar);
  };

  auto rhs = [&](double t, const std::array<double, 6>& v,
                 std::array<double, 6>& dv) {
    complexd dza, dzr;
    double dpa, dpr;
    mode_rhs(coeffs.axial, t, complexd(v[0], v[1]), dza, dpa);
    mode_rhs(coeffs.radial, t, complexd(v[2], v[3]), dzr, dpr);
    dv = {dza.real(), dza.imag(), dzr.real(), dzr.imag(), dpa, dpr};
  };

  auto observe = [&](double t, const std::array<double, 6>& v) {
    RiccatiTrajectory::Sample s;
    s.t = t;
    s.state.z_a = complexd(v[0], v[1]);
    s.state.z_r = complexd(v[2], v[3]);
    s.state.phi_a = v[4];
    s.state.phi_r = v[5];
    tr.samples.push_back(s);
  };

  auto guard = [](double, const std::array<double, 6>& v) -> std::string {
    const double limit = (1.0 - 1e-9) * (1.0 - 1e-9);
    if (v[0] * v[0] + v[1] * v[1] >= limit ||
        v[2] * v[2] + v[3] * v[3] >= limit)
      return "disk parameter reached the unit circle";
    return {};
  };

  const OdeRunInfo info = dopri5<6>(rhs, y, t0, t1, tol, tol, observe, guard);
  tr.status = info.status;
  tr.diagnostic = info.diagnostic;
  tr.steps = info.accepted;
  return tr;
}

complexd riccati_constant_step(complexd z0, complexd a, complexd b, complexd c,
                               double dt) {
  // Moebius action of exp(L dt), L = [[b/2, c], [-a, -b/2]]; L is traceless
  // so exp(L dt) = cosh(w dt) I + sinh(w dt)/w L with w^2 = b^2/4 - a c.
  const complexd w2 = b * b / 4.0 - a * c;
  const complexd w = std::sqrt(w2);
  complexd ch, shw;  // cosh(w dt), sinh(w dt)/w
  if (std::abs(w) * dt < 1e-8) {
    ch = 1.0 + w2 * dt * dt / 2.0;
    shw = dt * (1.0 + w2 * dt * dt / 6.0);
  } else {
    ch = std::cosh(w * dt);
    shw = std::sinh(w * dt) / w;
  }
  const complexd m11 = ch + shw * b / 2.0;
  const complexd m12 = shw * c;
  const complexd m21 = -shw * a;
  const complexd m22 = ch - shw * b / 2.0;
  return (m11 * z0 + m12) / (m21 * z0 + m22);
}

}  // namespace squeezetrap
