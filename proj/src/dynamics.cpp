#include "squeezetrap/dynamics.hpp"

#include <cmath>

namespace squeezetrap {

namespace {

struct AnharmonicTerms {
  double g4 = 0.0;  // coupling of <H4>
  double g6 = 0.0;  // coupling of <H6>
};

AnharmonicTerms anharmonic_couplings(double t, const HamiltonianParams& p) {
  AnharmonicTerms a;
  if (p.geometry.kind == TrapKind::combined) {
    a.g4 = p.particle.Q * drive_amplitude(p.drive, t) * p.geometry.D;
  } else {
    a.g4 = p.particle.Q * p.geometry.C4;
    a.g6 = p.particle.Q * p.geometry.C6;
  }
  return a;
}

struct ModeScales {
  double s_a = 1.0;
  double s_r = 1.0;
};

ModeScales mode_scales(const HamiltonianParams& p) {
  ModeScales s;
  if (p.physical_scales) {
    s.s_a = p.freq.lambda_a;
    s.s_r = p.freq.lambda_r;
  }
  return s;
}

}  // namespace

double classical_hamiltonian(const PhaseState& s, double t,
                             const HamiltonianParams& p) {
  const double hbar = p.freq.hbar;
  const double na = p.labels_a.k + p.labels_a.m;
  const double nr = p.labels_r.k + p.labels_r.m;
  const ElasticConstants kc =
      elastic_constants(p.particle, p.geometry, p.drive, t);

  double H = hbar * p.freq.omega_r * nr * s.radial.eta +
             2.0 * hbar * p.freq.omega_a * na * s.axial.eta +
             (2.0 * hbar * kc.K_r / (p.particle.M * p.freq.omega_r)) * nr *
                 s.radial.xi +
             (2.0 * hbar * kc.K_a / (p.particle.M * p.freq.omega_a)) * na *
                 s.axial.xi -
             0.5 * p.freq.omega_c * hbar * p.l;

  const AnharmonicTerms g = anharmonic_couplings(t, p);
  if (g.g4 != 0.0 || g.g6 != 0.0) {
    const ModeScales sc = mode_scales(p);
    const double xa = sc.s_a * s.axial.xi;
    const double xr = sc.s_r * s.radial.xi;
    const double S1a = xa * husimi_Q(1, p.labels_a);
    const double S2a = xa * xa * husimi_Q(2, p.labels_a);
    const double S1r = xr * husimi_Q(1, p.labels_r);
    const double S2r = xr * xr * husimi_Q(2, p.labels_r);
    if (g.g4 != 0.0) H += g.g4 * h4_average(S1a, S2a, S1r, S2r);
    if (g.g6 != 0.0) {
      const double S3a = xa * xa * xa * husimi_Q(3, p.labels_a);
      const double S3r = xr * xr * xr * husimi_Q(3, p.labels_r);
      H += g.g6 * h6_average(S1a, S2a, S3a, S1r, S2r, S3r);
    }
  }
  return H;
}

Gradient gradient(const PhaseState& s, double t, const HamiltonianParams& p) {
  const double hbar = p.freq.hbar;
  const double na = p.labels_a.k + p.labels_a.m;
  const double nr = p.labels_r.k + p.labels_r.m;
  const ElasticConstants kc =
      elastic_constants(p.particle, p.geometry, p.drive, t);

  Gradient g;
  g.deta_a = 2.0 * hbar * p.freq.omega_a * na;
  g.deta_r = hbar * p.freq.omega_r * nr;
  g.dxi_a = 2.0 * hbar * kc.K_a * na / (p.particle.M * p.freq.omega_a);
  g.dxi_r = 2.0 * hbar * kc.K_r * nr / (p.particle.M * p.freq.omega_r);

  const AnharmonicTerms anh = anharmonic_couplings(t, p);
  if (anh.g4 != 0.0 || anh.g6 != 0.0) {
    const ModeScales sc = mode_scales(p);
    const double xa = sc.s_a * s.axial.xi;
    const double xr = sc.s_r * s.radial.xi;
    const double Q1a = husimi_Q(1, p.labels_a);
    const double Q2a = husimi_Q(2, p.labels_a);
    const double Q1r = husimi_Q(1, p.labels_r);
    const double Q2r = husimi_Q(2, p.labels_r);
    if (anh.g4 != 0.0) {
      g.dxi_a += anh.g4 * sc.s_a * (16.0 * Q2a * xa - 24.0 * Q1a * Q1r * xr);
      g.dxi_r += anh.g4 * sc.s_r * (-24.0 * Q1a * Q1r * xa + 6.0 * Q2r * xr);
    }
    if (anh.g6 != 0.0) {
      const double Q3a = husimi_Q(3, p.labels_a);
      const double Q3r = husimi_Q(3, p.labels_r);
      g.dxi_a += anh.g6 * sc.s_a *
                 (48.0 * Q3a * xa * xa - 240.0 * Q2a * Q1r * xa * xr +
                  90.0 * Q1a * Q2r * xr * xr);
      g.dxi_r += anh.g6 * sc.s_r *
                 (-120.0 * Q2a * Q1r * xa * xa + 180.0 * Q1a * Q2r * xa * xr -
                  15.0 * Q3r * xr * xr);
    }
  }
  return g;
}

PhaseDeriv eom_rhs(const PhaseState& s, double t, const HamiltonianParams& p) {
  const Gradient g = gradient(s, t, p);
  const double hbar = p.freq.hbar;
  const double na = p.labels_a.k + p.labels_a.m;
  const double nr = p.labels_r.k + p.labels_r.m;

  PhaseDeriv d;
  d.axial.xi = s.axial.sigma * g.deta_a / (na * hbar);
  d.axial.eta = -s.axial.sigma * g.dxi_a / (na * hbar);
  d.axial.sigma =
      (s.axial.eta * g.deta_a - s.axial.xi * g.dxi_a) / (2.0 * na * hbar);
  d.radial.xi = s.radial.sigma * g.deta_r / (nr * hbar);
  d.radial.eta = -s.radial.sigma * g.dxi_r / (nr * hbar);
  d.radial.sigma =
      (s.radial.eta * g.deta_r - s.radial.xi * g.dxi_r) / (2.0 * nr * hbar);
  return d;
}

complexd disk_eom_rhs(complexd z, double t, Mode mode,
                      const HamiltonianParams& p, complexd z_other) {
  PhaseState s;
  if (mode == Mode::axial) {
    s.axial = disk_to_xieta(z);
    s.radial = disk_to_xieta(z_other);
  } else {
    s.axial = disk_to_xieta(z_other);
    s.radial = disk_to_xieta(z);
  }
  const Gradient g = gradient(s, t, p);
  const double H_xi = (mode == Mode::axial) ? g.dxi_a : g.dxi_r;
  const double H_eta = (mode == Mode::axial) ? g.deta_a : g.deta_r;
  const ModeLabels& lab = (mode == Mode::axial) ? p.labels_a : p.labels_r;
  const double n = lab.k + lab.m;
  const complexd one_plus = 1.0 + z;
  const complexd one_minus = 1.0 - z;
  return complexd(0.0, -1.0) *
         (H_xi * one_plus * one_plus - H_eta * one_minus * one_minus) /
         (4.0 * n * p.freq.hbar);
}

Trajectory integrate(const PhaseState& initial, double t0, double t1,
                     const HamiltonianParams& p, double tol) {
  Trajectory tr;
  std::array<double, 6> y = {initial.axial.xi,  initial.axial.eta,
                             initial.axial.sigma, initial.radial.xi,
                             initial.radial.eta, initial.radial.sigma};

  auto unpack = [](const std::array<double, 6>& v) {
    PhaseState s;
    s.axial = {v[0], v[1], v[2]};
    s.radial = {v[3], v[4], v[5]};
    return s;
  };

  auto rhs = [&](double t, const std::array<double, 6>& v,
                 std::array<double, 6>& dv) {
    const PhaseDeriv d = eom_rhs(unpack(v), t, p);
    dv = {d.axial.xi,  d.axial.eta,  d.axial.sigma,
          d.radial.xi, d.radial.eta, d.radial.sigma};
  };

  auto observe = [&](double t, const std::array<double, 6>& v) {
    const PhaseState s = unpack(v);
    Trajectory::Sample smp;
    smp.t = t;
    smp.state = s;
    smp.energy = classical_hamiltonian(s, t, p);
    smp.res_a = sheet_residual(s.axial);
    smp.res_r = sheet_residual(s.radial);
    tr.samples.push_back(smp);
  };

  auto guard = [](double, const std::array<double, 6>& v) -> std::string {
    if (v[0] + v[1] > 1e12 || v[3] + v[4] > 1e12)
      return "phase-space coordinates exceeded 1e12";
    return {};
  };

  // sigma^2 - xi eta + 1 = 0 is a first integral of the exact flow; Newton
  // projection along the constraint gradient (-eta, -xi, 2 sigma) removes
  // the integrator's slow drift off the sheet.  The gradient norm is bounded
  // below by xi^2 + eta^2 > 0, so the projection is always well posed.
  auto project = [](double& xi, double& eta, double& sigma) {
    for (int it = 0; it < 3; ++it) {
      const double g = sigma * sigma - xi * eta + 1.0;
      if (std::abs(g) <= 1e-15 * (1.0 + sigma * sigma + xi * eta)) break;
      const double lam =
          g / (xi * xi + eta * eta + 4.0 * sigma * sigma);
      const double x0 = xi, e0 = eta;
      xi += lam * e0;
      eta += lam * x0;
      sigma -= 2.0 * lam * sigma;
    }
  };
  auto post = [&](double, std::array<double, 6>& v) {
    project(v[0], v[1], v[2]);
    project(v[3], v[4], v[5]);
    return true;
  };

  const OdeRunInfo info =
      dopri5<6>(rhs, y, t0, t1, tol, tol, observe, guard, post);
  tr.status = info.status;
  tr.diagnostic = info.diagnostic;
  tr.steps = info.accepted;
  return tr;
}

DiskTrajectory integrate_disk(complexd z_a0, complexd z_r0, double t0,
                              double t1, const HamiltonianParams& p,
                              double tol) {
  DiskTrajectory tr;
  std::array<double, 4> y = {z_a0.real(), z_a0.imag(), z_r0.real(),
                             z_r0.imag()};

  auto rhs = [&](double t, const std::array<double, 4>& v,
                 std::array<double, 4>& dv) {
    const complexd za(v[0], v[1]);
    const complexd zr(v[2], v[3]);
    const complexd da = disk_eom_rhs(za, t, Mode::axial, p, zr);
    const complexd dr = disk_eom_rhs(zr, t, Mode::radial, p, za);
    dv = {da.real(), da.imag(), dr.real(), dr.imag()};
  };

  auto observe = [&](double t, const std::array<double, 4>& v) {
    tr.samples.push_back({t, complexd(v[0], v[1]), complexd(v[2], v[3])});
  };

  auto guard = [](double, const std::array<double, 4>& v) -> std::string {
    const double ra = v[0] * v[0] + v[1] * v[1];
    const double rr = v[2] * v[2] + v[3] * v[3];
    if (ra >= 1.0 - 1e-9 || rr >= 1.0 - 1e-9)
      return "disk parameter reached the unit circle";
    return {};
  };

  const OdeRunInfo info = dopri5<4>(rhs, y, t0, t1, tol, tol, observe, guard);
  tr.status = info.status;
  tr.diagnostic = info.diagnostic;
  tr.steps = info.accepted;
  return tr;
}

}  // namespace squeezetrap
