#include "squeezetrap/equilibria.hpp"

#include <algorithm>
#include <cmath>

#include "squeezetrap/parallel.hpp"

namespace squeezetrap {

double ResidualPair::max_abs() const {
  return std::max(std::abs(r1), std::abs(r2));
}

ResidualPair system_residual(const StationaritySystem& sys, double xi_a,
                             double xi_r) {
  ResidualPair r;
  r.r1 = sys.ca +
         sys.g4 * (16.0 * sys.Q2a * xi_a - 96.0 * sys.na * sys.nr * xi_r) +
         sys.g6 * (48.0 * sys.Q3a * xi_a * xi_a -
                   240.0 * sys.Q2a * sys.Q1r * xi_a * xi_r +
                   90.0 * sys.Q1a * sys.Q2r * xi_r);
  r.r2 = sys.cr +
         sys.g4 * (-96.0 * sys.na * sys.nr * xi_a + 6.0 * sys.Q2r * xi_r) +
         sys.g6 * (-120.0 * sys.Q2a * sys.Q1r * xi_a * xi_a +
                   180.0 * sys.Q1a * sys.Q2r * xi_a * xi_r -
                   15.0 * sys.Q3r * xi_r * xi_r);
  return r;
}

namespace {

void system_jacobian(const StationaritySystem& sys, double xi_a, double xi_r,
                     double J[2][2]) {
  J[0][0] = sys.g4 * 16.0 * sys.Q2a +
            sys.g6 * (96.0 * sys.Q3a * xi_a - 240.0 * sys.Q2a * sys.Q1r * xi_r);
  J[0][1] = sys.g4 * (-96.0 * sys.na * sys.nr) +
            sys.g6 * (-240.0 * sys.Q2a * sys.Q1r * xi_a +
                      90.0 * sys.Q1a * sys.Q2r);
  J[1][0] = sys.g4 * (-96.0 * sys.na * sys.nr) +
            sys.g6 * (-240.0 * sys.Q2a * sys.Q1r * xi_a +
                      180.0 * sys.Q1a * sys.Q2r * xi_r);
  J[1][1] = sys.g4 * 6.0 * sys.Q2r +
            sys.g6 * (180.0 * sys.Q1a * sys.Q2r * xi_a -
                      30.0 * sys.Q3r * xi_r);
}

StationaritySystem base_system(const HamiltonianParams& p,
                               const ElasticConstants& kc) {
  StationaritySystem sys;
  const double hbar = p.freq.hbar;
  sys.na = p.labels_a.k + p.labels_a.m;
  sys.nr = p.labels_r.k + p.labels_r.m;
  sys.ca = 2.0 * hbar * kc.K_a * sys.na / (p.particle.M * p.freq.omega_a);
  sys.cr = 2.0 * hbar * kc.K_r * sys.nr / (p.particle.M * p.freq.omega_r);
  sys.Q1a = husimi_Q(1, p.labels_a);
  sys.Q2a = husimi_Q(2, p.labels_a);
  sys.Q3a = husimi_Q(3, p.labels_a);
  sys.Q1r = husimi_Q(1, p.labels_r);
  sys.Q2r = husimi_Q(2, p.labels_r);
  sys.Q3r = husimi_Q(3, p.labels_r);
  return sys;
}

StationaryPoint make_point(const StationaritySystem& sys, double xi_a,
                           double xi_r) {
  StationaryPoint pt;
  pt.xi_a = xi_a;
  pt.xi_r = xi_r;
  pt.residual = system_residual(sys, xi_a, xi_r).max_abs();
  pt.admissible = xi_a > 0.0 && xi_r > 0.0;
  return pt;
}

}  // namespace

std::string to_string(StationaryClass c) {
  switch (c) {
    case StationaryClass::minimum:
      return "minimum";
    case StationaryClass::saddle:
      return "saddle";
    case StationaryClass::maximum:
      return "maximum";
    case StationaryClass::degenerate:
      return "degenerate";
  }
  return "degenerate";
}

StationaritySystem combined_system(double t, const HamiltonianParams& p) {
  StationaritySystem sys = base_system(
      p, elastic_constants(p.particle, p.geometry, p.drive, t));
  sys.g4 = p.particle.Q * drive_amplitude(p.drive, t) * p.geometry.D;
  sys.g6 = 0.0;
  return sys;
}

ResidualPair combined_residual(double xi_a, double xi_r, double t,
                               const HamiltonianParams& p) {
  return system_residual(combined_system(t, p), xi_a, xi_r);
}

std::vector<StationaryPoint> solve_combined(double t,
                                            const HamiltonianParams& p) {
  const StationaritySystem sys = combined_system(t, p);
  // Linear system: J0 * (xi_a, xi_r) = -(ca, cr) with the state-free
  // Jacobian of the quartic block.
  double J[2][2];
  system_jacobian(sys, 0.0, 0.0, J);
  const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  const double scale = std::max({std::abs(J[0][0]), std::abs(J[0][1]),
                                 std::abs(J[1][0]), std::abs(J[1][1])});
  if (scale == 0.0 || std::abs(det) < 1e-14 * scale * scale) return {};
  const double xi_a = (-sys.ca * J[1][1] + sys.cr * J[0][1]) / det;
  const double xi_r = (-sys.cr * J[0][0] + sys.ca * J[1][0]) / det;
  return {make_point(sys, xi_a, xi_r)};
}

StationaritySystem pseudopotential_system(const HamiltonianParams& p) {
  // Static effective description: elastic constants at the DC component of
  // the drive, couplings from the static anharmonic coefficients.
  DriveParams dc = p.drive;
  dc.V0 = 0.0;
  StationaritySystem sys =
      base_system(p, elastic_constants(p.particle, p.geometry, dc, 0.0));
  sys.g4 = p.particle.Q * p.geometry.C4;
  sys.g6 = p.particle.Q * p.geometry.C6;
  return sys;
}

ResidualPair pseudopotential_residual(double xi_a, double xi_r,
                                      const HamiltonianParams& p) {
  return system_residual(pseudopotential_system(p), xi_a, xi_r);
}

SolveReport solve_system(const StationaritySystem& sys,
                         const MultistartOptions& opts) {
  SolveReport rep;
  const int g = std::max(1, opts.grid);
  const int n_starts = g * g;
  rep.starts = n_starts;

  std::vector<double> grid(g);
  for (int i = 0; i < g; ++i) {
    grid[i] = (g == 1) ? opts.lo
                       : opts.lo * std::pow(opts.hi / opts.lo,
                                            static_cast<double>(i) / (g - 1));
  }

  // Convergence is judged relative to the constant terms so the same
  // options work across coefficient scales.
  const double scale = std::max({std::abs(sys.ca), std::abs(sys.cr), 1.0});
  const double conv_tol = opts.tol * scale;

  struct StartResult {
    bool converged = false;
    double xi_a = 0.0, xi_r = 0.0;
  };
  std::vector<StartResult> results(n_starts);

  parallel_index(n_starts, opts.threads, [&](int idx) {
    double xa = grid[idx / g];
    double xr = grid[idx % g];
    StartResult out;
    for (int it = 0; it < opts.max_iter; ++it) {
      const ResidualPair r = system_residual(sys, xa, xr);
      if (!std::isfinite(r.r1) || !std::isfinite(r.r2)) break;
      if (r.max_abs() <= conv_tol) {
        out.converged = true;
        out.xi_a = xa;
        out.xi_r = xr;
        break;
      }
      double J[2][2];
      system_jacobian(sys, xa, xr, J);
      const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
      if (det == 0.0 || !std::isfinite(det)) break;
      xa -= (r.r1 * J[1][1] - r.r2 * J[0][1]) / det;
      xr -= (r.r2 * J[0][0] - r.r1 * J[1][0]) / det;
      if (std::abs(xa) > 1e8 || std::abs(xr) > 1e8) break;
    }
    results[idx] = out;
  });

  for (const StartResult& sr : results) {
    if (!sr.converged) {
      ++rep.discarded;
      continue;
    }
    ++rep.converged;
    bool duplicate = false;
    for (StationaryPoint& existing : rep.roots) {
      const double d = std::hypot(existing.xi_a - sr.xi_a,
                                  existing.xi_r - sr.xi_r);
      if (d < opts.dedup) {
        duplicate = true;
        StationaryPoint candidate = make_point(sys, sr.xi_a, sr.xi_r);
        if (candidate.residual < existing.residual) existing = candidate;
        break;
      }
    }
    if (duplicate) {
      ++rep.discarded;
    } else {
      rep.roots.push_back(make_point(sys, sr.xi_a, sr.xi_r));
    }
  }
  return rep;
}

SolveReport solve_pseudopotential(const HamiltonianParams& p,
                                  const MultistartOptions& opts) {
  return solve_system(pseudopotential_system(p), opts);
}

StationaryClass classify_system(const StationaritySystem& sys,
                                const StationaryPoint& pt) {
  // True second derivatives of the energy; symmetric by construction,
  // unlike the Jacobian of the displayed equations in the sextic block.
  const double Haa =
      sys.g4 * 16.0 * sys.Q2a +
      sys.g6 * (96.0 * sys.Q3a * pt.xi_a -
                240.0 * sys.Q2a * sys.Q1r * pt.xi_r);
  const double Har =
      -24.0 * sys.g4 * sys.Q1a * sys.Q1r +
      sys.g6 * (-240.0 * sys.Q2a * sys.Q1r * pt.xi_a +
                180.0 * sys.Q1a * sys.Q2r * pt.xi_r);
  const double Hrr =
      sys.g4 * 6.0 * sys.Q2r +
      sys.g6 * (180.0 * sys.Q1a * sys.Q2r * pt.xi_a -
                30.0 * sys.Q3r * pt.xi_r);

  const double det = Haa * Hrr - Har * Har;
  const double norm = std::max({std::abs(Haa), std::abs(Har), std::abs(Hrr)});
  if (norm == 0.0 || std::abs(det) <= 1e-10 * norm * norm)
    return StationaryClass::degenerate;
  if (det < 0.0) return StationaryClass::saddle;
  return (Haa + Hrr > 0.0) ? StationaryClass::minimum
                           : StationaryClass::maximum;
}

StationaryClass classify_stationary(const StationaryPoint& pt,
                                    const HamiltonianParams& p, double t) {
  const StationaritySystem sys = (p.geometry.kind == TrapKind::combined)
                                     ? combined_system(t, p)
                                     : pseudopotential_system(p);
  return classify_system(sys, pt);
}

}  // namespace squeezetrap
