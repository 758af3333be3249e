#include "squeezetrap/verify.hpp"

#include <cmath>
#include <map>
#include <random>

#include "squeezetrap/algebra.hpp"
#include "squeezetrap/dynamics.hpp"
#include "squeezetrap/equilibria.hpp"
#include "squeezetrap/floquet.hpp"
#include "squeezetrap/parallel.hpp"

namespace squeezetrap {

VerifyHooks::VerifyHooks()
    : husimi([](int n, const ModeLabels& lab) { return husimi_Q(n, lab); }) {}

namespace {

struct Sample {
  double k = 0.25;
  int m = 0;
  complexd z;
};

std::vector<Sample> draw_samples(int count, double zmax, unsigned seed) {
  static const double ks[5] = {0.25, 0.75, 0.5, 1.0, 1.5};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Sample> out(count);
  for (Sample& s : out) {
    s.k = ks[rng() % 5];
    s.m = static_cast<int>(rng() % 5);
    const double r = zmax * unit(rng);
    const double th = 2.0 * std::acos(-1.0) * unit(rng);
    s.z = std::polar(r, th);
  }
  return out;
}

const Su11Rep& cached_rep(double k) {
  static std::map<double, Su11Rep> cache;
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, build_rep(k, kDefaultTruncation)).first;
  return it->second;
}

CheckResult make_result(std::string name, double residual, double threshold,
                        std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.threshold = threshold;
  r.passed = residual < threshold && std::isfinite(residual);
  r.detail = std::move(detail);
  return r;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

// Dimensionless combined-trap configuration with mild octupole coupling,
// chosen well inside the stability chart (a_a = 0.1, q_a = 0.2).
HamiltonianParams drift_params() {
  HamiltonianParams p;
  p.labels_a = {0.25, 1};
  p.labels_r = {1.0, 0};
  p.l = 1;
  p.particle = {1.0, 1.0};
  p.geometry.kind = TrapKind::combined;
  p.geometry.c2 = -1.0;
  p.geometry.D = 1e-3;
  const double pi = std::acos(-1.0);
  const double Omega = 2.0 * pi;
  const double beta = p.particle.Q * p.geometry.c2 / (p.particle.M * Omega * Omega);
  p.drive.Omega = Omega;
  p.drive.U0 = 0.1 / (16.0 * beta);
  p.drive.V0 = 0.2 / (-8.0 * beta);
  p.geometry.B0 = 0.8 * Omega * p.particle.M / p.particle.Q;
  p.freq = derive_frequencies(p.particle, p.geometry, p.drive, 1.0);
  p.physical_scales = true;
  return p;
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& filter,
                                          int threads,
                                          const VerifyHooks& hooks) {
  std::vector<CheckResult> out;
  auto selected = [&](const std::string& name) {
    return filter.empty() || name.find(filter) != std::string::npos;
  };
  auto add = [&](CheckResult r) { out.push_back(std::move(r)); };

  if (selected("commutator_residuals")) {
    double worst = 0.0;
    for (double k : {0.25, 0.5, 0.75, 1.0, 1.5, 2.5})
      worst = std::max(worst, commutator_residual(build_rep(k, 64)));
    add(make_result("commutator_residuals", worst, 1e-10,
                    "defining relations on interior blocks, six k values"));
  }

  if (selected("casimir_axial")) {
    double worst = 0.0;
    for (double k : {0.25, 0.75}) {
      const Su11Rep rep = build_rep(k, 64);
      const Eigen::MatrixXcd dev =
          casimir(rep) +
          (3.0 / 16.0) * Eigen::MatrixXcd::Identity(rep.N, rep.N);
      worst = std::max(worst, interior_max_abs(dev));
    }
    add(make_result("casimir_axial", worst, 1e-10,
                    "Casimir equals -3/16 for k in {1/4, 3/4}"));
  }

  if (selected("casimir_radial")) {
    double worst = 0.0;
    for (int l = 0; l <= 4; ++l) {
      const double k = (l + 1) / 2.0;
      const double expected = (l * l - 1) / 4.0;
      const Su11Rep rep = build_rep(k, 64);
      const Eigen::MatrixXcd dev =
          casimir(rep) -
          expected * Eigen::MatrixXcd::Identity(rep.N, rep.N);
      worst = std::max(worst, interior_max_abs(dev));
    }
    add(make_result("casimir_radial", worst, 1e-10,
                    "Casimir equals (l^2-1)/4 for k = (l+1)/2, l = 0..4"));
  }

  if (selected("squeeze_unitarity")) {
    // Columns near the truncation edge are not converged squeezed states,
    // so unitarity is checked on the leading quarter block only.
    const Su11Rep rep = cached_rep(0.25);
    const int nb = rep.N / 4;
    double worst = 0.0;
    for (complexd z : {complexd(0.3, 0.0), complexd(0.1, -0.4),
                       complexd(-0.35, 0.2)}) {
      const Eigen::MatrixXcd U = squeeze_operator(rep, z);
      const Eigen::MatrixXcd dev =
          (U.adjoint() * U - Eigen::MatrixXcd::Identity(rep.N, rep.N))
              .topLeftCorner(nb, nb);
      worst = std::max(worst, dev.cwiseAbs().maxCoeff());
    }
    add(make_result("squeeze_unitarity", worst, 1e-8,
                    "U(z)+ U(z) = 1 on the leading quarter block"));
  }

  if (selected("matrix_elements")) {
    const std::vector<Sample> samples = draw_samples(200, 0.5, 2024);
    for (double k : {0.25, 0.75, 0.5, 1.0, 1.5}) cached_rep(k);  // pre-warm
    std::vector<double> res(samples.size(), 0.0);
    parallel_index(static_cast<int>(samples.size()), threads, [&](int i) {
      const Sample& s = samples[i];
      const Su11Rep& rep = cached_rep(s.k);
      const double n0 = s.k + s.m;
      const double r2 = std::norm(s.z);
      const double denom = 1.0 - r2;
      const complexd ek0 = n0 * (1.0 + r2) / denom;
      const complexd ekp = 2.0 * n0 * std::conj(s.z) / denom;
      const complexd ekm = 2.0 * n0 * s.z / denom;
      const complexd ekin = n0 * disk_to_xieta(s.z).eta;
      const Eigen::VectorXcd psi = squeezed_state(rep, s.z, s.m);
      auto expect = [&](const Eigen::MatrixXcd& X) {
        return psi.dot(X * psi);
      };
      const Eigen::MatrixXcd K1 = op_matrix(rep, Su11Op::K1);
      auto rel = [](complexd got, complexd want) {
        return std::abs(got - want) / std::max(1.0, std::abs(want));
      };
      double worst = rel(expect(rep.K0), ek0);
      worst = std::max(worst, rel(expect(rep.Kplus), ekp));
      worst = std::max(worst, rel(expect(rep.Kminus), ekm));
      worst = std::max(worst, rel(expect(rep.K0 - K1), ekin));
      res[i] = worst;
    });
    add(make_result("matrix_elements", max_of(res), 1e-8,
                    "closed-form <K0>, <K+->, <K0-K1> vs truncated-Fock "
                    "oracle, 200 samples"));
  }

  if (selected("s_oracle_moments")) {
    const std::vector<Sample> samples = draw_samples(200, 0.5, 4711);
    for (double k : {0.25, 0.75, 0.5, 1.0, 1.5}) cached_rep(k);  // pre-warm
    std::vector<double> res(samples.size(), 0.0);
    parallel_index(static_cast<int>(samples.size()), threads, [&](int i) {
      const Sample& s = samples[i];
      const Su11Rep& rep = cached_rep(s.k);
      const ModeLabels lab{s.k, s.m};
      const double xi = disk_to_xieta(s.z).xi;
      const Eigen::MatrixXcd Om = op_matrix(rep, Su11Op::Omega);
      const Eigen::VectorXcd psi = squeezed_state(rep, s.z, s.m);
      Eigen::VectorXcd w = psi;
      double worst = 0.0;
      double xin = 1.0;
      for (int n = 1; n <= 3; ++n) {
        w = Om * w;
        xin *= xi;
        const double closed = xin * hooks.husimi(n, lab);
        const double oracle = psi.dot(w).real();
        worst = std::max(worst,
                         std::abs(closed - oracle) / std::abs(oracle));
      }
      res[i] = worst;
    });
    add(make_result("s_oracle_moments", max_of(res), 1e-8,
                    "S_n = xi^n Q_n vs <Omega^n>, n = 1..3, 200 samples"));
  }

  if (selected("chart_roundtrip")) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const complexd z =
          std::polar(0.9 * unit(rng), 2.0 * std::acos(-1.0) * unit(rng));
      const XiEtaState s = disk_to_xieta(z);
      const complexd back = xieta_to_disk(s, z.imag() >= 0 ? +1 : -1);
      worst = std::max(worst, std::abs(back - z));
      worst = std::max(worst, std::abs(sheet_residual(s)) /
                                  std::max(1.0, s.xi * s.eta));
    }
    add(make_result("chart_roundtrip", worst, 1e-12,
                    "disk -> (xi,eta,sigma) -> disk and sheet constraint"));
  }

  if (selected("harmonic_laplacian")) {
    double worst_scaled = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const double threshold = (k == 1) ? 1e-6 : (k == 2) ? 1e-5 : 1e-4;
      double worst = 0.0;
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
          const double rho = 0.1 + (2.0 - 0.1) * i / 9.0;
          const double z = 0.1 + (2.0 - 0.1) * j / 9.0;
          worst = std::max(worst, std::abs(laplacian_residual(k, rho, z)));
        }
      }
      worst_scaled = std::max(worst_scaled, worst / threshold);
    }
    add(make_result("harmonic_laplacian", worst_scaled, 1.0,
                    "second-difference Laplacian of H_2k, k = 1..3, scaled "
                    "by per-degree thresholds"));
  }

  if (selected("gradient_fd")) {
    HamiltonianParams p;
    p.labels_a = {0.75, 2};
    p.labels_r = {1.5, 1};
    p.l = 2;
    p.particle = {1.0, 1.0};
    p.geometry.kind = TrapKind::ideal_paul;
    p.geometry.c2 = -0.5;
    p.geometry.C4 = 0.02;
    p.geometry.C6 = 0.003;
    p.drive = {1.0, 0.0, 0.0};
    p.freq.hbar = 1.0;
    p.freq.omega_a = 1.3;
    p.freq.omega_r = 0.7;
    p.freq.omega_c = 0.0;
    p.freq.lambda_a = 2.0 / (p.particle.M * p.freq.omega_a);
    p.freq.lambda_r = 2.0 / (p.particle.M * p.freq.omega_r);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.5, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      PhaseState s;
      s.axial = {unit(rng), unit(rng), 0.3};
      s.radial = {unit(rng), unit(rng), -0.2};
      const Gradient g = gradient(s, 0.0, p);
      const double h = 1e-6;
      auto fd = [&](auto set) {
        PhaseState sp = s, sm = s;
        set(sp, h);
        set(sm, -h);
        return (classical_hamiltonian(sp, 0.0, p) -
                classical_hamiltonian(sm, 0.0, p)) /
               (2.0 * h);
      };
      auto rel = [](double a, double b) {
        return std::abs(a - b) / std::max(1.0, std::abs(b));
      };
      worst = std::max(
          worst, rel(fd([](PhaseState& q, double d) { q.axial.xi += d; }),
                     g.dxi_a));
      worst = std::max(
          worst, rel(fd([](PhaseState& q, double d) { q.axial.eta += d; }),
                     g.deta_a));
      worst = std::max(
          worst, rel(fd([](PhaseState& q, double d) { q.radial.xi += d; }),
                     g.dxi_r));
      worst = std::max(
          worst, rel(fd([](PhaseState& q, double d) { q.radial.eta += d; }),
                     g.deta_r));
    }
    add(make_result("gradient_fd", worst, 1e-6,
                    "analytic gradient vs central differences, sextic Paul "
                    "trap, 100 states"));
  }

  if (selected("invariant_drift")) {
    const HamiltonianParams p = drift_params();
    PhaseState s0;
    s0.axial = disk_to_xieta(complexd(0.2, 0.0));
    s0.radial = disk_to_xieta(complexd(0.1, 0.05));
    const double T = 2.0 * std::acos(-1.0) / p.drive.Omega;
    const Trajectory tr = integrate(s0, 0.0, 20.0 * T, p, 1e-10);
    double worst = 1.0;
    if (tr.status == OdeStatus::completed) {
      worst = 0.0;
      for (const Trajectory::Sample& smp : tr.samples)
        worst = std::max({worst, std::abs(smp.res_a), std::abs(smp.res_r)});
    }
    add(make_result("invariant_drift", worst, 1e-8,
                    "sheet constraint along 20 drive periods, octupole "
                    "combined trap"));
  }

  if (selected("mathieu_limit")) {
    double worst = 0.0;
    for (int i = 1; i <= 12; ++i) {
      const double a = 0.97 * i / 12.0;
      const FloquetResult fr = monodromy({a, 0.0});
      worst = std::max(worst, std::abs(fr.beta - std::sqrt(a)) / 1e-8);
    }
    const FloquetResult fr = monodromy({0.0, 0.2});
    const double target = std::sqrt(0.2 * 0.2 / 2.0);
    worst = std::max(worst, (std::abs(fr.beta - target) / target) / 0.05);
    add(make_result("mathieu_limit", worst, 1.0,
                    "beta(a,0) = sqrt(a) and small-q series, scaled by the "
                    "per-limit tolerances"));
  }

  if (selected("monodromy_det")) {
    StabilityGrid grid{-0.5, 1.5, 10, 0.0, 1.2, 10};
    double worst = 0.0;
    for (int ia = 0; ia < grid.na; ++ia) {
      for (int iq = 0; iq < grid.nq; ++iq) {
        MathieuParams mp;
        mp.a = grid.a_min + (grid.a_max - grid.a_min) * ia / (grid.na - 1);
        mp.q = grid.q_min + (grid.q_max - grid.q_min) * iq / (grid.nq - 1);
        const FloquetResult fr = monodromy(mp);
        worst = std::max(worst,
                         std::abs(fr.monodromy.determinant() - 1.0));
      }
    }
    add(make_result("monodromy_det", worst, 1e-10,
                    "Wronskian preservation on a 10x10 (a,q) grid"));
  }

  if (selected("riccati_correspondence")) {
    struct Case {
      MathieuParams mp;
      bool stable;
    };
    const Case cases[] = {{{0.25, 0.10}, true},  {{0.50, 0.30}, true},
                          {{0.05, 0.20}, true},  {{-0.20, 0.10}, false},
                          {{1.00, 0.30}, false}};
    const double pi = std::acos(-1.0);
    double failures = 0.0;
    for (const Case& cs : cases) {
      const FloquetResult fr = monodromy(cs.mp);
      const RiccatiCoefficients rc =
          riccati_from_mathieu(cs.mp, cs.mp, 2.0, 1.0);
      RiccatiState init;
      init.z_a = complexd(0.1, 0.0);
      init.z_r = complexd(0.1, 0.0);
      const RiccatiTrajectory tr =
          riccati_evolve(init, rc, 0.0, 50.0 * pi, 1e-10);
      double zmax = 0.0;
      for (const RiccatiTrajectory::Sample& smp : tr.samples)
        zmax = std::max({zmax, std::abs(smp.state.z_a),
                         std::abs(smp.state.z_r)});
      const bool bounded =
          tr.status == OdeStatus::completed && zmax < 0.999;
      if (fr.stable != cs.stable || bounded != cs.stable) failures += 1.0;
    }
    add(make_result("riccati_correspondence", failures, 0.5,
                    "boundedness of the disk flow matches monodromy "
                    "stability on 5 reference points"));
  }

  return out;
}

}  // namespace squeezetrap
