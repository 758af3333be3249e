#include <doctest.h>

#include <cmath>

#include "squeezetrap/floquet.hpp"
#include "squeezetrap/trap.hpp"

using namespace squeezetrap;

TEST_CASE("quadrupole coefficient from electrode radii") {
  CHECK(quadrupole_coefficient(1.0, 1.0) == doctest::Approx(-1.0 / 3.0));
  CHECK(quadrupole_coefficient(2.0, 0.0) == -0.25);
  CHECK_THROWS_AS((void)quadrupole_coefficient(0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("drive amplitude waveform") {
  const DriveParams d{2.0, 3.0, 5.0};
  CHECK(drive_amplitude(d, 0.0) == 5.0);
  const double pi = std::acos(-1.0);
  CHECK(drive_amplitude(d, pi / 5.0) == doctest::Approx(-1.0));
}

TEST_CASE("elastic constants and the field-free relation") {
  Particle p{1.6e-19, 6.6e-26};
  TrapGeometry g;
  g.kind = TrapKind::combined;
  g.c2 = quadrupole_coefficient(3e-3, 2.5e-3);
  g.B0 = 0.0;
  const DriveParams d{5.0, 100.0, 2.0 * std::acos(-1.0) * 1e6};
  for (double t : {0.0, 1.3e-7, 4.9e-7}) {
    const ElasticConstants kc = elastic_constants(p, g, d, t);
    CHECK(kc.K_a == -2.0 * kc.K_r);
  }
  g.B0 = 1.0;
  const double omega_c = p.Q * g.B0 / p.M;
  const ElasticConstants kc = elastic_constants(p, g, d, 0.0);
  CHECK(kc.K_a == 4.0 * p.Q * g.c2 * (d.U0 + d.V0));
  CHECK(kc.K_r == doctest::Approx(p.M * omega_c * omega_c / 4.0 -
                                  2.0 * p.Q * g.c2 * (d.U0 + d.V0)));
  // The Paul branch ignores the magnetic field.
  g.kind = TrapKind::ideal_paul;
  const ElasticConstants kp = elastic_constants(p, g, d, 0.0);
  CHECK(kp.K_a == -2.0 * kp.K_r);
}

TEST_CASE("axially symmetric harmonic polynomials in closed form") {
  for (double rho : {0.2, 0.7, 1.3}) {
    for (double z : {0.1, 0.9, 1.8}) {
      CHECK(harmonic_polynomial(0, rho, z) == 1.0);
      CHECK(harmonic_polynomial(1, rho, z) ==
            doctest::Approx(0.5 * (2.0 * z * z - rho * rho))
                .epsilon(1e-14));
      CHECK(harmonic_polynomial(2, rho, z) ==
            doctest::Approx(
                (8.0 * std::pow(z, 4) - 24.0 * z * z * rho * rho +
                 3.0 * std::pow(rho, 4)) /
                8.0)
                .epsilon(1e-14));
      CHECK(harmonic_polynomial(3, rho, z) ==
            doctest::Approx(
                (16.0 * std::pow(z, 6) - 120.0 * std::pow(z, 4) * rho * rho +
                 90.0 * z * z * std::pow(rho, 4) - 5.0 * std::pow(rho, 6)) /
                16.0)
                .epsilon(1e-14));
    }
  }
}

TEST_CASE("harmonic polynomials are harmonic") {
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
    CAPTURE(k);
    CHECK(worst < threshold);
  }
}

TEST_CASE("secular frequencies with RF drive") {
  Particle p{1.0, 1.0};
  TrapGeometry g;
  g.kind = TrapKind::combined;
  g.c2 = -1.0;
  g.B0 = 0.0;
  const double pi = std::acos(-1.0);
  DriveParams d;
  d.Omega = 2.0 * pi;
  const double base = p.Q * g.c2 / (p.M * d.Omega * d.Omega);
  d.U0 = 0.1 / (16.0 * base);   // a_a = 0.1
  d.V0 = 0.2 / (-8.0 * base);   // q_a = 0.2
  g.B0 = 0.8 * d.Omega;

  const ModeFrequencies f = derive_frequencies(p, g, d, 1.0);
  const MathieuParams ma = mathieu_params(p, g, d, Mode::axial);
  const MathieuParams mr = mathieu_params(p, g, d, Mode::radial);
  CHECK(f.omega_a ==
        doctest::Approx(0.5 * d.Omega * std::sqrt(ma.a + ma.q * ma.q / 2.0)));
  CHECK(f.omega_r ==
        doctest::Approx(0.5 * d.Omega * std::sqrt(mr.a + mr.q * mr.q / 2.0)));
  CHECK(f.omega_c == doctest::Approx(0.8 * d.Omega));
  CHECK(f.lambda_a == doctest::Approx(2.0 / f.omega_a));
  CHECK(f.hbar == 1.0);
}

TEST_CASE("secular frequencies from a static well") {
  Particle p{1.0, 1.0};
  TrapGeometry g;
  g.kind = TrapKind::combined;
  g.c2 = -1.0;
  g.B0 = 2.0;
  const DriveParams d{-0.25, 0.0, 0.0};  // K_a = 1, K_r = 1/2
  const ModeFrequencies f = derive_frequencies(p, g, d, 1.0);
  CHECK(f.omega_a == doctest::Approx(1.0));
  CHECK(f.omega_r == doctest::Approx(std::sqrt(0.5)));

  const ModeFrequencies fo = derive_frequencies(p, g, d, 1.0, 3.0, 4.0);
  CHECK(fo.omega_a == 3.0);
  CHECK(fo.omega_r == 4.0);
}

TEST_CASE("non-confining configurations are rejected") {
  Particle p{1.0, 1.0};
  TrapGeometry g;
  g.kind = TrapKind::ideal_paul;
  g.c2 = -1.0;
  // Static pure quadrupole cannot confine both modes at once.
  CHECK_THROWS_AS(
      (void)derive_frequencies(p, g, DriveParams{0.25, 0.0, 0.0}, 1.0),
      std::invalid_argument);
  // RF drive with a < 0 and tiny q leaves the axial radicand negative.
  DriveParams d;
  d.Omega = 10.0;
  d.U0 = 25.0;  // a_a = 16 c2 U0 / Omega^2 = -4
  d.V0 = 0.0;
  d.V0 = 1e-3;
  CHECK_THROWS_AS((void)derive_frequencies(p, g, d, 1.0),
                  std::invalid_argument);
}
