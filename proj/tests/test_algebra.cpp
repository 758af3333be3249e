#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "squeezetrap/algebra.hpp"
#include "squeezetrap/coherent.hpp"

using namespace squeezetrap;

TEST_CASE("ladder matrices satisfy the defining relations") {
  for (double k : {0.25, 0.5, 0.75, 1.0, 1.5, 2.5}) {
    for (int N : {16, 64, 128}) {
      CAPTURE(k);
      CAPTURE(N);
      CHECK(commutator_residual(build_rep(k, N)) < 1e-10);
    }
  }
}

TEST_CASE("Casimir is k(k-1) on the interior block") {
  for (double k : {0.25, 0.75}) {
    const Su11Rep rep = build_rep(k, 48);
    const Eigen::MatrixXcd dev =
        casimir(rep) + (3.0 / 16.0) * Eigen::MatrixXcd::Identity(48, 48);
    CHECK(interior_max_abs(dev) < 1e-10);
  }
  for (int l = 0; l <= 4; ++l) {
    const double k = (l + 1) / 2.0;
    const double expected = (l * l - 1) / 4.0;
    const Su11Rep rep = build_rep(k, 48);
    const Eigen::MatrixXcd dev =
        casimir(rep) - expected * Eigen::MatrixXcd::Identity(48, 48);
    CAPTURE(l);
    CHECK(interior_max_abs(dev) < 1e-10);
  }
}

TEST_CASE("squeeze operator matches brute-force matrix exponentials") {
  const Su11Rep rep = build_rep(0.75, 32);
  const complexd z(0.3, -0.15);
  const double lambda = std::log(1.0 - std::norm(z));
  const Eigen::MatrixXcd brute = (z * rep.Kplus).exp() *
                                 (lambda * rep.K0).exp() *
                                 (-std::conj(z) * rep.Kminus).exp();
  const Eigen::MatrixXcd mine = squeeze_operator(rep, z);
  // The reference uses dense Pade exponentials whose own error dominates;
  // entries reach O(1e3), so 5e-9 is still a 1e-12 relative bound.
  CHECK((mine - brute).cwiseAbs().maxCoeff() < 5e-9);
}

TEST_CASE("squeeze operator is unitary away from the truncation edge") {
  // High columns are not converged squeezed states at finite truncation;
  // unitarity is exact only on the leading block.
  const Su11Rep rep = build_rep(0.25, 96);
  for (complexd z : {complexd(0.4, 0.0), complexd(-0.2, 0.35)}) {
    const Eigen::MatrixXcd U = squeeze_operator(rep, z);
    const Eigen::MatrixXcd dev =
        (U.adjoint() * U - Eigen::MatrixXcd::Identity(96, 96))
            .topLeftCorner(24, 24);
    CHECK(dev.cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("squeezed_state equals the operator column and is normalized") {
  const Su11Rep rep = build_rep(0.5, 96);
  const complexd z(0.3, -0.2);
  const Eigen::MatrixXcd U = squeeze_operator(rep, z);
  for (int m = 0; m <= 3; ++m) {
    const Eigen::VectorXcd psi = squeezed_state(rep, z, m);
    CHECK((psi - U.col(m)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("squeezed_state reports insufficient truncation") {
  const Su11Rep rep = build_rep(0.25, 16);
  CHECK_THROWS_AS((void)squeezed_state(rep, complexd(0.9, 0.0), 0),
                  truncation_error);
}

TEST_CASE("closed-form generator expectations match the oracle") {
  const Su11Rep rep = build_rep(0.25, kDefaultTruncation);
  const complexd z(0.35, 0.2);
  const int m = 2;
  const double n0 = rep.k + m;
  const double r2 = std::norm(z);
  const complexd ek0 = oracle_expectation(rep, z, m, {Su11Op::K0});
  const complexd ekp = oracle_expectation(rep, z, m, {Su11Op::KPlus});
  const complexd ekm = oracle_expectation(rep, z, m, {Su11Op::KMinus});
  CHECK(std::abs(ek0 - n0 * (1.0 + r2) / (1.0 - r2)) < 1e-10);
  CHECK(std::abs(ekp - 2.0 * n0 * std::conj(z) / (1.0 - r2)) < 1e-10);
  CHECK(std::abs(ekm - 2.0 * n0 * z / (1.0 - r2)) < 1e-10);

  const Eigen::MatrixXcd kin =
      rep.K0 - op_matrix(rep, Su11Op::K1);
  const double eta = disk_to_xieta(z).eta;
  CHECK(std::abs(oracle_expectation(rep, z, m, kin) - n0 * eta) < 1e-10);
}

TEST_CASE("first moment of the squeezed quadrature at a frozen point") {
  // k = 1/4, m = 0, z = 1/2: xi = 3, Q1 = 1/2, so <Omega> = 3/2.
  const Su11Rep rep = build_rep(0.25, kDefaultTruncation);
  const complexd ew =
      oracle_expectation(rep, complexd(0.5, 0.0), 0, {Su11Op::Omega});
  CHECK(std::abs(ew - 1.5) < 1e-10);
  CHECK(std::abs(ew.imag()) < 1e-12);
}

TEST_CASE("basis-state moments of the quadrature at frozen values") {
  // <Omega^3> on |k=1/4, m> for m = 0..3.
  const Su11Rep rep = build_rep(0.25, 64);
  const double expected[4] = {1.875, 46.875, 241.875, 706.875};
  for (int m = 0; m <= 3; ++m) {
    const complexd e = oracle_expectation(
        rep, complexd(0.0, 0.0), m, {Su11Op::Omega, Su11Op::Omega, Su11Op::Omega});
    CAPTURE(m);
    CHECK(std::abs(e - expected[m]) < 1e-10);
    CHECK(std::abs(e.real() - husimi_Q(3, {0.25, m})) < 1e-10);
  }
}

TEST_CASE("word products and hermiticity helpers") {
  const Su11Rep rep = build_rep(1.0, 32);
  const Eigen::MatrixXcd w =
      op_word(rep, {Su11Op::KPlus, Su11Op::KMinus});
  CHECK((w - rep.Kplus * rep.Kminus).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXcd omega = op_matrix(rep, Su11Op::Omega);
  CHECK(interior_max_abs(omega - omega.adjoint()) == 0.0);
  const Eigen::MatrixXcd k2 = op_matrix(rep, Su11Op::K2);
  CHECK(interior_max_abs(k2 - k2.adjoint()) == 0.0);
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS((void)build_rep(-1.0, 32), std::invalid_argument);
  CHECK_THROWS_AS((void)build_rep(0.25, 1), std::invalid_argument);
  const Su11Rep rep = build_rep(0.25, 16);
  CHECK_THROWS_AS((void)squeeze_operator(rep, complexd(1.0, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)squeezed_state(rep, complexd(0.1, 0.0), 16),
                  std::invalid_argument);
}
