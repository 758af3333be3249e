#include "squeezetrap/algebra.hpp"

#include <cmath>
#include <vector>

namespace squeezetrap {

Su11Rep build_rep(double k, int N) {
  if (k <= 0.0) throw std::invalid_argument("build_rep: k must be > 0");
  if (N < 2) throw std::invalid_argument("build_rep: N must be >= 2");
  Su11Rep rep;
  rep.k = k;
  rep.N = N;
  rep.K0 = Eigen::MatrixXcd::Zero(N, N);
  rep.Kplus = Eigen::MatrixXcd::Zero(N, N);
  rep.Kminus = Eigen::MatrixXcd::Zero(N, N);
  for (int m = 0; m < N; ++m) rep.K0(m, m) = k + m;
  for (int m = 0; m + 1 < N; ++m) {
    const double c = std::sqrt((m + 1.0) * (2.0 * k + m));
    rep.Kplus(m + 1, m) = c;
    rep.Kminus(m, m + 1) = c;
  }
  return rep;
}

Eigen::MatrixXcd casimir(const Su11Rep& rep) {
  const Eigen::MatrixXcd anti =
      rep.Kplus * rep.Kminus + rep.Kminus * rep.Kplus;
  return rep.K0 * rep.K0 - 0.5 * anti;
}

namespace {

// exp(z K+) acting on the truncated rep: K+ is strictly lower triangular and
// nilpotent of index N, so the exponential series terminates after N terms.
// Column m of the result is sum_j z^j / j! * prod of ladder factors.
Eigen::MatrixXcd exp_lower(const Su11Rep& rep, complexd z) {
  const int N = rep.N;
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Identity(N, N);
  for (int m = 0; m < N; ++m) {
    complexd coeff = 1.0;
    for (int j = 1; m + j < N; ++j) {
      const int row = m + j - 1;
      coeff *= z * std::sqrt((row + 1.0) * (2.0 * rep.k + row)) /
               static_cast<double>(j);
      E(m + j, m) = coeff;
    }
  }
  return E;
}

}  // namespace

Eigen::MatrixXcd squeeze_operator(const Su11Rep& rep, complexd z) {
  const double r2 = std::norm(z);
  if (r2 >= 1.0)
    throw std::invalid_argument("squeeze_operator: |z| must be < 1");
  const int N = rep.N;
  const double lambda = std::log(1.0 - r2);
  Eigen::VectorXcd d(N);
  for (int m = 0; m < N; ++m) d(m) = std::exp(lambda * (rep.k + m));
  const Eigen::MatrixXcd lower = exp_lower(rep, z);
  const Eigen::MatrixXcd upper = exp_lower(rep, -std::conj(z)).transpose();
  return lower * d.asDiagonal() * upper;
}

Eigen::VectorXcd squeezed_state(const Su11Rep& rep, complexd z, int m,
                                double tail_tol) {
  if (m < 0 || m >= rep.N)
    throw std::invalid_argument("squeezed_state: m out of range");
  const double r2 = std::norm(z);
  if (r2 >= 1.0)
    throw std::invalid_argument("squeezed_state: |z| must be < 1");
  const int N = rep.N;
  const double lambda = std::log(1.0 - r2);

  // exp(-z* K-) e_m: K- lowers, so only levels 0..m are populated.
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
  v(m) = 1.0;
  complexd coeff = 1.0;
  for (int j = 1; j <= m; ++j) {
    const int row = m - j + 1;
    coeff *= -std::conj(z) *
             std::sqrt(row * (2.0 * rep.k + row - 1.0)) /
             static_cast<double>(j);
    v(m - j) = coeff;
  }
  for (int i = 0; i <= m; ++i) v(i) *= std::exp(lambda * (rep.k + i));
  // exp(z K+) raises: psi_n = sum_{i<=min(n,m)} v_i * z^{n-i}/(n-i)! * ladder.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(N);
  for (int i = 0; i <= m; ++i) {
    complexd c = v(i);
    psi(i) += c;
    for (int n = i + 1; n < N; ++n) {
      c *= z * std::sqrt(n * (2.0 * rep.k + n - 1.0)) /
           static_cast<double>(n - i);
      psi(n) += c;
    }
  }

  double tail = 0.0;
  for (int n = std::max(0, N - 8); n < N; ++n) tail += std::norm(psi(n));
  if (tail > tail_tol)
    throw truncation_error(
        "squeezed_state: tail mass " + std::to_string(tail) +
        " exceeds tolerance; increase the truncation dimension");
  return psi;
}

Eigen::MatrixXcd op_matrix(const Su11Rep& rep, Su11Op op) {
  switch (op) {
    case Su11Op::K0:
      return rep.K0;
    case Su11Op::KPlus:
      return rep.Kplus;
    case Su11Op::KMinus:
      return rep.Kminus;
    case Su11Op::K1:
      return 0.5 * (rep.Kplus + rep.Kminus);
    case Su11Op::K2:
      return complexd(0.0, -0.5) * (rep.Kplus - rep.Kminus);
    case Su11Op::Omega:
      return 2.0 * rep.K0 + rep.Kplus + rep.Kminus;
  }
  throw std::invalid_argument("op_matrix: unknown operator");
}

Eigen::MatrixXcd op_word(const Su11Rep& rep,
                         std::initializer_list<Su11Op> word) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(rep.N, rep.N);
  for (Su11Op op : word) M *= op_matrix(rep, op);
  return M;
}

complexd oracle_expectation(const Su11Rep& rep, complexd z, int m,
                            const Eigen::MatrixXcd& X, double tail_tol) {
  const Eigen::VectorXcd psi = squeezed_state(rep, z, m, tail_tol);
  return psi.dot(X * psi);  // Eigen dot conjugates the left argument
}

complexd oracle_expectation(const Su11Rep& rep, complexd z, int m,
                            std::initializer_list<Su11Op> word,
                            double tail_tol) {
  return oracle_expectation(rep, z, m, op_word(rep, word), tail_tol);
}

double interior_max_abs(const Eigen::MatrixXcd& M) {
  const int n = static_cast<int>(M.rows());
  if (n <= 1) return 0.0;
  return M.topLeftCorner(n - 1, n - 1).cwiseAbs().maxCoeff();
}

double commutator_residual(const Su11Rep& rep) {
  const Eigen::MatrixXcd c1 =
      rep.K0 * rep.Kplus - rep.Kplus * rep.K0 - rep.Kplus;
  const Eigen::MatrixXcd c2 =
      rep.K0 * rep.Kminus - rep.Kminus * rep.K0 + rep.Kminus;
  const Eigen::MatrixXcd c3 =
      rep.Kminus * rep.Kplus - rep.Kplus * rep.Kminus - 2.0 * rep.K0;
  return std::max({interior_max_abs(c1), interior_max_abs(c2),
                   interior_max_abs(c3)});
}

}  // namespace squeezetrap
