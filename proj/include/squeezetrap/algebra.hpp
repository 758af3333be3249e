#pragma once

// Truncated-Fock matrix realization of the su(1,1) positive discrete series
// and the squeeze operator U(z) = exp(z K+) exp(lambda K0) exp(-z* K-),
// lambda = ln(1 - zz*).  Everything here is brute-force matrix arithmetic:
// it is the ground-truth oracle the closed-form expectation values are
// tested against, so no closed forms are allowed in this module.

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace squeezetrap {

using complexd = std::complex<double>;

// Thrown when a squeezed state leaks measurable weight into the top of the
// truncated basis, i.e. the truncation is too small for the requested (z, m).
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultTruncation = 128;
inline constexpr double kTailTolerance = 1e-10;

struct Su11Rep {
  double k = 0.0;  // Bargmann index, k > 0
  int N = 0;       // truncation dimension
  Eigen::MatrixXcd K0;      // diag(k + m)
  Eigen::MatrixXcd Kplus;   // K+|m> = sqrt((m+1)(2k+m)) |m+1>
  Eigen::MatrixXcd Kminus;  // adjoint of K+
};

// K0 spectrum k+m, ladder elements fixed by the commutation relations and
// the lowest-weight condition K-|0> = 0.
Su11Rep build_rep(double k, int N);

// K0^2 - (K+K- + K-K+)/2; equals k(k-1) I away from the truncation edge.
Eigen::MatrixXcd casimir(const Su11Rep& rep);

// Product of the three factor exponentials.  Each exponent is diagonal or
// nilpotent triangular, so the series are summed exactly.
Eigen::MatrixXcd squeeze_operator(const Su11Rep& rep, complexd z);

// Column U(z) e_m without forming the full operator.  Throws
// truncation_error when the tail mass (top eight levels) exceeds tail_tol.
Eigen::VectorXcd squeezed_state(const Su11Rep& rep, complexd z, int m,
                                double tail_tol = kTailTolerance);

// Operator vocabulary for expectation words.  Omega is the squeezed-frame
// quadrature 2 K0 + K+ + K-, whose moments on |z,k,m> factor as xi^n times
// the |k,m> moments of the same matrix.
enum class Su11Op { K0, KPlus, KMinus, K1, K2, Omega };

Eigen::MatrixXcd op_matrix(const Su11Rep& rep, Su11Op op);

// Product of the listed generators, left to right.
Eigen::MatrixXcd op_word(const Su11Rep& rep, std::initializer_list<Su11Op> word);

// <z,k,m| X |z,k,m> by matrix products only.
complexd oracle_expectation(const Su11Rep& rep, complexd z, int m,
                            const Eigen::MatrixXcd& X,
                            double tail_tol = kTailTolerance);
complexd oracle_expectation(const Su11Rep& rep, complexd z, int m,
                            std::initializer_list<Su11Op> word,
                            double tail_tol = kTailTolerance);

// max |M_ij| over the interior block (last row/column excluded); the
// truncation corrupts only the top state.
double interior_max_abs(const Eigen::MatrixXcd& M);

// Interior-block residuals of the defining relations:
// max of ||[K0,K+] - K+||, ||[K0,K-] + K-||, ||[K-,K+] - 2 K0||.
double commutator_residual(const Su11Rep& rep);

}  // namespace squeezetrap
