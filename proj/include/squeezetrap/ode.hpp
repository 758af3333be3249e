#pragma once

// Adaptive Dormand-Prince 5(4) integrator over std::array<double, N>.
// Header-only and templated on the compile-time dimension so the mode
// equations (6 reals), disk equations (4 reals) and Hill equations (4 reals)
// share one implementation without heap traffic in the inner loop.

#include <array>
#include <cmath>
#include <string>

namespace squeezetrap {

enum class OdeStatus { completed, diverged };

struct OdeRunInfo {
  OdeStatus status = OdeStatus::completed;
  int accepted = 0;
  int rejected = 0;
  std::string diagnostic;
};

// rhs(t, y, dydt); observe(t, y) after every accepted step (initial point
// included); guard(t, y) returns a nonempty reason string to abort as
// diverged.  post(t, y) may adjust an accepted state (e.g. renormalize onto
// an invariant manifold) before it is observed; returning true invalidates
// the first-same-as-last derivative, which is then recomputed.  NaN in the
// state and step-size underflow are caught internally.
template <int N, typename RHS, typename Observer, typename Guard,
          typename Post>
OdeRunInfo dopri5(RHS&& rhs, std::array<double, N>& y, double t0, double t1,
                  double rtol, double atol, Observer&& observe, Guard&& guard,
                  Post&& post) {
  using V = std::array<double, N>;
  OdeRunInfo info;

  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  // b - b*: embedded 4th-order error weights.
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  auto has_nan = [](const V& v) {
    for (double x : v)
      if (!std::isfinite(x)) return true;
    return false;
  };

  double t = t0;
  observe(t, y);
  {
    const std::string reason = guard(t, y);
    if (!reason.empty()) {
      info.status = OdeStatus::diverged;
      info.diagnostic = reason;
      return info;
    }
  }
  if (t1 <= t0) return info;

  const double span = t1 - t0;
  const double hmin = span * 1e-14;
  double h = span * 1e-4;

  V k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
  rhs(t, y, k1);

  while (t < t1) {
    if (t + h > t1) h = t1 - t;

    for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (int i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (int i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (int i = 0; i < N; ++i)
      ytmp[i] =
          y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (int i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (int i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                            b5 * k5[i] + b6 * k6[i]);
    rhs(t + h, ynew, k7);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc =
          atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / N);

    if (!std::isfinite(err) || has_nan(ynew)) {
      h *= 0.2;
      ++info.rejected;
      if (h < hmin) {
        info.status = OdeStatus::diverged;
        info.diagnostic = "non-finite state at t = " + std::to_string(t);
        return info;
      }
      rhs(t, y, k1);
      continue;
    }

    if (err <= 1.0) {
      t += h;
      y = ynew;
      if (post(t, y)) {
        rhs(t, y, k1);  // the state moved; the cached derivative is stale
      } else {
        k1 = k7;  // first-same-as-last
      }
      ++info.accepted;
      observe(t, y);
      const std::string reason = guard(t, y);
      if (!reason.empty()) {
        info.status = OdeStatus::diverged;
        info.diagnostic = reason + " at t = " + std::to_string(t);
        return info;
      }
    } else {
      ++info.rejected;
    }

    const double factor =
        std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
    h *= factor;
    if (h < hmin) {
      info.status = OdeStatus::diverged;
      info.diagnostic = "step size underflow at t = " + std::to_string(t);
      return info;
    }
  }
  return info;
}

template <int N, typename RHS, typename Observer, typename Guard>
OdeRunInfo dopri5(RHS&& rhs, std::array<double, N>& y, double t0, double t1,
                  double rtol, double atol, Observer&& observe,
                  Guard&& guard) {
  return dopri5<N>(rhs, y, t0, t1, rtol, atol, observe, guard,
                   [](double, std::array<double, N>&) { return false; });
}

}  // namespace squeezetrap
