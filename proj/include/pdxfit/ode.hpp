#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "pdxfit/errors.hpp"

namespace pdxfit {

struct OdeOptions {
  double rtol = 1e-8;
  double atol = 1e-8;  // applied to every component
  std::size_t max_steps = 20'000'000;
};

// Dormand-Prince 5(4) with FSAL and standard step control. Steps are capped so
// the solver lands exactly on every readout time; readout_times must be sorted
// and start at or after t0. on_readout(index, state) is called once per time.
template <class Rhs, class OnReadout>
void integrate_dopri5(Rhs&& rhs, std::vector<double>& y, double t0,
                      std::span<const double> readout_times,
                      OnReadout&& on_readout, const OdeOptions& opts = {}) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const std::size_t n = y.size();
  if (readout_times.empty()) return;

  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  std::vector<double> ytmp(n), ynew(n);

  double t = t0;
  std::size_t next_readout = 0;
  while (next_readout < readout_times.size() && readout_times[next_readout] <= t) {
    on_readout(next_readout, y);
    ++next_readout;
  }
  if (next_readout == readout_times.size()) return;

  const double t_end = readout_times.back();
  rhs(t, y, k1);

  // initial step from the usual |y|/|f| heuristic
  double ynorm = 0.0, fnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sc = opts.atol + opts.rtol * std::fabs(y[i]);
    ynorm = std::max(ynorm, std::fabs(y[i]) / sc);
    fnorm = std::max(fnorm, std::fabs(k1[i]) / sc);
  }
  double h = (fnorm > 0.0) ? 0.01 * ynorm / fnorm : 1e-3 * (t_end - t0);
  h = std::clamp(h, 1e-8 * std::max(1.0, t_end - t0), t_end - t0);

  const double h_min = 1e-14 * std::max(1.0, std::fabs(t_end));
  bool k1_fresh = true;
  std::size_t steps = 0;

  while (next_readout < readout_times.size()) {
    if (++steps > opts.max_steps)
      throw IntegrationError("step budget exhausted", t);
    const double t_target = readout_times[next_readout];
    bool hit_target = false;
    if (t + h >= t_target) {
      h = t_target - t;
      hit_target = true;
    }
    if (h < h_min) throw IntegrationError("step size underflow", t);

    if (!k1_fresh) rhs(t, y, k1);
    k1_fresh = true;

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
    rhs(t + h, ynew, k7);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(ynew[i])) {
        finite = false;
        break;
      }
      const double sc = opts.atol + opts.rtol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      err += (e / sc) * (e / sc);
    }
    err = finite ? std::sqrt(err / static_cast<double>(n))
                 : std::numeric_limits<double>::infinity();

    if (err <= 1.0) {
      t = hit_target ? t_target : t + h;
      y.swap(ynew);
      k1.swap(k7);  // FSAL
      while (next_readout < readout_times.size() &&
             readout_times[next_readout] <= t) {
        on_readout(next_readout, y);
        ++next_readout;
      }
      const double fac =
          err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
      h = std::max(h * fac, h_min);
    } else {
      if (!finite && h <= 2.0 * h_min)
        throw IntegrationError("non-finite state", t);
      const double fac =
          finite ? std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9) : 0.1;
      h = std::max(h * fac, h_min);
      k1_fresh = true;  // y unchanged, k1 still valid
    }
  }
}

}  // namespace pdxfit
