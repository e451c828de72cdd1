#include "orbkit/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orbkit {

namespace {

// Dormand-Prince 5(4) tableau (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kExpErr = 0.2;
constexpr double kExpPrev = 0.04;
constexpr double kShrinkMin = 0.2;
constexpr double kGrowMax = 5.0;

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

Trajectory integrate(const OdeRhs& rhs, std::span<const double> y0, double t0, double tf,
                     const IntegratorConfig& cfg) {
  const std::size_t n = y0.size();
  const double span = tf - t0;
  if (!(span > 0.0)) throw Error("integrate requires tf > t0");
  if (!all_finite(y0)) throw Error("integrate requires a finite initial state");

  const double h_max = cfg.h_max > 0.0 ? cfg.h_max : span;
  const double h_min = cfg.h_min > 0.0 ? cfg.h_min : 1e4 * std::numeric_limits<double>::epsilon() * span;

  Trajectory traj;
  traj.times.push_back(t0);
  traj.states.emplace_back(y0.begin(), y0.end());

  std::vector<double> y(y0.begin(), y0.end()), ynew(n), ytmp(n), err(n);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6v(n), k7(n);

  auto eval = [&](double t, const std::vector<double>& yy, std::vector<double>& out) {
    rhs(t, yy, out);
    ++traj.stats.rhs_evals;
  };

  double t = t0;
  eval(t, y, k1);
  if (!all_finite(k1)) throw RhsNonFinite(t);

  double h = cfg.h_init;
  if (h <= 0.0) {
    // Crude starting step from the initial slope; the controller refines it.
    double ynorm = 0.0, fnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
      ynorm = std::max(ynorm, std::abs(y[i]) / sc);
      fnorm = std::max(fnorm, std::abs(k1[i]) / sc);
    }
    h = (fnorm > 0.0) ? 0.01 * std::max(ynorm, 1.0) / fnorm : 1e-6 * span;
    h = std::min(h, h_max);
  }
  h = std::clamp(h, h_min, h_max);

  double err_prev = 1.0;
  long steps = 0;
  bool last = false;

  while (t < tf) {
    if (++steps > cfg.max_steps) throw MaxStepsExceeded(cfg.max_steps);
    if (h < h_min) throw StepUnderflow(t, h);
    if (t + h >= tf) {
      h = tf - t;
      last = true;
    }

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    eval(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    eval(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    eval(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    eval(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    eval(t + h, ytmp, k6v);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6v[i]);
    eval(t + h, ynew, k7);

    if (!all_finite(ynew) || !all_finite(k7)) throw RhsNonFinite(t + h);

    double err_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6v[i] + e7 * k7[i]);
      const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err_norm += (err[i] / sc) * (err[i] / sc);
    }
    err_norm = std::sqrt(err_norm / static_cast<double>(n));

    if (err_norm <= 1.0) {
      t = last ? tf : t + h;
      y.swap(ynew);
      k1.swap(k7);  // FSAL
      traj.times.push_back(t);
      traj.states.emplace_back(y);
      ++traj.stats.steps_accepted;
      const double grow = kSafety * std::pow(std::max(err_norm, 1e-16), -kExpErr) *
                          std::pow(std::max(err_prev, 1e-16), kExpPrev);
      err_prev = err_norm;
      h = std::min(h * std::clamp(grow, kShrinkMin, kGrowMax), h_max);
      last = false;
    } else {
      ++traj.stats.steps_rejected;
      const double shrink = kSafety * std::pow(err_norm, -kExpErr);
      h *= std::clamp(shrink, kShrinkMin, 1.0);
      last = false;
    }
  }
  return traj;
}

Trajectory integrate_sampled(const OdeRhs& rhs, std::span<const double> y0, double t0, double tf,
                             int n_samples, const IntegratorConfig& cfg) {
  if (n_samples < 1) throw Error("integrate_sampled requires n_samples >= 1");
  Trajectory out;
  out.times.push_back(t0);
  out.states.emplace_back(y0.begin(), y0.end());
  std::vector<double> y(y0.begin(), y0.end());
  for (int k = 1; k <= n_samples; ++k) {
    const double ta = t0 + (tf - t0) * (k - 1) / n_samples;
    const double tb = (k == n_samples) ? tf : t0 + (tf - t0) * k / n_samples;
    Trajectory seg = integrate(rhs, y, ta, tb, cfg);
    y = seg.states.back();
    out.times.push_back(tb);
    out.states.push_back(y);
    out.stats.steps_accepted += seg.stats.steps_accepted;
    out.stats.steps_rejected += seg.stats.steps_rejected;
    out.stats.rhs_evals += seg.stats.rhs_evals;
  }
  return out;
}

}  // namespace orbkit
