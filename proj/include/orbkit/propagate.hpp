#pragma once

#include <functional>
#include <span>
#include <vector>

#include "orbkit/errors.hpp"

namespace orbkit {

struct IntegratorConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double h_init = 0.0;  // <= 0 selects an automatic starting step
  double h_min = 0.0;   // <= 0 selects 1e4 ulps of the span
  double h_max = 0.0;   // <= 0 selects the full span
  long max_steps = 10'000'000;
};

struct IntegratorStats {
  long steps_accepted = 0;
  long steps_rejected = 0;
  long rhs_evals = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  IntegratorStats stats;

  const std::vector<double>& back_state() const { return states.back(); }
};

using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

/// Adaptive explicit Dormand-Prince 5(4) integration from t0 to tf (tf > t0).
/// States are recorded at every accepted step; the final step is clamped so
/// the last sample lands on tf exactly. Throws StepUnderflow,
/// MaxStepsExceeded, RhsNonFinite.
Trajectory integrate(const OdeRhs& rhs, std::span<const double> y0, double t0, double tf,
                     const IntegratorConfig& cfg = {});

/// Same integration, but sampled on a uniform grid of n_samples+1 points by
/// re-stepping segment by segment (no dense output).
Trajectory integrate_sampled(const OdeRhs& rhs, std::span<const double> y0, double t0, double tf,
                             int n_samples, const IntegratorConfig& cfg = {});

}  // namespace orbkit
