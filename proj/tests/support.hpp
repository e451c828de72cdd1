#pragma once

#include <cmath>
#include <random>

#include "orbkit/attitude.hpp"
#include "orbkit/elements.hpp"
#include "orbkit/tensors.hpp"

namespace testsup {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }

  orbkit::Vec3 unit_vec() {
    while (true) {
      const orbkit::Vec3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const double n = v.norm();
      if (n > 0.1 && n < 1.0) return v / n;
    }
  }

  orbkit::Vec3 vec(double lo, double hi) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  orbkit::AxisAngle axis_angle(double phi_lo = 0.05, double phi_hi = 3.0) {
    return {unit_vec(), uniform(phi_lo, phi_hi)};
  }

  /// Generic elliptic inclined orbit, away from every singular locus.
  orbkit::CoeSet coe(double mu = 1.0) {
    return {uniform(0.8, 2.5),  uniform(0.05, 0.6), uniform(0.2, 2.6),
            uniform(-3.0, 3.0), uniform(-3.0, 3.0), uniform(-3.0, 3.0), mu};
  }
};

inline double max_abs_diff(const orbkit::Mat3& a, const orbkit::Mat3& b) {
  return (a - b).max_abs();
}

inline double max_abs_diff(const orbkit::Vec3& a, const orbkit::Vec3& b) {
  const orbkit::Vec3 d = a - b;
  return std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
}

inline double rel_err(double got, double want) {
  const double scale = std::max({std::abs(got), std::abs(want), 1e-12});
  return std::abs(got - want) / scale;
}

inline double wrap_angle_diff(double a, double b) {
  return std::remainder(a - b, 2.0 * M_PI);
}

/// Rotation history under constant angular velocity: R(t) = exp(w t) R0 for
/// unprimed components, R(t) = R0 exp(w' t) for primed components.
inline orbkit::Rotation rotation_at(const orbkit::Rotation& r0, const orbkit::AngularVelocity& w,
                                    double t) {
  const double wn = w.omega.norm();
  if (wn * std::abs(t) < 1e-300) return r0;
  const orbkit::Rotation step = orbkit::rot_from_axis_angle({w.omega / wn, wn * t});
  return (w.tag == orbkit::FrameTag::Unprimed) ? step * r0 : r0 * step;
}

}  // namespace testsup
