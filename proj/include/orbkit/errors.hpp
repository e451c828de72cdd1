#pragma once

#include <stdexcept>
#include <string>

namespace orbkit {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSpecialOrthogonal : public Error {
 public:
  NotSpecialOrthogonal(double orth_defect_, double det_)
      : Error("matrix is not special orthogonal (orthogonality defect " +
              std::to_string(orth_defect_) + ", det " + std::to_string(det_) + ")"),
        orth_defect(orth_defect_),
        det(det_) {}
  double orth_defect;
  double det;
};

class NonUnitAxis : public Error {
 public:
  explicit NonUnitAxis(double norm_)
      : Error("rotation axis is not unit length (norm " + std::to_string(norm_) + ")"),
        norm(norm_) {}
  double norm;
};

class CrpSingular : public Error {
 public:
  CrpSingular() : Error("CRP extraction singular: principal angle at or near pi") {}
};

class MrpAtUnitSphere : public Error {
 public:
  MrpAtUnitSphere() : Error("MRP magnitude at unit sphere: CRP counterpart is infinite") {}
};

class ZeroMrp : public Error {
 public:
  ZeroMrp() : Error("shadow set of the zero MRP is at infinity") {}
};

class EulerGimbal : public Error {
 public:
  EulerGimbal() : Error("3-1-3 Euler angles degenerate: second angle at or near 0 or pi") {}
};

class AxisRateSingular : public Error {
 public:
  AxisRateSingular() : Error("axis rate undefined: principal angle at or near 0") {}
};

class DegenerateOrbit : public Error {
 public:
  DegenerateOrbit() : Error("degenerate (rectilinear) orbit: r and v are parallel") {}
};

class CircularOrbit : public Error {
 public:
  CircularOrbit() : Error("circular orbit: periapse direction undefined") {}
};

class EquatorialOrbit : public Error {
 public:
  EquatorialOrbit() : Error("equatorial orbit: line of nodes undefined") {}
};

class RetrogradeEquatorial : public Error {
 public:
  RetrogradeEquatorial() : Error("retrograde equatorial orbit: equinoctial CRPs singular") {}
};

class KinematicSingularity : public Error {
 public:
  KinematicSingularity()
      : Error("equinoctial basis kinematic singularity: sigma^2 at or near 1 (i near pi)") {}
};

class MeeSingular : public Error {
 public:
  MeeSingular() : Error("CRP equinoctial elements singular: inclination at or near pi") {}
};

class HyperbolicPoint : public Error {
 public:
  HyperbolicPoint() : Error("w = 1 + e1 cos(l) + e2 sin(l) is non-positive") {}
};

class AngleSplitUndefined : public Error {
 public:
  explicit AngleSplitUndefined(const std::string& what_) : Error(what_) {}
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& what_) : Error(what_) {}
};

class CoeSingular : public Error {
 public:
  explicit CoeSingular(const std::string& which_)
      : Error("classical element rates singular in row(s): " + which_), which(which_) {}
  std::string which;
};

class StepUnderflow : public Error {
 public:
  StepUnderflow(double t_, double h_)
      : Error("integrator step underflow at t = " + std::to_string(t_) + " (h = " +
              std::to_string(h_) + ")"),
        t(t_),
        h(h_) {}
  double t;
  double h;
};

class MaxStepsExceeded : public Error {
 public:
  explicit MaxStepsExceeded(long max_steps_)
      : Error("integrator exceeded max step count " + std::to_string(max_steps_)),
        max_steps(max_steps_) {}
  long max_steps;
};

class RhsNonFinite : public Error {
 public:
  explicit RhsNonFinite(double t_)
      : Error("ODE right-hand side produced a non-finite value at t = " + std::to_string(t_)),
        t(t_) {}
  double t;
};

class IntegrationFailed : public Error {
 public:
  explicit IntegrationFailed(const std::string& what_) : Error(what_) {}
};

class NewtonStalled : public Error {
 public:
  NewtonStalled(double rho_, double best_residual_)
      : Error("Newton stalled at rho = " + std::to_string(rho_) + " with best residual " +
              std::to_string(best_residual_)),
        rho(rho_),
        best_residual(best_residual_) {}
  double rho;
  double best_residual;
};

class JacobianSingular : public Error {
 public:
  JacobianSingular() : Error("finite-difference shooting Jacobian is singular") {}
};

}  // namespace orbkit
