#pragma once

#include <variant>

#include "orbkit/tensors.hpp"

namespace orbkit {

/// Principal axis (unit) and principal angle in radians.
struct AxisAngle {
  Vec3 axis;
  double angle = 0.0;
};

/// Classic Rodrigues (Gibbs) parameters, q = tan(phi/2) * axis.
struct Crp {
  Vec3 q;
};

/// Modified Rodrigues parameters, sigma = tan(phi/4) * axis.
struct Mrp {
  Vec3 sigma;
};

/// 3-1-3 Euler angles in radians.
struct Euler313 {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
};

/// Which basis the angular velocity components are expressed in. The rate
/// equations differ by a sign flip between the two, so the tag is mandatory.
enum class FrameTag { Unprimed, Primed };

struct AngularVelocity {
  Vec3 omega;
  FrameTag tag = FrameTag::Unprimed;
};

using AttitudeRep = std::variant<AxisAngle, Crp, Mrp, Euler313, Rotation>;

/// Rodrigues' rotation formula. Throws NonUnitAxis.
Rotation rot_from_axis_angle(const AxisAngle& a);

/// Extraction from trace and antisymmetric part; angle in [0, pi]. Identity
/// maps to (z-hat, 0) by convention; near phi = pi the axis comes from the
/// dominant column of (I + R)/2 since the antisymmetric part vanishes there.
AxisAngle axis_angle_from_rot(const Rotation& r);

Rotation rot_from_crp(const Crp& c);

/// Throws CrpSingular when the principal angle is at or near +-pi.
Crp crp_from_rot(const Rotation& r);

Rotation rot_from_mrp(const Mrp& m);

/// Always returns the principal set (|sigma| <= 1).
Mrp mrp_from_rot(const Rotation& r);

Mrp crp_to_mrp(const Crp& c);

/// Throws MrpAtUnitSphere when sigma^2 is at or near 1.
Crp mrp_to_crp(const Mrp& m);

struct CrpMrpJacobians {
  Mat3 dq_dsigma;
  Mat3 dsigma_dq;
};

/// Jacobians of the CRP<->MRP coordinate change, evaluated at the given MRP.
CrpMrpJacobians crp_mrp_jacobians(const Mrp& m);

/// Shadow set -sigma/sigma^2; same rotation, reciprocal magnitude.
Mrp mrp_shadow(const Mrp& m);

/// Simple Eulerian rotation matrix M_1, M_2, or M_3. axis_index in {1,2,3}.
Rotation simple_rotation(int axis_index, double theta);

/// R_313(phi,theta,psi) = M_3(phi) M_1(theta) M_3(psi).
Rotation rot_from_euler313(const Euler313& e);

/// Throws EulerGimbal when |R_33| is at or near 1 (theta near 0 or pi).
Euler313 euler313_from_rot(const Rotation& r);

/// CRP kinematics: q-dot from angular velocity in either basis.
Vec3 crp_rates(const Crp& c, const AngularVelocity& w);

/// Inverse of crp_rates; returns omega components in the requested basis.
Vec3 omega_from_crp_rates(const Crp& c, const Vec3& qdot, FrameTag tag);

/// MRP kinematics: sigma-dot from angular velocity in either basis.
Vec3 mrp_rates(const Mrp& m, const AngularVelocity& w);

Vec3 omega_from_mrp_rates(const Mrp& m, const Vec3& sigma_dot, FrameTag tag);

struct AxisAngleRates {
  Vec3 axis_rate;   // perpendicular to the axis
  double angle_rate = 0.0;
};

/// Throws AxisRateSingular near phi = 0 where cot(phi/2) blows up.
AxisAngleRates axis_angle_rates(const AxisAngle& a, const AngularVelocity& w);

struct Euler313Rates {
  double phi_rate = 0.0;
  double theta_rate = 0.0;
  double psi_rate = 0.0;
};

/// Throws EulerGimbal when |sin(theta)| is at or near 0.
Euler313Rates euler313_rates(const Euler313& e, const AngularVelocity& w);

Vec3 omega_from_euler313(const Euler313& e, const Euler313Rates& rates, FrameTag tag);

struct RotationRates {
  AngularVelocity unprimed;  // axial of Rdot R^T
  AngularVelocity primed;    // axial of R^T Rdot
};

/// Angular velocity from a rotation and its time derivative.
RotationRates omega_from_rotation_pair(const Rotation& r, const Mat3& rdot);

/// Common rotation of any representation.
Rotation rotation_of(const AttitudeRep& rep);

}  // namespace orbkit
