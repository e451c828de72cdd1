#include "orbkit/attitude.hpp"

#include <algorithm>
#include <cmath>

namespace orbkit {

namespace {

constexpr double kUnitAxisTol = 1e-12;
constexpr double kTrigGuard = 1e-9;

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

Rotation rot_from_axis_angle(const AxisAngle& a) {
  const double n = a.axis.norm();
  if (std::abs(n - 1.0) > kUnitAxisTol) throw NonUnitAxis(n);
  const double c = std::cos(a.angle);
  const double s = std::sin(a.angle);
  const Mat3 m = c * Mat3::identity() + s * hat(a.axis).mat() + (1.0 - c) * outer(a.axis, a.axis);
  return Rotation::from_mat(m);
}

AxisAngle axis_angle_from_rot(const Rotation& r) {
  const Vec3 s = unhat(r.mat());              // axis * sin(phi)
  const double c = clamp1(0.5 * (r.trace() - 1.0));  // cos(phi)
  const double sn = s.norm();
  const double phi = std::atan2(sn, c);       // well-conditioned on [0, pi]
  if (phi < 1e-12) return {kZhat, 0.0};
  if (sn >= kTrigGuard) return {s / sn, phi};
  // phi near pi: (I + R)/2 -> axis (x) axis; take the dominant column.
  const Mat3 b = 0.5 * (Mat3::identity() + r.mat());
  int k = 0;
  if (b(1, 1) > b(k, k)) k = 1;
  if (b(2, 2) > b(k, k)) k = 2;
  Vec3 axis{b(0, k), b(1, k), b(2, k)};
  axis = axis.normalized();
  // Keep consistency with the (vanishing) antisymmetric part, else fix a sign.
  const double proj = s.dot(axis);
  if (proj < 0.0) axis = -axis;
  if (proj == 0.0 && axis[k] < 0.0) axis = -axis;
  return {axis, phi};
}

Rotation rot_from_crp(const Crp& c) {
  const double q2 = c.q.norm2();
  const double f = 2.0 / (1.0 + q2);
  const Mat3 qx = hat(c.q).mat();
  const Mat3 m = Mat3::identity() + f * qx + f * (qx * qx);
  return Rotation::from_mat(m);
}

Crp crp_from_rot(const Rotation& r) {
  const double denom = 1.0 + r.trace();
  if (denom <= kTrigGuard) throw CrpSingular();
  return {(2.0 / denom) * unhat(r.mat())};
}

Rotation rot_from_mrp(const Mrp& m) {
  const double s2 = m.sigma.norm2();
  const double d = 1.0 + s2;
  const Mat3 sx = hat(m.sigma).mat();
  const Mat3 mat =
      Mat3::identity() + (4.0 * (1.0 - s2) / (d * d)) * sx + (8.0 / (d * d)) * (sx * sx);
  return Rotation::from_mat(mat);
}

Mrp mrp_from_rot(const Rotation& r) {
  const double tp1 = r.trace() + 1.0;
  if (tp1 > 1e-12) {
    const double d = std::sqrt(tp1);
    return {(2.0 / ((2.0 + d) * d)) * unhat(r.mat())};
  }
  // phi = pi: sigma = tan(pi/4) * axis = axis.
  const AxisAngle aa = axis_angle_from_rot(r);
  return {aa.axis * std::tan(0.25 * aa.angle)};
}

Mrp crp_to_mrp(const Crp& c) {
  const double q2 = c.q.norm2();
  return {c.q / (1.0 + std::sqrt(1.0 + q2))};
}

Crp mrp_to_crp(const Mrp& m) {
  const double s2 = m.sigma.norm2();
  if (std::abs(1.0 - s2) <= kTrigGuard) throw MrpAtUnitSphere();
  return {m.sigma * (2.0 / (1.0 - s2))};
}

CrpMrpJacobians crp_mrp_jacobians(const Mrp& m) {
  const double s2 = m.sigma.norm2();
  if (std::abs(1.0 - s2) <= kTrigGuard) throw MrpAtUnitSphere();
  const double k = 0.5 * (1.0 - s2);
  const Vec3 q = m.sigma / k;
  CrpMrpJacobians j;
  j.dq_dsigma = (1.0 / k) * (Mat3::identity() + (1.0 / k) * outer(m.sigma, m.sigma));
  j.dsigma_dq = k * (Mat3::identity() - (k * k / (1.0 - k)) * outer(q, q));
  return j;
}

Mrp mrp_shadow(const Mrp& m) {
  const double s2 = m.sigma.norm2();
  if (s2 <= 1e-24) throw ZeroMrp();
  return {m.sigma * (-1.0 / s2)};
}

Rotation simple_rotation(int axis_index, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat3 m = Mat3::identity();
  switch (axis_index) {
    case 1:
      m(1, 1) = c; m(1, 2) = -s;
      m(2, 1) = s; m(2, 2) = c;
      break;
    case 2:
      m(0, 0) = c; m(0, 2) = s;
      m(2, 0) = -s; m(2, 2) = c;
      break;
    case 3:
      m(0, 0) = c; m(0, 1) = -s;
      m(1, 0) = s; m(1, 1) = c;
      break;
    default:
      throw Error("simple_rotation axis index must be 1, 2, or 3");
  }
  return Rotation::from_mat(m);
}

Rotation rot_from_euler313(const Euler313& e) {
  return simple_rotation(3, e.phi) * simple_rotation(1, e.theta) * simple_rotation(3, e.psi);
}

Euler313 euler313_from_rot(const Rotation& r) {
  const double r33 = r(2, 2);
  if (std::abs(r33) >= 1.0 - kTrigGuard) throw EulerGimbal();
  Euler313 e;
  e.theta = std::acos(clamp1(r33));
  e.phi = std::atan2(r(0, 2), -r(1, 2));
  e.psi = std::atan2(r(2, 0), r(2, 1));
  return e;
}

Vec3 crp_rates(const Crp& c, const AngularVelocity& w) {
  const Mat3 qx = hat(c.q).mat();
  const Mat3 qq = outer(c.q, c.q);
  const Mat3 m = (w.tag == FrameTag::Unprimed) ? Mat3::identity() - qx + qq
                                               : Mat3::identity() + qx + qq;
  return 0.5 * (m * w.omega);
}

Vec3 omega_from_crp_rates(const Crp& c, const Vec3& qdot, FrameTag tag) {
  const double f = 2.0 / (1.0 + c.q.norm2());
  const Mat3 qx = hat(c.q).mat();
  const Mat3 m = (tag == FrameTag::Unprimed) ? Mat3::identity() + qx : Mat3::identity() - qx;
  return f * (m * qdot);
}

Vec3 mrp_rates(const Mrp& m, const AngularVelocity& w) {
  const double s2 = m.sigma.norm2();
  const Mat3 sx = hat(m.sigma).mat();
  const Mat3 ss = outer(m.sigma, m.sigma);
  const Mat3 base = 0.5 * (1.0 - s2) * Mat3::identity() + ss;
  const Mat3 mat = (w.tag == FrameTag::Unprimed) ? base - sx : base + sx;
  return 0.5 * (mat * w.omega);
}

Vec3 omega_from_mrp_rates(const Mrp& m, const Vec3& sigma_dot, FrameTag tag) {
  const double s2 = m.sigma.norm2();
  const double f = 8.0 / ((1.0 + s2) * (1.0 + s2));
  const Mat3 sx = hat(m.sigma).mat();
  const Mat3 ss = outer(m.sigma, m.sigma);
  const Mat3 base = 0.5 * (1.0 - s2) * Mat3::identity() + ss;
  const Mat3 mat = (tag == FrameTag::Unprimed) ? base + sx : base - sx;
  return f * (mat * sigma_dot);
}

AxisAngleRates axis_angle_rates(const AxisAngle& a, const AngularVelocity& w) {
  const double half = 0.5 * a.angle;
  if (std::abs(std::sin(half)) <= kTrigGuard) throw AxisRateSingular();
  const double cot = std::cos(half) / std::sin(half);
  const Mat3 ax = hat(a.axis).mat();
  const Mat3 axax = ax * ax;
  AxisAngleRates out;
  out.angle_rate = w.omega.dot(a.axis);
  if (w.tag == FrameTag::Unprimed) {
    out.axis_rate = -0.5 * ((ax + cot * axax) * w.omega);
  } else {
    out.axis_rate = 0.5 * ((ax - cot * axax) * w.omega);
  }
  return out;
}

Euler313Rates euler313_rates(const Euler313& e, const AngularVelocity& w) {
  const double st = std::sin(e.theta);
  if (std::abs(st) <= kTrigGuard) throw EulerGimbal();
  const double ct = std::cos(e.theta);
  Euler313Rates r;
  if (w.tag == FrameTag::Primed) {
    const double sp = std::sin(e.psi), cp = std::cos(e.psi);
    const double u = sp * w.omega.x + cp * w.omega.y;
    r.phi_rate = u / st;
    r.theta_rate = cp * w.omega.x - sp * w.omega.y;
    r.psi_rate = w.omega.z - (ct / st) * u;
  } else {
    const double sf = std::sin(e.phi), cf = std::cos(e.phi);
    const double u = sf * w.omega.x - cf * w.omega.y;
    r.psi_rate = u / st;
    r.theta_rate = cf * w.omega.x + sf * w.omega.y;
    r.phi_rate = w.omega.z - ct * r.psi_rate;
  }
  return r;
}

Vec3 omega_from_euler313(const Euler313& e, const Euler313Rates& rates, FrameTag tag) {
  const double st = std::sin(e.theta), ct = std::cos(e.theta);
  if (tag == FrameTag::Primed) {
    const double sp = std::sin(e.psi), cp = std::cos(e.psi);
    return {rates.phi_rate * sp * st + rates.theta_rate * cp,
            rates.phi_rate * cp * st - rates.theta_rate * sp,
            rates.phi_rate * ct + rates.psi_rate};
  }
  const double sf = std::sin(e.phi), cf = std::cos(e.phi);
  return {rates.theta_rate * cf + rates.psi_rate * sf * st,
          rates.theta_rate * sf - rates.psi_rate * cf * st,
          rates.phi_rate + rates.psi_rate * ct};
}

RotationRates omega_from_rotation_pair(const Rotation& r, const Mat3& rdot) {
  RotationRates out;
  out.unprimed = {unhat(rdot * r.mat().transposed()), FrameTag::Unprimed};
  out.primed = {unhat(r.mat().transposed() * rdot), FrameTag::Primed};
  return out;
}

Rotation rotation_of(const AttitudeRep& rep) {
  struct Visitor {
    Rotation operator()(const AxisAngle& a) const { return rot_from_axis_angle(a); }
    Rotation operator()(const Crp& c) const { return rot_from_crp(c); }
    Rotation operator()(const Mrp& m) const { return rot_from_mrp(m); }
    Rotation operator()(const Euler313& e) const { return rot_from_euler313(e); }
    Rotation operator()(const Rotation& r) const { return r; }
  };
  return std::visit(Visitor{}, rep);
}

}  // namespace orbkit
