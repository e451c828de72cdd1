#include "orbkit/frames.hpp"

#include <cmath>

#include "orbkit/attitude.hpp"

namespace orbkit {

Basis lvlh_basis(const Vec3& r, const Vec3& v) {
  const Vec3 h = r.cross(v);
  const double rn = r.norm();
  if (rn <= 0.0 || h.norm() <= 1e-12 * rn * v.norm()) throw DegenerateOrbit();
  Basis b;
  b.e1 = r / rn;
  b.e3 = h.normalized();
  b.e2 = b.e3.cross(b.e1);
  return b;
}

ConservedVectors conserved_vectors(const Vec3& r, const Vec3& v, double mu) {
  const Vec3 h = r.cross(v);
  const double rn = r.norm();
  if (rn <= 0.0 || h.norm() <= 1e-12 * rn * v.norm()) throw DegenerateOrbit();
  ConservedVectors cv;
  cv.h = h;
  cv.e = v.cross(h) / mu - r / rn;
  cv.k = h.cross(cv.e) / h.norm2();
  return cv;
}

Basis perifocal_basis(const ConservedVectors& cv) {
  if (cv.e.norm() <= 1e-10) throw CircularOrbit();
  Basis b;
  b.e1 = cv.e.normalized();
  b.e3 = cv.h.normalized();
  b.e2 = b.e3.cross(b.e1);
  return b;
}

Vec3 line_of_nodes(const Vec3& h, const Vec3& inertial_z) {
  const Vec3 n = inertial_z.cross(h);
  if (n.norm() <= 1e-12 * h.norm()) throw EquatorialOrbit();
  return n.normalized();
}

Basis equinoctial_basis_from_q(double q1, double q2) {
  const Rotation r = rot_from_crp({{q1, q2, 0.0}});
  return {{r(0, 0), r(1, 0), r(2, 0)}, {r(0, 1), r(1, 1), r(2, 1)}, {r(0, 2), r(1, 2), r(2, 2)}};
}

std::pair<double, double> crp_from_hhat(const Vec3& hhat) {
  if (hhat.z <= -1.0 + 1e-9) throw RetrogradeEquatorial();
  const double denom = 1.0 + hhat.z;
  return {-hhat.y / denom, hhat.x / denom};
}

Vec3 lvlh_omega(double r, double h, const Vec3& a_lvlh) {
  return {(r / h) * a_lvlh.z, 0.0, h / (r * r)};
}

Vec3 perifocal_omega(double r, double h, double p, double e, double nu, const Vec3& a_lvlh) {
  if (e <= 1e-9) throw CircularOrbit();
  const double rh = r / h;
  const double w = p / r;
  return {rh * std::cos(nu) * a_lvlh.z, rh * std::sin(nu) * a_lvlh.z,
          -(rh / e) * (w * std::cos(nu) * a_lvlh.x - (w + 1.0) * std::sin(nu) * a_lvlh.y)};
}

Vec3 equinoctial_omega_crp(double q1, double q2, double l, double r_over_h, double a_n) {
  const double w1 = r_over_h * std::cos(l) * a_n;
  const double w2 = r_over_h * std::sin(l) * a_n;
  return {w1, w2, q2 * w1 - q1 * w2};
}

Vec3 equinoctial_omega_mrp(double sigma1, double sigma2, double l, double r_over_h, double a_n) {
  const double s2 = sigma1 * sigma1 + sigma2 * sigma2;
  if (s2 >= 1.0 - 1e-9) throw KinematicSingularity();
  const double w1 = r_over_h * std::cos(l) * a_n;
  const double w2 = r_over_h * std::sin(l) * a_n;
  return {w1, w2, (2.0 / (1.0 - s2)) * (sigma2 * w1 - sigma1 * w2)};
}

}  // namespace orbkit
