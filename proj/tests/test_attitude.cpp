#include <doctest.h>

#include <cmath>

#include "orbkit/attitude.hpp"
#include "support.hpp"

using namespace orbkit;
using testsup::Rng;
using testsup::max_abs_diff;
using testsup::rotation_at;

TEST_CASE("axis-angle rotation basics") {
  const Rotation r = rot_from_axis_angle({kZhat, M_PI / 2});
  CHECK(max_abs_diff(r * kXhat, kYhat) < 1e-15);
  CHECK(max_abs_diff(rot_from_axis_angle({kYhat, 0.0}).mat(), Mat3::identity()) == 0.0);
  CHECK(rot_from_axis_angle({kXhat, 0.4}).trace() ==
        doctest::Approx(2.0 * std::cos(0.4) + 1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rot_from_axis_angle({{1.0, 1.0, 0.0}, 0.2}), NonUnitAxis);

  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const AxisAngle a = rng.axis_angle();
    const Rotation R = rot_from_axis_angle(a);
    CHECK(max_abs_diff(R * a.axis, a.axis) < 1e-13);  // axis is the +1 eigenvector
  }
}

TEST_CASE("axis-angle non-uniqueness identities") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const AxisAngle a = rng.axis_angle();
    const Rotation r1 = rot_from_axis_angle(a);
    const Rotation r2 = rot_from_axis_angle({-a.axis, -a.angle});
    CHECK(max_abs_diff(r1.mat(), r2.mat()) < 1e-14);
    const Rotation rt = rot_from_axis_angle({a.axis, -a.angle});
    CHECK(max_abs_diff(r1.transposed().mat(), rt.mat()) < 1e-14);
  }
}

TEST_CASE("axis-angle extraction") {
  const AxisAngle id = axis_angle_from_rot(Rotation::identity());
  CHECK(id.angle == 0.0);
  CHECK(max_abs_diff(id.axis, kZhat) == 0.0);

  const AxisAngle z90 = axis_angle_from_rot(rot_from_axis_angle({kZhat, M_PI / 2}));
  CHECK(z90.angle == doctest::Approx(M_PI / 2).epsilon(1e-14));
  CHECK(max_abs_diff(z90.axis, kZhat) < 1e-14);

  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const AxisAngle a = rng.axis_angle(0.1, 3.0);
    const AxisAngle b = axis_angle_from_rot(rot_from_axis_angle(a));
    CHECK(std::abs(a.angle - b.angle) < 1e-10);
    CHECK(max_abs_diff(a.axis, b.axis) < 1e-10);
  }

  // near and at phi = pi the fallback path keeps the rotation
  for (int i = 0; i < 50; ++i) {
    const AxisAngle a{rng.unit_vec(), M_PI - rng.uniform(0.0, 1e-10)};
    const AxisAngle b = axis_angle_from_rot(rot_from_axis_angle(a));
    CHECK(max_abs_diff(rot_from_axis_angle(b).mat(), rot_from_axis_angle(a).mat()) < 1e-9);
  }
}

TEST_CASE("CRP rotation and extraction") {
  CHECK(max_abs_diff(rot_from_crp({Vec3{}}).mat(), Mat3::identity()) == 0.0);
  CHECK(max_abs_diff(rot_from_crp({kZhat}).mat(), simple_rotation(3, M_PI / 2).mat()) < 1e-15);

  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const Vec3 q = rng.vec(-2, 2);
    const Rotation r1 = rot_from_crp({q});
    const double qn = q.norm();
    const Rotation r2 = rot_from_axis_angle({q / qn, 2.0 * std::atan(qn)});
    CHECK(max_abs_diff(r1.mat(), r2.mat()) < 1e-12);
    CHECK(max_abs_diff(r1 * q, q) < 1e-12);
    CHECK(testsup::rel_err(r1.trace() + 1.0, 4.0 / (1.0 + q.norm2())) < 1e-13);
  }

  CHECK(max_abs_diff(crp_from_rot(Rotation::identity()).q, Vec3{}) == 0.0);
  CHECK(max_abs_diff(crp_from_rot(simple_rotation(3, M_PI / 2)).q, kZhat) < 1e-14);
  CHECK_THROWS_AS(crp_from_rot(rot_from_axis_angle({kXhat, M_PI - 1e-12})), CrpSingular);

  for (int i = 0; i < 200; ++i) {
    const Vec3 q = rng.vec(-2, 2);
    CHECK(max_abs_diff(crp_from_rot(rot_from_crp({q})).q, q) < 1e-10 * std::max(1.0, q.norm()));
  }
}

TEST_CASE("MRP rotation and extraction") {
  CHECK(max_abs_diff(rot_from_mrp({Vec3{}}).mat(), Mat3::identity()) == 0.0);
  const double t8 = std::tan(M_PI / 8);
  CHECK(max_abs_diff(rot_from_mrp({{0, 0, t8}}).mat(), simple_rotation(3, M_PI / 2).mat()) <
        1e-14);

  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    Vec3 s = rng.vec(-0.6, 0.6);
    if (s.norm() >= 0.95) continue;
    const Rotation r1 = rot_from_mrp({s});
    const Rotation r2 = rot_from_crp(mrp_to_crp({s}));
    CHECK(max_abs_diff(r1.mat(), r2.mat()) < 1e-12);
    CHECK(max_abs_diff(r1 * s, s) < 1e-12);
    const double k = (1.0 - s.norm2()) / (1.0 + s.norm2());
    CHECK(testsup::rel_err(r1.trace() + 1.0, 4.0 * k * k) < 1e-12);
  }

  CHECK(max_abs_diff(mrp_from_rot(Rotation::identity()).sigma, Vec3{}) == 0.0);
  CHECK(max_abs_diff(mrp_from_rot(simple_rotation(3, M_PI / 2)).sigma, Vec3{0, 0, t8}) < 1e-14);

  // phi = pi: extraction lands on the unit sphere
  const Mrp at_pi = mrp_from_rot(rot_from_axis_angle({kXhat, M_PI}));
  CHECK(max_abs_diff(at_pi.sigma, kXhat) < 1e-9);

  for (int i = 0; i < 500; ++i) {
    const AxisAngle a = rng.axis_angle(0.05, 3.0);
    const Mrp m = mrp_from_rot(rot_from_axis_angle(a));
    CHECK(m.sigma.norm() <= 1.0 + 1e-12);  // principal set
    CHECK(max_abs_diff(rot_from_mrp(m).mat(), rot_from_axis_angle(a).mat()) < 1e-10);
  }
}

TEST_CASE("CRP <-> MRP conversion and Jacobians") {
  CHECK(max_abs_diff(crp_to_mrp({kZhat}).sigma, Vec3{0, 0, 1.0 / (1.0 + std::sqrt(2.0))}) <
        1e-15);
  CHECK(crp_to_mrp({kZhat}).sigma.z == doctest::Approx(std::tan(M_PI / 8)).epsilon(1e-14));
  CHECK(max_abs_diff(crp_to_mrp({Vec3{}}).sigma, Vec3{}) == 0.0);
  CHECK(max_abs_diff(mrp_to_crp({Vec3{}}).q, Vec3{}) == 0.0);
  CHECK_THROWS_AS(mrp_to_crp({{1.0, 0.0, 0.0}}), MrpAtUnitSphere);

  Rng rng(26);
  for (int i = 0; i < 200; ++i) {
    const Vec3 q = rng.vec(-3, 3);
    CHECK(max_abs_diff(mrp_to_crp(crp_to_mrp({q})).q, q) < 1e-12 * std::max(1.0, q.norm()));
  }

  const CrpMrpJacobians j0 = crp_mrp_jacobians({Vec3{}});
  CHECK(max_abs_diff(j0.dq_dsigma, 2.0 * Mat3::identity()) == 0.0);
  CHECK(max_abs_diff(j0.dsigma_dq, 0.5 * Mat3::identity()) == 0.0);

  for (int i = 0; i < 100; ++i) {
    const Vec3 s = rng.unit_vec() * rng.uniform(0.05, 0.8);
    const CrpMrpJacobians j = crp_mrp_jacobians({s});
    CHECK(max_abs_diff(j.dq_dsigma * j.dsigma_dq, Mat3::identity()) < 1e-12);
  }

  // finite-difference check of dq/dsigma at a fixed point
  const Vec3 s0{0.1, 0.2, 0.0};
  const CrpMrpJacobians j = crp_mrp_jacobians({s0});
  const double h = 1e-6;
  for (int col = 0; col < 3; ++col) {
    Vec3 sp = s0, sm = s0;
    (col == 0 ? sp.x : col == 1 ? sp.y : sp.z) += h;
    (col == 0 ? sm.x : col == 1 ? sm.y : sm.z) -= h;
    const Vec3 qp = mrp_to_crp({sp}).q, qm = mrp_to_crp({sm}).q;
    const Vec3 fd = (qp - qm) / (2.0 * h);
    const Vec3 analytic{j.dq_dsigma(0, col), j.dq_dsigma(1, col), j.dq_dsigma(2, col)};
    CHECK(max_abs_diff(fd, analytic) < 1e-6);
  }
}

TEST_CASE("MRP shadow set") {
  CHECK(max_abs_diff(mrp_shadow({kXhat}).sigma, -kXhat) == 0.0);
  CHECK(max_abs_diff(mrp_shadow({{0, 0, 0.5}}).sigma, Vec3{0, 0, -2.0}) == 0.0);
  CHECK_THROWS_AS(mrp_shadow({Vec3{}}), ZeroMrp);

  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    const Vec3 s = rng.unit_vec() * rng.uniform(0.1, 2.0);
    const Mrp sh = mrp_shadow({s});
    CHECK(testsup::rel_err(s.norm() * sh.sigma.norm(), 1.0) < 1e-13);
    CHECK(max_abs_diff(rot_from_mrp({s}).mat(), rot_from_mrp(sh).mat()) < 1e-12);
  }
}

TEST_CASE("simple rotations") {
  const Rotation m3 = simple_rotation(3, M_PI / 2);
  CHECK(max_abs_diff(Vec3{m3(0, 0), m3(1, 0), m3(2, 0)}, kYhat) < 1e-15);
  for (int p = 1; p <= 3; ++p) {
    CHECK(max_abs_diff(simple_rotation(p, 0.0).mat(), Mat3::identity()) == 0.0);
  }
  CHECK(max_abs_diff((simple_rotation(1, 0.8) * simple_rotation(1, -0.8)).mat(),
                     Mat3::identity()) < 1e-15);
  CHECK_THROWS_AS(simple_rotation(4, 0.1), Error);
}

TEST_CASE("3-1-3 Euler angles") {
  CHECK(max_abs_diff(rot_from_euler313({0, 0, 0}).mat(), Mat3::identity()) == 0.0);
  CHECK(max_abs_diff(rot_from_euler313({0.4, 0, 0.3}).mat(), simple_rotation(3, 0.7).mat()) <
        1e-15);
  CHECK(rot_from_euler313({0.3, 0.2, 0.1})(2, 2) == doctest::Approx(std::cos(0.2)).epsilon(1e-14));

  const Euler313 e = euler313_from_rot(rot_from_euler313({0.3, 0.2, 0.1}));
  CHECK(e.phi == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(e.theta == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(e.psi == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(euler313_from_rot(simple_rotation(3, 0.5)), EulerGimbal);

  Rng rng(28);
  for (int i = 0; i < 500; ++i) {
    const Euler313 in{rng.uniform(-3, 3), rng.uniform(0.1, 3.0), rng.uniform(-3, 3)};
    const Euler313 out = euler313_from_rot(rot_from_euler313(in));
    CHECK(std::abs(testsup::wrap_angle_diff(in.phi, out.phi)) < 1e-10);
    CHECK(std::abs(in.theta - out.theta) < 1e-10);
    CHECK(std::abs(testsup::wrap_angle_diff(in.psi, out.psi)) < 1e-10);
  }
}

TEST_CASE("representation consistency across conversions") {
  Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    const AxisAngle a = rng.axis_angle(0.05, 3.0);
    const Rotation r = rot_from_axis_angle(a);
    CHECK(max_abs_diff(rot_from_crp(crp_from_rot(r)).mat(), r.mat()) < 1e-11);
    CHECK(max_abs_diff(rot_from_mrp(mrp_from_rot(r)).mat(), r.mat()) < 1e-11);
    CHECK(max_abs_diff(rot_from_axis_angle(axis_angle_from_rot(r)).mat(), r.mat()) < 1e-11);
    if (std::abs(r(2, 2)) < 1.0 - 1e-6) {
      CHECK(max_abs_diff(rot_from_euler313(euler313_from_rot(r)).mat(), r.mat()) < 1e-11);
    }
  }
}

TEST_CASE("CRP kinematics") {
  // q = 0 reduces to qdot = omega/2
  const Vec3 w{0.3, -0.7, 0.2};
  CHECK(max_abs_diff(crp_rates({Vec3{}}, {w, FrameTag::Primed}), 0.5 * w) == 0.0);
  CHECK(max_abs_diff(crp_rates({Vec3{}}, {w, FrameTag::Unprimed}), 0.5 * w) == 0.0);

  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Crp c{rng.vec(-1.5, 1.5)};
    const Vec3 omega = rng.vec(-2, 2);
    for (FrameTag tag : {FrameTag::Unprimed, FrameTag::Primed}) {
      const Vec3 qdot = crp_rates(c, {omega, tag});
      CHECK(max_abs_diff(omega_from_crp_rates(c, qdot, tag), omega) < 1e-12);
    }
  }
}

TEST_CASE("MRP kinematics") {
  const Vec3 w{0.4, 0.1, -0.9};
  CHECK(max_abs_diff(mrp_rates({Vec3{}}, {w, FrameTag::Primed}), 0.25 * w) == 0.0);

  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const Mrp m{rng.unit_vec() * rng.uniform(0.05, 0.9)};
    const Vec3 omega = rng.vec(-2, 2);
    for (FrameTag tag : {FrameTag::Unprimed, FrameTag::Primed}) {
      const Vec3 sdot = mrp_rates(m, {omega, tag});
      CHECK(max_abs_diff(omega_from_mrp_rates(m, sdot, tag), omega) < 1e-12);
    }
  }
}

TEST_CASE("axis-angle kinematics") {
  Rng rng(33);
  // pure spin about the axis
  const AxisAngle a = rng.axis_angle(0.5, 2.5);
  const AxisAngleRates spin = axis_angle_rates(a, {2.0 * a.axis, FrameTag::Unprimed});
  CHECK(max_abs_diff(spin.axis_rate, Vec3{}) < 1e-13);
  CHECK(spin.angle_rate == doctest::Approx(2.0).epsilon(1e-13));

  // at phi = pi the cotangent term vanishes: axis_rate = -axhat omega / 2
  const Vec3 w{0.3, 0.5, -0.2};
  const AxisAngle api{kXhat, M_PI};
  const AxisAngleRates rpi = axis_angle_rates(api, {w, FrameTag::Unprimed});
  CHECK(max_abs_diff(rpi.axis_rate, -0.5 * (hat(kXhat) * w)) < 1e-13);

  CHECK_THROWS_AS(axis_angle_rates({kXhat, 1e-12}, {w, FrameTag::Unprimed}), AxisRateSingular);

  // the returned axis rate stays perpendicular to the axis
  for (int i = 0; i < 100; ++i) {
    const AxisAngle aa = rng.axis_angle(0.2, 2.9);
    const AxisAngleRates r = axis_angle_rates(aa, {rng.vec(-2, 2), FrameTag::Primed});
    CHECK(std::abs(r.axis_rate.dot(aa.axis)) < 1e-12);
  }
}

TEST_CASE("3-1-3 Euler kinematics") {
  // psi = 0, theta = pi/2: phi_rate = omega'_2
  const Euler313 e{0.7, M_PI / 2, 0.0};
  const Euler313Rates r = euler313_rates(e, {{0.3, 0.8, -0.1}, FrameTag::Primed});
  CHECK(r.phi_rate == doctest::Approx(0.8).epsilon(1e-13));

  // spin about the third body axis
  const Euler313 e2{0.3, 1.1, -0.4};
  const Euler313Rates r2 = euler313_rates(e2, {{0, 0, 2.5}, FrameTag::Primed});
  CHECK(std::abs(r2.phi_rate) < 1e-13);
  CHECK(std::abs(r2.theta_rate) < 1e-13);
  CHECK(r2.psi_rate == doctest::Approx(2.5).epsilon(1e-13));

  CHECK_NOTHROW(euler313_rates({0.1, M_PI / 2 - 1e-12, 0.2}, {{1, 1, 1}, FrameTag::Primed}));
  CHECK_THROWS_AS(euler313_rates({0.1, 1e-12, 0.2}, {{1, 1, 1}, FrameTag::Primed}), EulerGimbal);

  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const Euler313 ee{rng.uniform(-3, 3), rng.uniform(0.1, 3.0), rng.uniform(-3, 3)};
    const Vec3 omega = rng.vec(-2, 2);
    for (FrameTag tag : {FrameTag::Unprimed, FrameTag::Primed}) {
      const Euler313Rates rr = euler313_rates(ee, {omega, tag});
      CHECK(max_abs_diff(omega_from_euler313(ee, rr, tag), omega) < 1e-12);
    }
  }
}

TEST_CASE("omega from a rotation and its derivative") {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const Rotation r = rot_from_axis_angle(rng.axis_angle());
    const Vec3 w = rng.vec(-2, 2);
    const Mat3 rdot = hat(w).mat() * r.mat();
    const RotationRates rr = omega_from_rotation_pair(r, rdot);
    CHECK(max_abs_diff(rr.unprimed.omega, w) < 1e-12);
    // primed components relate through the rotation itself
    CHECK(max_abs_diff(r * rr.primed.omega, w) < 1e-12);
  }
  const Rotation r = rot_from_axis_angle(rng.axis_angle());
  CHECK(max_abs_diff(omega_from_rotation_pair(r, Mat3::zero()).unprimed.omega, Vec3{}) == 0.0);
}

// Central-difference oracle along the exact rotation history R(t) generated
// by a constant angular velocity; validates every rate equation end to end.
TEST_CASE("rate equations match the rotation-history finite-difference oracle") {
  Rng rng(36);
  const double dt = 1e-5;
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const AxisAngle a0 = rng.axis_angle(0.3, 2.6);
    const Rotation r0 = rot_from_axis_angle(a0);
    const FrameTag tag = (i % 2 == 0) ? FrameTag::Unprimed : FrameTag::Primed;
    const AngularVelocity w{rng.unit_vec() * rng.uniform(0.2, 1.5), tag};
    const Rotation rp = rotation_at(r0, w, dt);
    const Rotation rm = rotation_at(r0, w, -dt);

    // CRP
    {
      const Crp q0 = crp_from_rot(r0);
      const Vec3 fd = (crp_from_rot(rp).q - crp_from_rot(rm).q) / (2.0 * dt);
      const Vec3 an = crp_rates(q0, w);
      CHECK(max_abs_diff(fd, an) / std::max(1.0, an.norm()) < 1e-5);
    }
    // MRP
    {
      const Mrp s0 = mrp_from_rot(r0);
      const Vec3 fd = (mrp_from_rot(rp).sigma - mrp_from_rot(rm).sigma) / (2.0 * dt);
      const Vec3 an = mrp_rates(s0, w);
      CHECK(max_abs_diff(fd, an) / std::max(1.0, an.norm()) < 1e-5);
    }
    // axis-angle
    {
      const AxisAngle ap = axis_angle_from_rot(rp);
      const AxisAngle am = axis_angle_from_rot(rm);
      const AxisAngleRates an = axis_angle_rates(a0, w);
      CHECK(std::abs((ap.angle - am.angle) / (2.0 * dt) - an.angle_rate) < 1e-5);
      CHECK(max_abs_diff((ap.axis - am.axis) / (2.0 * dt), an.axis_rate) /
                std::max(1.0, an.axis_rate.norm()) <
            1e-5);
    }
    // 3-1-3
    if (std::abs(r0(2, 2)) < 1.0 - 1e-3) {
      const Euler313 e0 = euler313_from_rot(r0);
      const Euler313 ep = euler313_from_rot(rp);
      const Euler313 em = euler313_from_rot(rm);
      const Euler313Rates an = euler313_rates(e0, w);
      CHECK(std::abs((ep.phi - em.phi) / (2.0 * dt) - an.phi_rate) /
                std::max(1.0, std::abs(an.phi_rate)) <
            1e-5);
      CHECK(std::abs((ep.theta - em.theta) / (2.0 * dt) - an.theta_rate) /
                std::max(1.0, std::abs(an.theta_rate)) <
            1e-5);
      CHECK(std::abs((ep.psi - em.psi) / (2.0 * dt) - an.psi_rate) /
                std::max(1.0, std::abs(an.psi_rate)) <
            1e-5);
    }
    ++checked;
  }
  CHECK(checked == 100);
}

// A vector fixed in the rotating basis transports as udot = omega x u.
TEST_CASE("kinematic transport consistency") {
  Rng rng(37);
  const double dt = 1e-6;
  for (int i = 0; i < 50; ++i) {
    const Rotation r0 = rot_from_axis_angle(rng.axis_angle());
    const AngularVelocity w{rng.vec(-1, 1), FrameTag::Unprimed};
    const Vec3 u_body = rng.vec(-2, 2);  // constant components in the rotating basis
    const Vec3 u0 = r0 * u_body;
    const Vec3 up = rotation_at(r0, w, dt) * u_body;
    const Vec3 um = rotation_at(r0, w, -dt) * u_body;
    const Vec3 fd = (up - um) / (2.0 * dt);
    CHECK(max_abs_diff(fd, w.omega.cross(u0)) / std::max(1.0, u0.norm()) < 1e-8);
  }
}

TEST_CASE("tagged attitude variant resolves to a rotation") {
  const AttitudeRep rep = Crp{kZhat};
  CHECK(max_abs_diff(rotation_of(rep).mat(), simple_rotation(3, M_PI / 2).mat()) < 1e-15);
}
