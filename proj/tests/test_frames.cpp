#include <doctest.h>

#include <cmath>

#include "orbkit/attitude.hpp"
#include "orbkit/elements.hpp"
#include "orbkit/frames.hpp"
#include "orbkit/propagate.hpp"
#include "support.hpp"

using namespace orbkit;
using testsup::Rng;
using testsup::max_abs_diff;

namespace {

void check_basis(const Basis& b) {
  CHECK(std::abs(b.e1.norm() - 1.0) < 1e-12);
  CHECK(std::abs(b.e2.norm() - 1.0) < 1e-12);
  CHECK(std::abs(b.e3.norm() - 1.0) < 1e-12);
  CHECK(std::abs(b.e1.dot(b.e2)) < 1e-12);
  CHECK(std::abs(b.e1.dot(b.e3)) < 1e-12);
  CHECK(std::abs(b.e2.dot(b.e3)) < 1e-12);
  CHECK(b.e1.cross(b.e2).dot(b.e3) > 0.0);
}

struct Accel {
  double a1, a2, a3;
};

/// Two-body motion plus a perturbing acceleration given in LVLH components,
/// integrated in Cartesian coordinates (canonical mu = 1).
Trajectory propagate_cartesian(const Vec3& r0, const Vec3& v0, const Accel& a, double tf,
                               int samples) {
  const OdeRhs rhs = [&a](double, std::span<const double> y, std::span<double> dy) {
    const Vec3 r{y[0], y[1], y[2]};
    const Vec3 v{y[3], y[4], y[5]};
    const Basis u = lvlh_basis(r, v);
    const Vec3 acc =
        -1.0 / r.norm2() * r.normalized() + a.a1 * u.e1 + a.a2 * u.e2 + a.a3 * u.e3;
    dy[0] = v.x; dy[1] = v.y; dy[2] = v.z;
    dy[3] = acc.x; dy[4] = acc.y; dy[5] = acc.z;
  };
  const std::array<double, 6> y0{r0.x, r0.y, r0.z, v0.x, v0.y, v0.z};
  return integrate_sampled(rhs, y0, 0.0, tf, samples);
}

}  // namespace

TEST_CASE("LVLH basis") {
  const Basis b = lvlh_basis({1, 0, 0}, {0, 1, 0});
  CHECK(max_abs_diff(b.e1, kXhat) == 0.0);
  CHECK(max_abs_diff(b.e2, kYhat) == 0.0);
  CHECK(max_abs_diff(b.e3, kZhat) == 0.0);

  const Basis b2 = lvlh_basis({0, 1, 0}, {-1, 0, 0});
  CHECK(max_abs_diff(b2.e1, kYhat) == 0.0);
  CHECK(max_abs_diff(b2.e3, kZhat) == 0.0);
  CHECK(max_abs_diff(b2.e2, -kXhat) == 0.0);

  CHECK_THROWS_AS(lvlh_basis({1, 0, 0}, {2, 0, 0}), DegenerateOrbit);

  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const CartesianState s = coe_to_cartesian(rng.coe());
    check_basis(lvlh_basis(s.r, s.v));
  }
}

TEST_CASE("conserved vectors") {
  const ConservedVectors circ = conserved_vectors({1, 0, 0}, {0, 1, 0}, 1.0);
  CHECK(max_abs_diff(circ.e, Vec3{}) < 1e-15);
  CHECK(max_abs_diff(circ.h, kZhat) == 0.0);

  const ConservedVectors ell = conserved_vectors({1, 0, 0}, {0, 1.1, 0}, 1.0);
  CHECK(max_abs_diff(ell.e, Vec3{0.21, 0, 0}) < 1e-15);

  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const CartesianState s = coe_to_cartesian(rng.coe());
    const ConservedVectors cv = conserved_vectors(s.r, s.v, s.mu);
    const double scale = cv.h.norm() * std::max(cv.e.norm(), 1e-3);
    CHECK(std::abs(cv.h.dot(cv.e)) / scale < 1e-10);
    CHECK(std::abs(cv.h.dot(cv.k)) / std::max(1e-12, cv.h.norm() * cv.k.norm()) < 1e-10);
    CHECK(std::abs(cv.e.dot(cv.k)) / std::max(1e-12, cv.e.norm() * cv.k.norm()) < 1e-10);
  }
}

TEST_CASE("perifocal basis") {
  const ConservedVectors eq = conserved_vectors({1.2, 0, 0}, {0, 1.0, 0}, 1.0);
  const Basis b = perifocal_basis(eq);  // periapse state: e along +x
  CHECK(max_abs_diff(b.e1, kXhat) < 1e-14);
  CHECK(max_abs_diff(b.e3, kZhat) < 1e-14);

  CHECK_THROWS_AS(perifocal_basis(conserved_vectors({1, 0, 0}, {0, 1, 0}, 1.0)), CircularOrbit);

  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const CoeSet c = rng.coe();
    const CartesianState s = coe_to_cartesian(c);
    const ConservedVectors cv = conserved_vectors(s.r, s.v, s.mu);
    const Basis pf = perifocal_basis(cv);
    check_basis(pf);
    // periapse direction reproduces the eccentricity vector
    CHECK(max_abs_diff(pf.e1 * cv.e.norm(), cv.e) < 1e-10);
  }
}

TEST_CASE("line of nodes") {
  CHECK_THROWS_AS(line_of_nodes(kZhat), EquatorialOrbit);
  const double inc = 0.5;
  const Vec3 h{0.0, -std::sin(inc), std::cos(inc)};
  CHECK(max_abs_diff(line_of_nodes(h), kXhat) < 1e-15);

  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    const CartesianState s = coe_to_cartesian(rng.coe());
    const Vec3 n = line_of_nodes(s.r.cross(s.v));
    CHECK(std::abs(n.dot(kZhat)) < 1e-15);
  }
}

TEST_CASE("equinoctial basis from the two CRPs") {
  const Basis b0 = equinoctial_basis_from_q(0.0, 0.0);
  CHECK(max_abs_diff(b0.e1, kXhat) == 0.0);
  CHECK(max_abs_diff(b0.e3, kZhat) == 0.0);

  // q1 = 1, q2 = 0 corresponds to i = pi/2: the 3-3 entry is cos(i) = 0
  const Basis b1 = equinoctial_basis_from_q(1.0, 0.0);
  CHECK(std::abs(b1.e3.z) < 1e-15);
  check_basis(b1);

  Rng rng(45);
  for (int i = 0; i < 100; ++i) {
    const double q1 = rng.uniform(-1.5, 1.5), q2 = rng.uniform(-1.5, 1.5);
    const Basis b = equinoctial_basis_from_q(q1, q2);
    check_basis(b);
    const auto [p1, p2] = crp_from_hhat(b.e3);
    CHECK(std::abs(p1 - q1) < 1e-12 * std::max(1.0, std::abs(q1)));
    CHECK(std::abs(p2 - q2) < 1e-12 * std::max(1.0, std::abs(q2)));
  }
}

TEST_CASE("equinoctial CRPs from the orbit normal") {
  const auto [q1, q2] = crp_from_hhat(kZhat);
  CHECK(q1 == 0.0);
  CHECK(q2 == 0.0);

  const double inc = 0.6;
  const auto [p1, p2] = crp_from_hhat({0.0, -std::sin(inc), std::cos(inc)});
  CHECK(p1 == doctest::Approx(std::tan(0.3)).epsilon(1e-13));
  CHECK(p2 == 0.0);

  CHECK_THROWS_AS(crp_from_hhat(-kZhat), RetrogradeEquatorial);
}

TEST_CASE("shared third axis of the three bases") {
  Rng rng(46);
  for (int i = 0; i < 50; ++i) {
    const CoeSet c = rng.coe();
    const CartesianState s = coe_to_cartesian(c);
    const Vec3 hhat = s.r.cross(s.v).normalized();
    const Basis u = lvlh_basis(s.r, s.v);
    const Basis o = perifocal_basis(conserved_vectors(s.r, s.v, s.mu));
    const auto [q1, q2] = crp_from_hhat(hhat);
    const Basis sb = equinoctial_basis_from_q(q1, q2);
    CHECK(max_abs_diff(u.e3, hhat) < 1e-11);
    CHECK(max_abs_diff(o.e3, hhat) < 1e-11);
    CHECK(max_abs_diff(sb.e3, hhat) < 1e-11);
  }
}

TEST_CASE("basis relations through the true anomaly and true longitude") {
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    const CoeSet c = rng.coe();
    const CartesianState s = coe_to_cartesian(c);
    const Basis u = lvlh_basis(s.r, s.v);
    const Basis o = perifocal_basis(conserved_vectors(s.r, s.v, s.mu));
    const auto [q1, q2] = crp_from_hhat(s.r.cross(s.v).normalized());
    const Basis sb = equinoctial_basis_from_q(q1, q2);

    // u_i = R3(nu) . o_i, as matrices [u] = [o] M3(nu)
    const Mat3 u_from_o = o.as_rotation().mat() * simple_rotation(3, c.nu).mat();
    CHECK(max_abs_diff(u_from_o, u.as_rotation().mat()) < 1e-10);

    const double l = c.raan + c.argp + c.nu;
    const Mat3 u_from_s = sb.as_rotation().mat() * simple_rotation(3, l).mat();
    CHECK(max_abs_diff(u_from_s, u.as_rotation().mat()) < 1e-10);
  }
}

TEST_CASE("euler-angle form of the LVLH attitude") {
  Rng rng(48);
  for (int i = 0; i < 50; ++i) {
    const CoeSet c = rng.coe();
    const CartesianState s = coe_to_cartesian(c);
    const Basis u = lvlh_basis(s.r, s.v);
    const Rotation r313 = rot_from_euler313({c.raan, c.i, c.argp + c.nu});
    CHECK(max_abs_diff(r313.mat(), u.as_rotation().mat()) < 1e-10);
  }
}

TEST_CASE("LVLH angular velocity") {
  CHECK(max_abs_diff(lvlh_omega(2.0, 3.0, {0, 0, 0}), Vec3{0, 0, 0.75}) == 0.0);
  // only the normal component enters the first term
  CHECK(max_abs_diff(lvlh_omega(2.0, 3.0, {0.0, 0.5, 0.0}), lvlh_omega(2.0, 3.0, {0, 0, 0})) ==
        0.0);
  CHECK(lvlh_omega(2.0, 3.0, {0, 0, 0.4}).y == 0.0);
}

TEST_CASE("perifocal angular velocity") {
  const CoeSet c{1.3, 0.4, 0.9, 0.3, 0.7, 1.1, 1.0};
  const CoeAux x = coe_aux(c);
  CHECK(max_abs_diff(perifocal_omega(x.r, x.h, x.p, c.e, c.nu, {0, 0, 0}), Vec3{}) == 0.0);
  // radial forcing feeds only the third component
  const Vec3 w = perifocal_omega(x.r, x.h, x.p, c.e, c.nu, {0.3, 0, 0});
  CHECK(w.x == 0.0);
  CHECK(w.y == 0.0);
  CHECK_THROWS_AS(perifocal_omega(x.r, x.h, x.p, 1e-12, c.nu, {0.3, 0, 0}), CircularOrbit);
}

TEST_CASE("equinoctial angular velocity, CRP and MRP forms") {
  CHECK(max_abs_diff(equinoctial_omega_crp(0.3, -0.2, 1.1, 0.8, 0.0), Vec3{}) == 0.0);
  CHECK(equinoctial_omega_crp(0.0, 0.0, 0.7, 0.9, 0.4).z == 0.0);
  CHECK_THROWS_AS(equinoctial_omega_mrp(0.8, 0.61, 0.0, 1.0, 1.0), KinematicSingularity);

  Rng rng(49);
  for (int i = 0; i < 100; ++i) {
    const double inc = rng.uniform(0.0, 2.0);
    const double raan = rng.uniform(-3, 3);
    const double q1 = std::tan(inc / 2) * std::cos(raan), q2 = std::tan(inc / 2) * std::sin(raan);
    const double s1 = std::tan(inc / 4) * std::cos(raan), s2 = std::tan(inc / 4) * std::sin(raan);
    const double l = rng.uniform(-6, 6), rh = rng.uniform(0.5, 2.0), an = rng.uniform(-2, 2);
    const Vec3 wq = equinoctial_omega_crp(q1, q2, l, rh, an);
    const Vec3 ws = equinoctial_omega_mrp(s1, s2, l, rh, an);
    CHECK(max_abs_diff(wq, ws) < 1e-12 * std::max(1.0, wq.norm()));
  }
}

// Finite-difference the LVLH, perifocal, and equinoctial bases along a
// perturbed trajectory and compare the extracted angular velocity against
// the closed forms.
TEST_CASE("angular velocity oracle along a perturbed trajectory") {
  const CoeSet c0{1.0, 0.3, 0.8, 0.4, 0.9, 0.7, 1.0};
  const CartesianState s0 = coe_to_cartesian(c0);
  const Accel pert{3e-3, -2e-3, 4e-3};

  const double dt = 1e-5;
  const Trajectory traj = propagate_cartesian(s0.r, s0.v, pert, 2.0 * dt, 2);
  const auto state_at = [&](int k) {
    return CartesianState{{traj.states[k][0], traj.states[k][1], traj.states[k][2]},
                          {traj.states[k][3], traj.states[k][4], traj.states[k][5]},
                          1.0};
  };
  const CartesianState sm = state_at(0), s1 = state_at(1), sp = state_at(2);

  // LVLH
  {
    const Mat3 rdot =
        (lvlh_basis(sp.r, sp.v).as_rotation().mat() - lvlh_basis(sm.r, sm.v).as_rotation().mat()) *
        (1.0 / (2.0 * dt));
    const RotationRates rr = omega_from_rotation_pair(lvlh_basis(s1.r, s1.v).as_rotation(), rdot);
    const CoeFromCartesian cc = cartesian_to_coe(s1);
    const CoeAux aux = coe_aux(cc.coe);
    const Vec3 analytic = lvlh_omega(aux.r, aux.h, {pert.a1, pert.a2, pert.a3});
    CHECK(max_abs_diff(rr.primed.omega, analytic) / analytic.norm() < 1e-5);
  }
  // perifocal
  {
    const auto basis_of = [](const CartesianState& s) {
      return perifocal_basis(conserved_vectors(s.r, s.v, s.mu)).as_rotation();
    };
    const Mat3 rdot = (basis_of(sp).mat() - basis_of(sm).mat()) * (1.0 / (2.0 * dt));
    const RotationRates rr = omega_from_rotation_pair(basis_of(s1), rdot);
    const CoeFromCartesian cc = cartesian_to_coe(s1);
    const CoeAux aux = coe_aux(cc.coe);
    const Vec3 analytic =
        perifocal_omega(aux.r, aux.h, aux.p, cc.coe.e, cc.coe.nu, {pert.a1, pert.a2, pert.a3});
    CHECK(max_abs_diff(rr.primed.omega, analytic) / std::max(1e-6, analytic.norm()) < 1e-5);
  }
  // equinoctial
  {
    const auto basis_of = [](const CartesianState& s) {
      const auto [q1, q2] = crp_from_hhat(s.r.cross(s.v).normalized());
      return equinoctial_basis_from_q(q1, q2).as_rotation();
    };
    const Mat3 rdot = (basis_of(sp).mat() - basis_of(sm).mat()) * (1.0 / (2.0 * dt));
    const RotationRates rr = omega_from_rotation_pair(basis_of(s1), rdot);
    const MeeSet mee = cartesian_to_mee(s1);
    const double w = 1.0 + mee.e1 * std::cos(mee.l) + mee.e2 * std::sin(mee.l);
    const double rh = std::sqrt(mee.p) / w;
    const Vec3 analytic = equinoctial_omega_crp(mee.q1, mee.q2, mee.l, rh, pert.a3);
    CHECK(max_abs_diff(rr.primed.omega, analytic) / std::max(1e-6, analytic.norm()) < 1e-5);
  }
}

TEST_CASE("conserved vectors hold along a Kepler arc") {
  const CoeSet c0{1.0, 0.35, 1.1, -0.4, 1.3, 0.2, 1.0};
  const CartesianState s0 = coe_to_cartesian(c0);
  const double period = 2.0 * M_PI * std::sqrt(c0.a * c0.a * c0.a);
  const Trajectory traj = propagate_cartesian(s0.r, s0.v, {0, 0, 0}, 10.0 * period, 40);
  const ConservedVectors cv0 = conserved_vectors(s0.r, s0.v, 1.0);
  for (const auto& y : traj.states) {
    const ConservedVectors cv = conserved_vectors({y[0], y[1], y[2]}, {y[3], y[4], y[5]}, 1.0);
    CHECK(max_abs_diff(cv.h, cv0.h) < 1e-9);
    CHECK(max_abs_diff(cv.e, cv0.e) < 1e-9);
    CHECK(max_abs_diff(cv.k, cv0.k) < 1e-9);
  }
}
