#include "orbkit/elements.hpp"

#include <cmath>

#include "orbkit/attitude.hpp"
#include "orbkit/frames.hpp"

namespace orbkit {

namespace {

constexpr double kCircularTol = 1e-10;
constexpr double kSplitTol = 1e-14;

double wrap_pi(double x) {
  double y = std::remainder(x, 2.0 * M_PI);
  if (y <= -M_PI) y += 2.0 * M_PI;
  return y;
}

}  // namespace

CoeAux coe_aux(const CoeSet& c) {
  CoeAux x;
  x.p = c.a * (1.0 - c.e * c.e);
  x.h = std::sqrt(c.mu * x.p);
  x.w = 1.0 + c.e * std::cos(c.nu);
  x.r = x.p / x.w;
  x.n = std::sqrt(c.mu / (c.a * c.a * c.a));
  x.b = std::sqrt(c.a * x.p);
  x.theta = c.argp + c.nu;
  x.energy = -0.5 * c.mu / c.a;
  return x;
}

CartesianState coe_to_cartesian(const CoeSet& c) {
  const CoeAux x = coe_aux(c);
  const Vec3 r_pf{x.r * std::cos(c.nu), x.r * std::sin(c.nu), 0.0};
  const double muh = c.mu / x.h;
  const Vec3 v_pf{-muh * std::sin(c.nu), muh * (c.e + std::cos(c.nu)), 0.0};
  const Rotation R = rot_from_euler313({c.raan, c.i, c.argp});
  return {R * r_pf, R * v_pf, c.mu};
}

CoeFromCartesian cartesian_to_coe(const CartesianState& s) {
  const Vec3 h = s.r.cross(s.v);
  const double rn = s.r.norm();
  if (rn <= 0.0 || h.norm() <= 1e-12 * rn * s.v.norm()) throw DegenerateOrbit();

  const double inv_a = 2.0 / rn - s.v.norm2() / s.mu;
  if (inv_a <= 0.0) throw HyperbolicPoint();

  const Vec3 evec = s.v.cross(h) / s.mu - s.r / rn;
  const double e = evec.norm();
  const Vec3 hhat = h.normalized();
  const Vec3 rhat = s.r / rn;

  CoeFromCartesian out;
  out.coe.mu = s.mu;
  out.coe.a = 1.0 / inv_a;
  out.coe.e = e;
  out.coe.i = std::atan2(std::hypot(h.x, h.y), h.z);
  out.circular = e <= kCircularTol;
  out.equatorial = kZhat.cross(h).norm() <= 1e-12 * h.norm();

  if (!out.equatorial) {
    const Vec3 nhat = kZhat.cross(h).normalized();
    out.coe.raan = std::atan2(nhat.y, nhat.x);
    if (!out.circular) {
      const Vec3 ehat = evec / e;
      out.coe.argp = std::atan2(nhat.cross(ehat).dot(hhat), nhat.dot(ehat));
      out.coe.nu = std::atan2(ehat.cross(rhat).dot(hhat), ehat.dot(rhat));
    } else {
      out.coe.argp = 0.0;
      out.coe.nu = std::atan2(nhat.cross(rhat).dot(hhat), nhat.dot(rhat));
    }
  } else {
    out.coe.raan = 0.0;
    if (!out.circular) {
      const Vec3 ehat = evec / e;
      out.coe.argp = std::atan2(kXhat.cross(ehat).dot(hhat), kXhat.dot(ehat));
      out.coe.nu = std::atan2(ehat.cross(rhat).dot(hhat), ehat.dot(rhat));
    } else {
      out.coe.argp = 0.0;
      out.coe.nu = std::atan2(kXhat.cross(rhat).dot(hhat), kXhat.dot(rhat));
    }
  }
  return out;
}

MeeSet coe_to_mee(const CoeSet& c) {
  if (c.i >= M_PI - 1e-9) throw MeeSingular();
  const double vp = c.raan + c.argp;
  const double th = std::tan(0.5 * c.i);
  return {c.a * (1.0 - c.e * c.e),
          c.e * std::cos(vp), c.e * std::sin(vp),
          th * std::cos(c.raan), th * std::sin(c.raan),
          c.raan + c.argp + c.nu, c.mu};
}

MrpMeeSet coe_to_mrpmee(const CoeSet& c) {
  const double vp = c.raan + c.argp;
  const double tq = std::tan(0.25 * c.i);
  return {c.a * (1.0 - c.e * c.e),
          c.e * std::cos(vp), c.e * std::sin(vp),
          tq * std::cos(c.raan), tq * std::sin(c.raan),
          c.raan + c.argp + c.nu, c.mu};
}

namespace {

CoeFromEquinoctial equinoctial_to_coe(double p, double e1, double e2, double g1, double g2,
                                      double l, double mu, bool mrp) {
  CoeFromEquinoctial out;
  const double e = std::hypot(e1, e2);
  const double g = std::hypot(g1, g2);
  out.circular = e <= kSplitTol;
  out.equatorial = g <= kSplitTol;

  const double raan = out.equatorial ? 0.0 : std::atan2(g2, g1);
  const double varpi = out.circular ? raan : std::atan2(e2, e1);

  out.coe.mu = mu;
  out.coe.a = p / (1.0 - e * e);
  out.coe.e = e;
  out.coe.i = mrp ? 4.0 * std::atan(g) : 2.0 * std::atan(g);
  out.coe.raan = raan;
  out.coe.argp = wrap_pi(varpi - raan);
  out.coe.nu = l - varpi;  // keeps l's revolution count in nu
  return out;
}

}  // namespace

CoeFromEquinoctial mee_to_coe(const MeeSet& m) {
  return equinoctial_to_coe(m.p, m.e1, m.e2, m.q1, m.q2, m.l, m.mu, false);
}

CoeFromEquinoctial mrpmee_to_coe(const MrpMeeSet& m) {
  return equinoctial_to_coe(m.p, m.e1, m.e2, m.sigma1, m.sigma2, m.l, m.mu, true);
}

MrpMeeSet mee_to_mrpmee(const MeeSet& m) {
  const double q2 = m.q1 * m.q1 + m.q2 * m.q2;
  const double f = 1.0 / (1.0 + std::sqrt(1.0 + q2));
  return {m.p, m.e1, m.e2, f * m.q1, f * m.q2, m.l, m.mu};
}

MeeSet mrpmee_to_mee(const MrpMeeSet& m) {
  const double s2 = m.sigma1 * m.sigma1 + m.sigma2 * m.sigma2;
  if (std::abs(1.0 - s2) <= 1e-9) throw MrpAtUnitSphere();
  const double f = 2.0 / (1.0 - s2);
  return {m.p, m.e1, m.e2, f * m.sigma1, f * m.sigma2, m.l, m.mu};
}

namespace {

CartesianState equinoctial_to_cartesian(double p, double e1, double e2, const Basis& s_basis,
                                        double l, double mu) {
  const double w = 1.0 + e1 * std::cos(l) + e2 * std::sin(l);
  if (w <= 0.0) throw HyperbolicPoint();
  const double r = p / w;
  const double muh = mu / std::sqrt(mu * p);
  const Vec3 rvec = r * std::cos(l) * s_basis.e1 + r * std::sin(l) * s_basis.e2;
  const Vec3 vvec = -muh * (e2 + std::sin(l)) * s_basis.e1 + muh * (e1 + std::cos(l)) * s_basis.e2;
  return {rvec, vvec, mu};
}

}  // namespace

CartesianState mee_to_cartesian(const MeeSet& m) {
  return equinoctial_to_cartesian(m.p, m.e1, m.e2, equinoctial_basis_from_q(m.q1, m.q2), m.l,
                                  m.mu);
}

CartesianState mrpmee_to_cartesian(const MrpMeeSet& m) {
  const Rotation R = rot_from_mrp({{m.sigma1, m.sigma2, 0.0}});
  const Basis s_basis{{R(0, 0), R(1, 0), R(2, 0)},
                      {R(0, 1), R(1, 1), R(2, 1)},
                      {R(0, 2), R(1, 2), R(2, 2)}};
  return equinoctial_to_cartesian(m.p, m.e1, m.e2, s_basis, m.l, m.mu);
}

MeeSet cartesian_to_mee(const CartesianState& s) {
  const ConservedVectors cv = conserved_vectors(s.r, s.v, s.mu);
  const auto [q1, q2] = crp_from_hhat(cv.h.normalized());
  const Basis sb = equinoctial_basis_from_q(q1, q2);
  const Vec3 rhat = s.r.normalized();
  return {cv.h.norm2() / s.mu,
          cv.e.dot(sb.e1), cv.e.dot(sb.e2),
          q1, q2,
          std::atan2(rhat.dot(sb.e2), rhat.dot(sb.e1)), s.mu};
}

MrpMeeSet cartesian_to_mrpmee(const CartesianState& s) {
  return mee_to_mrpmee(cartesian_to_mee(s));
}

double kepler_longitude(double lambda, double e1, double e2) {
  double eps = lambda;
  for (int it = 0; it < 50; ++it) {
    const double f = eps - e1 * std::sin(eps) + e2 * std::cos(eps) - lambda;
    if (std::abs(f) < 1e-13) return eps;
    const double fp = 1.0 - e1 * std::cos(eps) - e2 * std::sin(eps);
    eps -= f / fp;
  }
  const double f = eps - e1 * std::sin(eps) + e2 * std::cos(eps) - lambda;
  if (std::abs(f) < 1e-12) return eps;
  throw NoConvergence("equinoctial Kepler iteration did not converge");
}

Anomalies anomalies_from_coe(const CoeSet& c) {
  Anomalies an;
  an.nu = c.nu;
  double E = 2.0 * std::atan2(std::sqrt(1.0 - c.e) * std::sin(0.5 * c.nu),
                              std::sqrt(1.0 + c.e) * std::cos(0.5 * c.nu));
  E += 2.0 * M_PI * std::round((c.nu - E) / (2.0 * M_PI));  // keep E on nu's branch
  an.E = E;
  an.M = E - c.e * std::sin(E);
  an.lambda = c.raan + c.argp + an.M;
  an.epsilon = c.raan + c.argp + an.E;
  return an;
}

std::array<double, 2> costate_mrp_to_crp(const std::array<double, 2>& lam_sigma, double sigma1,
                                         double sigma2) {
  const CrpMrpJacobians j = crp_mrp_jacobians({{sigma1, sigma2, 0.0}});
  // gamma = (d sigma / d q)^T lambda, restricted to the 2x2 block.
  return {j.dsigma_dq(0, 0) * lam_sigma[0] + j.dsigma_dq(1, 0) * lam_sigma[1],
          j.dsigma_dq(0, 1) * lam_sigma[0] + j.dsigma_dq(1, 1) * lam_sigma[1]};
}

std::array<double, 2> costate_crp_to_mrp(const std::array<double, 2>& gamma_q, double sigma1,
                                         double sigma2) {
  const CrpMrpJacobians j = crp_mrp_jacobians({{sigma1, sigma2, 0.0}});
  return {j.dq_dsigma(0, 0) * gamma_q[0] + j.dq_dsigma(1, 0) * gamma_q[1],
          j.dq_dsigma(0, 1) * gamma_q[0] + j.dq_dsigma(1, 1) * gamma_q[1]};
}

}  // namespace orbkit
