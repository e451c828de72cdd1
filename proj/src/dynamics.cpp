#include "orbkit/dynamics.hpp"

#include <cmath>
#include <string>

namespace orbkit {

ElementRates coe_rates(const CoeSet& c, const LvlhAccel& a, AnomalyChoice phase) {
  std::string singular;
  if (c.e <= 1e-9) singular = "argp, phase (1/e)";
  if (std::sin(c.i) <= 1e-9) singular += singular.empty() ? "raan, argp (1/sin i)"
                                                          : "; raan, argp (1/sin i)";
  if (!singular.empty()) throw CoeSingular(singular);

  const CoeAux x = coe_aux(c);
  const double rh = x.r / x.h;
  const double sn = std::sin(c.nu), cn = std::cos(c.nu);
  const double sth = std::sin(x.theta), cth = std::cos(x.theta);

  ElementRates out;
  out[0] = 2.0 * (c.a * c.a / x.h) * (c.e * sn * a.a1 + x.w * a.a2);
  out[1] = rh * (x.w * sn * a.a1 + ((x.w + 1.0) * cn + c.e) * a.a2);
  out[2] = rh * cth * a.a3;
  out[3] = rh * (sth / std::sin(c.i)) * a.a3;
  out[4] = rh * ((1.0 / c.e) * (-x.w * cn * a.a1 + (x.w + 1.0) * sn * a.a2) -
                 (sth / std::tan(c.i)) * a.a3);
  switch (phase) {
    case AnomalyChoice::TrueAnomaly:
      out[5] = (rh / c.e) * (x.w * cn * a.a1 - (x.w + 1.0) * sn * a.a2) + x.h / (x.r * x.r);
      break;
    case AnomalyChoice::MeanAnomaly:
      out[5] = (x.r * x.b / (x.h * c.a * c.e)) *
                   ((x.w * cn - 2.0 * c.e) * a.a1 - (x.w + 1.0) * sn * a.a2) +
               x.n;
      break;
    case AnomalyChoice::EccentricAnomaly:
      out[5] = (1.0 / (x.n * c.a * c.e)) *
                   ((cn - c.e) * a.a1 - (1.0 + x.r / c.a) * sn * a.a2) +
               (c.a / x.r) * x.n;
      break;
  }
  return out;
}

namespace {

ElementRates assemble(const BMatrix& B, double r_over_h, double k6, const LvlhAccel& a) {
  ElementRates out;
  for (int i = 0; i < 6; ++i) {
    out[i] = r_over_h * (B.rows[i][0] * a.a1 + B.rows[i][1] * a.a2 + B.rows[i][2] * a.a3);
  }
  out[5] += k6;
  return out;
}

}  // namespace

BMatrix b_matrix(const MrpMeeSet& x) {
  const double s2 = x.sigma1 * x.sigma1 + x.sigma2 * x.sigma2;
  if (s2 >= 1.0 - 1e-9) throw KinematicSingularity();
  const double sl = std::sin(x.l), cl = std::cos(x.l);
  const double w = 1.0 + x.e1 * cl + x.e2 * sl;

  BMatrix B;
  B.b6 = (2.0 / (1.0 - s2)) * (x.sigma1 * sl - x.sigma2 * cl);
  B.b4 = 0.25 * (1.0 + s2) * (cl - x.sigma2 * B.b6);
  B.b5 = 0.25 * (1.0 + s2) * (sl + x.sigma1 * B.b6);
  B.rows[0] = {0.0, 2.0 * x.p, 0.0};
  B.rows[1] = {w * sl, (w + 1.0) * cl + x.e1, -x.e2 * B.b6};
  B.rows[2] = {-w * cl, (w + 1.0) * sl + x.e2, x.e1 * B.b6};
  B.rows[3] = {0.0, 0.0, B.b4};
  B.rows[4] = {0.0, 0.0, B.b5};
  B.rows[5] = {0.0, 0.0, B.b6};
  return B;
}

ElementRates kepler_term(const MrpMeeSet& x) {
  const double sl = std::sin(x.l), cl = std::cos(x.l);
  const double w = 1.0 + x.e1 * cl + x.e2 * sl;
  const double k6 = std::sqrt(x.mu / (x.p * x.p * x.p)) * w * w;  // h/r^2
  return {0.0, 0.0, 0.0, 0.0, 0.0, k6};
}

BMatrix b_matrix_mee(const MeeSet& m) {
  const double sl = std::sin(m.l), cl = std::cos(m.l);
  const double w = 1.0 + m.e1 * cl + m.e2 * sl;
  const double q2 = m.q1 * m.q1 + m.q2 * m.q2;

  BMatrix B;
  B.b6 = m.q1 * sl - m.q2 * cl;
  B.b4 = 0.5 * (1.0 + q2) * cl;
  B.b5 = 0.5 * (1.0 + q2) * sl;
  B.rows[0] = {0.0, 2.0 * m.p, 0.0};
  B.rows[1] = {w * sl, (w + 1.0) * cl + m.e1, -m.e2 * B.b6};
  B.rows[2] = {-w * cl, (w + 1.0) * sl + m.e2, m.e1 * B.b6};
  B.rows[3] = {0.0, 0.0, B.b4};
  B.rows[4] = {0.0, 0.0, B.b5};
  B.rows[5] = {0.0, 0.0, B.b6};
  return B;
}

ElementRates kepler_term_mee(const MeeSet& m) {
  const double sl = std::sin(m.l), cl = std::cos(m.l);
  const double w = 1.0 + m.e1 * cl + m.e2 * sl;
  const double k6 = std::sqrt(m.mu / (m.p * m.p * m.p)) * w * w;
  return {0.0, 0.0, 0.0, 0.0, 0.0, k6};
}

ElementRates mee_rates(const MeeSet& m, const LvlhAccel& a) {
  const double sl = std::sin(m.l), cl = std::cos(m.l);
  const double w = 1.0 + m.e1 * cl + m.e2 * sl;
  const double r_over_h = std::sqrt(m.p / m.mu) / w;
  return assemble(b_matrix_mee(m), r_over_h, kepler_term_mee(m)[5], a);
}

ElementRates mrpmee_rates(const MrpMeeSet& x, const LvlhAccel& a) {
  const double sl = std::sin(x.l), cl = std::cos(x.l);
  const double w = 1.0 + x.e1 * cl + x.e2 * sl;
  const double r_over_h = std::sqrt(x.p / x.mu) / w;
  return assemble(b_matrix(x), r_over_h, kepler_term(x)[5], a);
}

AltFirstElementRates alt_first_element_rates(const CoeSet& c, const LvlhAccel& a) {
  const CoeAux x = coe_aux(c);
  const double esn = c.e * std::sin(c.nu);
  const double in_plane = esn * a.a1 + x.w * a.a2;  // w = p/r
  AltFirstElementRates out;
  out.adot = 2.0 * (c.a * c.a / x.h) * in_plane;
  out.hdot = x.r * a.a2;
  out.ndot = -1.5 * (x.n / c.a) * out.adot;
  out.energydot = (c.mu / x.h) * in_plane;
  return out;
}

double mass_rate(double m, double a_mag, double c_exhaust) {
  return -m * a_mag / c_exhaust;
}

}  // namespace orbkit
