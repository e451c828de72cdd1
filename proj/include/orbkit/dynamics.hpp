#pragma once

#include <array>

#include "orbkit/elements.hpp"

namespace orbkit {

/// Perturbing acceleration components along the LVLH axes u1, u2, u3.
struct LvlhAccel {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

using ElementRates = std::array<double, 6>;

enum class AnomalyChoice { TrueAnomaly, MeanAnomaly, EccentricAnomaly };

/// Gauss variational equations for the classical elements, rates ordered
/// (a, e, i, raan, argp, phase). Throws CoeSingular when e or sin(i) is too
/// small for the 1/e and 1/sin(i) rows.
ElementRates coe_rates(const CoeSet& c, const LvlhAccel& a, AnomalyChoice phase);

/// Gauss variational equations for the CRP equinoctial elements,
/// rates ordered (p, e1, e2, q1, q2, l). No e or i singularity.
ElementRates mee_rates(const MeeSet& m, const LvlhAccel& a);

/// Gauss variational equations for the MRP equinoctial elements,
/// rates ordered (p, e1, e2, sigma1, sigma2, l). Throws KinematicSingularity
/// when sigma^2 nears 1.
ElementRates mrpmee_rates(const MrpMeeSet& x, const LvlhAccel& a);

/// Thrust-linear split of the equinoctial rates: xdot = (r/h) B a + k.
struct BMatrix {
  std::array<std::array<double, 3>, 6> rows;
  double b4 = 0.0;  // rows[3][2]
  double b5 = 0.0;  // rows[4][2]
  double b6 = 0.0;  // rows[5][2]
};

BMatrix b_matrix(const MrpMeeSet& x);           // throws KinematicSingularity
ElementRates kepler_term(const MrpMeeSet& x);   // single nonzero entry k6 = h/r^2

/// CRP-flavored split used by the CRP equinoctial solver path.
BMatrix b_matrix_mee(const MeeSet& m);
ElementRates kepler_term_mee(const MeeSet& m);

/// Rates of the alternate first-element choices h, n, energy (and a itself).
struct AltFirstElementRates {
  double adot;
  double hdot;
  double ndot;
  double energydot;
};

AltFirstElementRates alt_first_element_rates(const CoeSet& c, const LvlhAccel& a);

/// mdot = -m |a| / c for exhaust velocity c.
double mass_rate(double m, double a_mag, double c_exhaust);

}  // namespace orbkit
