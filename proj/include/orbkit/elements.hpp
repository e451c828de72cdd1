#pragma once

#include <array>

#include "orbkit/tensors.hpp"

namespace orbkit {

/// Classical orbital elements. Angles in radians, a in km, mu in km^3/s^2
/// (or any consistent unit system, e.g. canonical units with mu = 1).
struct CoeSet {
  double a;      // semi-major axis
  double e;      // eccentricity
  double i;      // inclination
  double raan;   // right ascension of ascending node
  double argp;   // argument of periapse
  double nu;     // true anomaly
  double mu;
};

/// Auxiliary orbit scalars derived from a COE set.
struct CoeAux {
  double p;       // semilatus rectum
  double h;       // specific angular momentum magnitude
  double r;       // radial distance
  double w;       // p/r = 1 + e cos(nu)
  double n;       // mean motion
  double b;       // semi-minor axis
  double theta;   // argument of latitude argp + nu
  double energy;  // -mu/(2a)
};

/// Modified equinoctial elements (CRP flavor).
struct MeeSet {
  double p;
  double e1, e2;
  double q1, q2;
  double l;      // true longitude, kept unwrapped
  double mu;
};

/// Equinoctial elements with the two CRPs replaced by MRPs.
struct MrpMeeSet {
  double p;
  double e1, e2;
  double sigma1, sigma2;
  double l;
  double mu;
};

struct CartesianState {
  Vec3 r;
  Vec3 v;
  double mu;
};

struct Anomalies {
  double nu;       // true anomaly
  double M;        // mean anomaly
  double E;        // eccentric anomaly
  double lambda;   // mean longitude raan + argp + M
  double epsilon;  // eccentric longitude raan + argp + E
};

CoeAux coe_aux(const CoeSet& c);

CartesianState coe_to_cartesian(const CoeSet& c);

/// COE extraction flags the angle ambiguities instead of failing: for a
/// circular orbit nu holds the argument of latitude (or true longitude when
/// also equatorial) with argp = 0; for an equatorial orbit raan = 0 and argp
/// holds the longitude of periapse. Reconstruction of the flagged set through
/// coe_to_cartesian reproduces the input state.
struct CoeFromCartesian {
  CoeSet coe;
  bool circular = false;
  bool equatorial = false;
};

CoeFromCartesian cartesian_to_coe(const CartesianState& s);

MeeSet coe_to_mee(const CoeSet& c);      // throws MeeSingular at i near pi
MrpMeeSet coe_to_mrpmee(const CoeSet& c);

struct CoeFromEquinoctial {
  CoeSet coe;
  bool circular = false;    // raan+argp split undefined (e = 0)
  bool equatorial = false;  // raan split undefined (i = 0)
};

CoeFromEquinoctial mee_to_coe(const MeeSet& m);
CoeFromEquinoctial mrpmee_to_coe(const MrpMeeSet& m);

MrpMeeSet mee_to_mrpmee(const MeeSet& m);
MeeSet mrpmee_to_mee(const MrpMeeSet& m);  // throws MrpAtUnitSphere

CartesianState mee_to_cartesian(const MeeSet& m);        // throws HyperbolicPoint
CartesianState mrpmee_to_cartesian(const MrpMeeSet& m);  // throws HyperbolicPoint

MeeSet cartesian_to_mee(const CartesianState& s);        // throws RetrogradeEquatorial
MrpMeeSet cartesian_to_mrpmee(const CartesianState& s);  // throws RetrogradeEquatorial

/// Solve the equinoctial Kepler equation lambda = eps - e1 sin(eps) + e2 cos(eps)
/// for the eccentric longitude eps. Throws NoConvergence.
double kepler_longitude(double lambda, double e1, double e2);

Anomalies anomalies_from_coe(const CoeSet& c);

/// Costate change of variables induced by the (q1,q2) <-> (sigma1,sigma2)
/// coordinate change, restricted to the two active components.
std::array<double, 2> costate_mrp_to_crp(const std::array<double, 2>& lam_sigma,
                                         double sigma1, double sigma2);
std::array<double, 2> costate_crp_to_mrp(const std::array<double, 2>& gamma_q,
                                         double sigma1, double sigma2);

}  // namespace orbkit
