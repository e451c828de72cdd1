#pragma once

#include <utility>

#include "orbkit/tensors.hpp"

namespace orbkit {

/// Right-handed orthonormal triad; the vectors are expressed in the parent
/// (inertial) basis, so they are the columns of the rotation taking parent
/// axes into this basis.
struct Basis {
  Vec3 e1, e2, e3;

  Rotation as_rotation() const {
    Mat3 m;
    m(0, 0) = e1.x; m(0, 1) = e2.x; m(0, 2) = e3.x;
    m(1, 0) = e1.y; m(1, 1) = e2.y; m(1, 2) = e3.y;
    m(2, 0) = e1.z; m(2, 1) = e2.z; m(2, 2) = e3.z;
    return Rotation::from_mat(m);
  }
};

/// Specific angular momentum h, eccentricity vector e, Hamilton vector k.
/// Mutually orthogonal; all conserved along a Kepler arc.
struct ConservedVectors {
  Vec3 h;
  Vec3 e;
  Vec3 k;
};

/// u1 = r-hat, u3 = h-hat, u2 = u3 x u1. Throws DegenerateOrbit.
Basis lvlh_basis(const Vec3& r, const Vec3& v);

/// Throws DegenerateOrbit.
ConservedVectors conserved_vectors(const Vec3& r, const Vec3& v, double mu);

/// o1 = e-hat, o2 = h-hat x e-hat, o3 = h-hat. Throws CircularOrbit.
Basis perifocal_basis(const ConservedVectors& cv);

/// Unit vector along inertial_z x h. Throws EquatorialOrbit.
Vec3 line_of_nodes(const Vec3& h, const Vec3& inertial_z = kZhat);

/// Equinoctial basis from its two nonzero CRPs; smooth at q1 = q2 = 0.
Basis equinoctial_basis_from_q(double q1, double q2);

/// The two nonzero equinoctial CRPs from the orbit normal direction.
/// Throws RetrogradeEquatorial when h-hat is at or near -z.
std::pair<double, double> crp_from_hhat(const Vec3& hhat);

/// Angular velocity of the LVLH basis, components in the LVLH basis itself.
/// a_lvlh are the perturbing-acceleration components along u1, u2, u3.
Vec3 lvlh_omega(double r, double h, const Vec3& a_lvlh);

/// Angular velocity of the perifocal basis, components in the perifocal basis.
/// Throws CircularOrbit (the o3 component carries 1/e).
Vec3 perifocal_omega(double r, double h, double p, double e, double nu, const Vec3& a_lvlh);

/// Angular velocity of the equinoctial basis, components in that basis,
/// driven by the normal acceleration component a_n = u3 . a.
Vec3 equinoctial_omega_crp(double q1, double q2, double l, double r_over_h, double a_n);

/// MRP form of the same; throws KinematicSingularity when sigma^2 nears 1.
Vec3 equinoctial_omega_mrp(double sigma1, double sigma2, double l, double r_over_h, double a_n);

}  // namespace orbkit
