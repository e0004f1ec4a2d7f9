#pragma once

// Closed-form effective-Hamiltonian vectors for the two-phase SU(2) encoding
// U = exp(-i (phi1 a1 + phi2 a2).S), the (B, phi) re-parameterization, and the
// Jacobian between the two parameterizations.
//
// The effective Hamiltonian of parameter j is H_j = i (d_j U^dagger) U = eta_j.S,
// with S = sigma/2 on a qubit and S = J on a qutrit.

#include <Eigen/Dense>

#include "su2est/su2_algebra.hpp"

namespace su2est {

/// Two unit encoding axes and the true phases. theta is the angle between the
/// axes, derived from a1.a2.
///
/// The planar frame has e_x = a1, e_y along the part of a2 orthogonal to a1 and
/// e_z = e_x x e_y, so that a2 = (cos theta, sin theta, 0) in that frame. For
/// collinear axes e_y is an arbitrary unit vector orthogonal to a1.
class EncodingConfig {
 public:
  EncodingConfig(const Vec3& a1, const Vec3& a2, double phi1, double phi2);

  // a1 = x, a2 = (cos theta, sin theta, 0).
  static EncodingConfig planar(double theta, double phi1, double phi2);

  EncodingConfig with_phases(double phi1, double phi2) const;

  const Vec3& a1() const { return a1_; }
  const Vec3& a2() const { return a2_; }
  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }
  double cos_theta() const { return cos_theta_; }
  double sin_theta() const { return sin_theta_; }
  double theta() const;

  // f1 = phi1 cos(theta) + phi2, f2 = phi1 + phi2 cos(theta).
  double f1() const { return phi1_ * cos_theta_ + phi2_; }
  double f2() const { return phi1_ + phi2_ * cos_theta_; }

  // phi1 a1 + phi2 a2, i.e. B n_rot.
  Vec3 generator() const { return phi1_ * a1_ + phi2_ * a2_; }

  // Columns are the planar-frame axes expressed in global coordinates.
  const Eigen::Matrix3d& frame() const { return frame_; }

 private:
  Vec3 a1_, a2_;
  double phi1_, phi2_;
  double cos_theta_, sin_theta_;
  Eigen::Matrix3d frame_;
};

struct EtaPair {
  Vec3 eta1;
  Vec3 eta2;

  Vec3 cross() const { return eta1.cross(eta2); }
};

// Total rotation magnitude B and the in-plane angle phi of the rotation axis,
// measured in the planar frame.
struct ReparamCoords {
  double B = 0.0;
  double phi = 0.0;
};

// Effective-Hamiltonian vectors of the (B, phi) parameterization.
struct ReparamEtas {
  Vec3 eta_phi;
  Vec3 eta_B;
};

// d(B, phi)/d(phi1, phi2): rows (B, phi), columns (phi1, phi2).
struct Jacobian2 {
  Mat2 m;

  double dB(int i) const { return m(0, i); }
  double dphi(int i) const { return m(1, i); }
  double det() const { return m.determinant(); }
};

// Unit axis of U. Throws DegenerateRotation when B is (numerically) zero.
Vec3 rotation_axis(const EncodingConfig& cfg);

// phi is returned in (-pi, pi]; B = 0 maps to phi = 0.
ReparamCoords reparam(const EncodingConfig& cfg);

/// eta_1 = -a1 + phi2 [B - sin B]/B^3 (f1 a1 - f2 a2) - 2 phi2 sin^2(B/2)/B^2 (a1 x a2)
/// eta_2 = -a2 - phi1 [B - sin B]/B^3 (f1 a1 - f2 a2) + 2 phi1 sin^2(B/2)/B^2 (a1 x a2)
///
/// Below B = 1e-4 the two scalar prefactors are evaluated from their Taylor
/// series, so the B -> 0 limit (eta_i = -a_i) is exact.
EtaPair eta_pair(const EncodingConfig& cfg);

// Planar-frame vectors: eta_phi = 2 sin(B/2) (cos(B/2) sin phi, -cos(B/2) cos phi, sin(B/2)),
// eta_B = -(cos phi, sin phi, 0).
ReparamEtas eta_reparam(const ReparamCoords& coords);

// Same vectors rotated into global coordinates for cfg's axes.
ReparamEtas eta_reparam(const EncodingConfig& cfg);

// Throws SingularReparam when B or sin(theta) vanish.
Jacobian2 jacobian(const EncodingConfig& cfg);

}  // namespace su2est
