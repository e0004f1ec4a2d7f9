#pragma once

// Single-qubit probes: QFIM, Uhlmann element, the closed-form Holevo bound of
// the D-invariant qubit model, the weight-independent optimal probe and its
// bound, mixed-probe scaling and the small-phase approximation of the probe.

#include <Eigen/Dense>

#include "su2est/effective_hamiltonians.hpp"
#include "su2est/su2_algebra.hpp"

namespace su2est {

/// Real symmetric positive-definite 2x2 cost matrix [[w11, w12], [w12, w22]].
class WeightMatrix {
 public:
  // Throws InvalidWeight unless w11 > 0, w22 > 0 and w11 w22 - w12^2 > 0.
  WeightMatrix(double w11, double w12, double w22);

  static WeightMatrix identity() { return WeightMatrix(1.0, 0.0, 1.0); }

  double w11() const { return w11_; }
  double w12() const { return w12_; }
  double w22() const { return w22_; }
  double det() const { return w11_ * w22_ - w12_ * w12_; }
  Mat2 matrix() const;
  WeightMatrix scaled(double c) const { return WeightMatrix(c * w11_, c * w12_, c * w22_); }

 private:
  double w11_, w12_, w22_;
};

// (F)_ij = eta_i.eta_j - (r.eta_i)(r.eta_j). Throws RequiresPureState.
Mat2 qfim_pure_qubit(const BlochVector& r, const EtaPair& etas);

// D_12 = r.(eta1 x eta2). Throws RequiresPureState.
double uhlmann_pure_qubit(const BlochVector& r, const EtaPair& etas);

/// C = Q / (r.(eta1 x eta2))^2 + 2 sqrt(det W) / |r.(eta1 x eta2)| with
/// Q = w11 |r x eta2|^2 + w22 |r x eta1|^2 - 2 w12 (r x eta1).(r x eta2).
/// Throws RequiresPureState, or SingularQFIM when |r.(eta1 x eta2)| < 1e-10.
double hcrb_qubit(const BlochVector& r, const EtaPair& etas, const WeightMatrix& w);

struct OptimalQubitProbe {
  BlochVector primary;   // non-negative z (ties broken by y, then x)
  BlochVector opposite;  // -primary; same bound
};

// r_opt = +-(eta1 x eta2)/|eta1 x eta2|. Throws NoOptimalProbe for commuting
// encodings.
OptimalQubitProbe optimal_qubit_probe(const EtaPair& etas);

// Bound at r_opt:
// [w11|eta2|^2 + w22|eta1|^2 - 2 w12 eta1.eta2]/|eta1 x eta2|^2 + 2 sqrt(det W)/|eta1 x eta2|
double min_hcrb_qubit(const EtaPair& etas, const WeightMatrix& w);

struct MixedStateBounds {
  Mat2 qfim;
  double d12 = 0.0;
  double hcrb = 0.0;
};

// Mixed probe with Bloch vector r, |r| <= 1: QFIM scales by |r|^2 and D_12 by
// |r|^3 relative to the pure state along r/|r| (its larger-weight eigenstate).
MixedStateBounds mixed_state_bounds(const BlochVector& r, const EtaPair& etas,
                                    const WeightMatrix& w);

// Leading-order optimal probe for small phases, expressed in global
// coordinates via cfg's planar frame:
// (-phi2 sin theta, phi1 + phi2 cos theta, 2) / sqrt(4 + B^2).
BlochVector small_param_optimal_probe(const EncodingConfig& cfg);

// Angle between two directions, in radians.
double angle_between(const Vec3& u, const Vec3& v);

}  // namespace su2est
