#include "su2est/qubit_estimation.hpp"

#include <cmath>

#include "su2est/constants.hpp"
#include "su2est/errors.hpp"

namespace su2est {

namespace {

void require_pure(const BlochVector& r) {
  if (!r.is_pure(kTol.purity)) {
    throw RequiresPureState("closed form needs a pure probe (|r| = 1)");
  }
}

// Q for a unit direction u.
double q_term(const Vec3& u, const EtaPair& etas, const WeightMatrix& w) {
  const Vec3 u1 = u.cross(etas.eta1);
  const Vec3 u2 = u.cross(etas.eta2);
  return w.w11() * u2.squaredNorm() + w.w22() * u1.squaredNorm() - 2.0 * w.w12() * u1.dot(u2);
}

}  // namespace

WeightMatrix::WeightMatrix(double w11, double w12, double w22) : w11_(w11), w12_(w12), w22_(w22) {
  if (!std::isfinite(w11) || !std::isfinite(w12) || !std::isfinite(w22) || !(w11 > 0.0) ||
      !(w22 > 0.0) || !(w11 * w22 - w12 * w12 > 0.0)) {
    throw InvalidWeight("weight matrix not positive definite");
  }
}

Mat2 WeightMatrix::matrix() const {
  Mat2 m;
  m << w11_, w12_, w12_, w22_;
  return m;
}

Mat2 qfim_pure_qubit(const BlochVector& r, const EtaPair& etas) {
  require_pure(r);
  const double p1 = r.r().dot(etas.eta1);
  const double p2 = r.r().dot(etas.eta2);
  Mat2 f;
  f(0, 0) = etas.eta1.squaredNorm() - p1 * p1;
  f(1, 1) = etas.eta2.squaredNorm() - p2 * p2;
  f(0, 1) = f(1, 0) = etas.eta1.dot(etas.eta2) - p1 * p2;
  return f;
}

double uhlmann_pure_qubit(const BlochVector& r, const EtaPair& etas) {
  require_pure(r);
  return r.r().dot(etas.cross());
}

double hcrb_qubit(const BlochVector& r, const EtaPair& etas, const WeightMatrix& w) {
  require_pure(r);
  const double t = r.r().dot(etas.cross());
  if (!(std::abs(t) >= kTol.singular_triple)) {
    throw SingularQFIM("r.(eta1 x eta2) = 0: QFIM is singular for this probe");
  }
  return q_term(r.r(), etas, w) / (t * t) + 2.0 * std::sqrt(w.det()) / std::abs(t);
}

OptimalQubitProbe optimal_qubit_probe(const EtaPair& etas) {
  const Vec3 c = etas.cross();
  const double n = c.norm();
  if (!(n > kTol.degenerate_cross)) {
    throw NoOptimalProbe("commuting encodings: estimation infeasible");
  }
  Vec3 u = c / n;
  const double key = u.z() != 0.0 ? u.z() : (u.y() != 0.0 ? u.y() : u.x());
  if (key < 0.0) u = -u;
  return {BlochVector(u), BlochVector(-u)};
}

double min_hcrb_qubit(const EtaPair& etas, const WeightMatrix& w) {
  const double n = etas.cross().norm();
  if (!(n > kTol.degenerate_cross)) {
    throw NoOptimalProbe("commuting encodings: estimation infeasible");
  }
  const double num = w.w11() * etas.eta2.squaredNorm() + w.w22() * etas.eta1.squaredNorm() -
                     2.0 * w.w12() * etas.eta1.dot(etas.eta2);
  return num / (n * n) + 2.0 * std::sqrt(w.det()) / n;
}

MixedStateBounds mixed_state_bounds(const BlochVector& r, const EtaPair& etas,
                                    const WeightMatrix& w) {
  const double len = std::min(r.norm(), 1.0);
  const double purity_factor = len * len;  // 2 Tr(rho^2) - 1
  if (!(purity_factor > kTol.singular_det)) {
    throw SingularQFIM("maximally mixed probe carries no information");
  }
  const BlochVector dir(r.r() / r.norm());
  const double t = dir.r().dot(etas.cross());
  if (!(std::abs(t) >= kTol.singular_triple)) {
    throw SingularQFIM("r.(eta1 x eta2) = 0: QFIM is singular for this probe");
  }
  MixedStateBounds out;
  out.qfim = purity_factor * qfim_pure_qubit(dir, etas);
  out.d12 = purity_factor * len * t;
  out.hcrb = q_term(dir.r(), etas, w) / (t * t) / purity_factor +
             2.0 * std::sqrt(w.det()) / std::abs(t) / len;
  return out;
}

BlochVector small_param_optimal_probe(const EncodingConfig& cfg) {
  const ReparamCoords rc = reparam(cfg);
  const Vec3 local(-cfg.phi2() * cfg.sin_theta(), cfg.f2(), 2.0);
  return BlochVector(cfg.frame() * local / std::sqrt(4.0 + rc.B * rc.B));
}

double angle_between(const Vec3& u, const Vec3& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

}  // namespace su2est
