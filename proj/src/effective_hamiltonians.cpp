#include "su2est/effective_hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "su2est/constants.hpp"
#include "su2est/errors.hpp"

namespace su2est {

namespace {

Vec3 any_orthogonal(const Vec3& a) {
  const Vec3 trial = std::abs(a.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (trial - trial.dot(a) * a).normalized();
}

// [B - sin B] / B^3
double odd_remainder(double b) {
  if (b < kTol.series_switch) {
    const double b2 = b * b;
    return 1.0 / 6.0 - b2 / 120.0 + b2 * b2 / 5040.0;
  }
  return (b - std::sin(b)) / (b * b * b);
}

// sin^2(B/2) / B^2
double half_angle_ratio(double b) {
  if (b < kTol.series_switch) {
    const double b2 = b * b;
    return 0.25 - b2 / 48.0 + b2 * b2 / 1440.0;
  }
  const double s = std::sin(0.5 * b);
  return s * s / (b * b);
}

}  // namespace

EncodingConfig::EncodingConfig(const Vec3& a1, const Vec3& a2, double phi1, double phi2)
    : a1_(a1), a2_(a2), phi1_(phi1), phi2_(phi2) {
  if (!a1.allFinite() || !a2.allFinite() ||
      std::abs(a1.norm() - 1.0) > kTol.normalization ||
      std::abs(a2.norm() - 1.0) > kTol.normalization) {
    throw InvalidAxis("encoding axes must be unit vectors");
  }
  if (!std::isfinite(phi1) || !std::isfinite(phi2)) {
    throw InvalidInput("phases must be finite");
  }
  cos_theta_ = std::clamp(a1.dot(a2), -1.0, 1.0);
  const Vec3 normal = a1.cross(a2);
  sin_theta_ = normal.norm();
  const Vec3 ez = sin_theta_ > kTol.degenerate_cross ? Vec3(normal / sin_theta_)
                                                     : Vec3(a1.cross(any_orthogonal(a1)));
  frame_.col(0) = a1;
  frame_.col(1) = ez.cross(a1);
  frame_.col(2) = ez;
}

EncodingConfig EncodingConfig::planar(double theta, double phi1, double phi2) {
  return EncodingConfig(Vec3::UnitX(), Vec3(std::cos(theta), std::sin(theta), 0.0), phi1, phi2);
}

EncodingConfig EncodingConfig::with_phases(double phi1, double phi2) const {
  EncodingConfig out = *this;
  out.phi1_ = phi1;
  out.phi2_ = phi2;
  return out;
}

double EncodingConfig::theta() const { return std::atan2(sin_theta_, cos_theta_); }

Vec3 rotation_axis(const EncodingConfig& cfg) {
  const Vec3 v = cfg.generator();
  const double b = v.norm();
  if (!(b > kTol.degenerate_rotation)) {
    throw DegenerateRotation("rotation angle B is zero; the rotation axis is undefined");
  }
  return v / b;
}

ReparamCoords reparam(const EncodingConfig& cfg) {
  const double p1 = cfg.phi1(), p2 = cfg.phi2();
  const double b2 = p1 * p1 + p2 * p2 + 2.0 * p1 * p2 * cfg.cos_theta();
  ReparamCoords out;
  out.B = std::sqrt(std::max(0.0, b2));
  if (out.B > 0.0) {
    out.phi = std::atan2(p2 * cfg.sin_theta(), cfg.f2());
    if (out.phi == -std::numbers::pi) out.phi = std::numbers::pi;
  }
  return out;
}

EtaPair eta_pair(const EncodingConfig& cfg) {
  const double p1 = cfg.phi1(), p2 = cfg.phi2();
  const double f1 = cfg.f1(), f2 = cfg.f2();
  const double b = std::sqrt(std::max(0.0, p1 * f2 + p2 * f1));
  const double g = odd_remainder(b);
  const double h = half_angle_ratio(b);
  const Vec3 d = f1 * cfg.a1() - f2 * cfg.a2();
  const Vec3 c = cfg.a1().cross(cfg.a2());
  EtaPair out;
  out.eta1 = -cfg.a1() + p2 * g * d - 2.0 * p2 * h * c;
  out.eta2 = -cfg.a2() - p1 * g * d + 2.0 * p1 * h * c;
  return out;
}

ReparamEtas eta_reparam(const ReparamCoords& coords) {
  const double sh = std::sin(0.5 * coords.B), ch = std::cos(0.5 * coords.B);
  const double sp = std::sin(coords.phi), cp = std::cos(coords.phi);
  ReparamEtas out;
  out.eta_phi = 2.0 * sh * Vec3(ch * sp, -ch * cp, sh);
  out.eta_B = -Vec3(cp, sp, 0.0);
  return out;
}

ReparamEtas eta_reparam(const EncodingConfig& cfg) {
  ReparamEtas local = eta_reparam(reparam(cfg));
  local.eta_phi = cfg.frame() * local.eta_phi;
  local.eta_B = cfg.frame() * local.eta_B;
  return local;
}

Jacobian2 jacobian(const EncodingConfig& cfg) {
  const ReparamCoords rc = reparam(cfg);
  if (!(rc.B > kTol.degenerate_rotation) || !(cfg.sin_theta() > kTol.degenerate_cross)) {
    throw SingularReparam("(B, phi) parameterization is singular at this point");
  }
  const double b = rc.B, b2 = b * b, s = cfg.sin_theta();
  Jacobian2 jac;
  jac.m << cfg.f2() / b, cfg.f1() / b,
           -cfg.phi2() * s / b2, cfg.phi1() * s / b2;
  return jac;
}

}  // namespace su2est
