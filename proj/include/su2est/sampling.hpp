#pragma once

// Seeded random instances shared by the verification suite, the tests and
// the benchmarks.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "su2est/effective_hamiltonians.hpp"
#include "su2est/qubit_estimation.hpp"
#include "su2est/su2_algebra.hpp"

namespace su2est {

// Generator for stream `stream` of a run with seed `seed`.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline Vec3 random_unit(std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Vec3 v;
  do {
    v = Vec3(normal(gen), normal(gen), normal(gen));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

// Randomly oriented axes at angle theta in (theta_margin, pi - theta_margin),
// phases uniform in (-phi_max, phi_max).
inline EncodingConfig random_config(std::mt19937_64& gen, double theta_margin = 0.05,
                                    double phi_max = 2.0) {
  const double theta = uniform(gen, theta_margin, std::numbers::pi - theta_margin);
  const Vec3 a1 = random_unit(gen);
  Vec3 u = random_unit(gen);
  u -= u.dot(a1) * a1;
  while (u.norm() < 1e-6) {
    u = random_unit(gen);
    u -= u.dot(a1) * a1;
  }
  u.normalize();
  const Vec3 a2 = std::cos(theta) * a1 + std::sin(theta) * u;
  return EncodingConfig(a1, a2.normalized(), uniform(gen, -phi_max, phi_max),
                        uniform(gen, -phi_max, phi_max));
}

inline WeightMatrix random_weight(std::mt19937_64& gen) {
  const double w11 = uniform(gen, 0.2, 2.0);
  const double w22 = uniform(gen, 0.2, 2.0);
  const double corr = uniform(gen, -0.9, 0.9);
  return WeightMatrix(w11, corr * std::sqrt(w11 * w22), w22);
}

inline Eigen::Vector3cd random_qutrit_amplitudes(std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Eigen::Vector3cd c;
  do {
    for (int i = 0; i < 3; ++i) c(i) = cplx(normal(gen), normal(gen));
  } while (c.norm() < 1e-6);
  return c.normalized();
}

}  // namespace su2est
