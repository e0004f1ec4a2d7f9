#include <cmath>
#include <numbers>

#include "doctest.h"
#include "su2est/errors.hpp"
#include "su2est/oracle.hpp"
#include "su2est/qubit_estimation.hpp"
#include "su2est/sampling.hpp"

using namespace su2est;

namespace {

constexpr double kPi = std::numbers::pi;

QfimUhlmann sld_info(const EncodingConfig& cfg, const BlochVector& r) {
  return encoded_state_information(cfg, bloch_to_density(r)).info;
}

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("weight matrix validation") {
  CHECK_NOTHROW(WeightMatrix(1.0, 0.2, 1.0));
  CHECK_THROWS_WITH_AS(WeightMatrix(1.0, 2.0, 1.0), "weight matrix not positive definite", InvalidWeight);
  CHECK_THROWS_AS(WeightMatrix(-1.0, 0.0, 1.0), InvalidWeight);
  CHECK_THROWS_AS(WeightMatrix(1.0, 1.0, 1.0), InvalidWeight);
  CHECK(WeightMatrix(1.0, 0.2, 1.0).det() == doctest::Approx(0.96));
}

TEST_CASE("QFIM and Uhlmann element at theta = pi/2, phi = (0.3, 0.7), r = z") {
  const EncodingConfig cfg = EncodingConfig::planar(0.5 * kPi, 0.3, 0.7);
  const BlochVector r(0.0, 0.0, 1.0);
  const EtaPair etas = eta_pair(cfg);
  const QfimUhlmann num = sld_info(cfg, r);
  CHECK(max_abs(qfim_pure_qubit(r, etas) - num.qfim) < 1e-9);
  CHECK(std::abs(uhlmann_pure_qubit(r, etas) - num.d12) < 1e-9);
}

TEST_CASE("QFIM, Uhlmann element and HCRB against the SLD oracle on random instances") {
  auto gen = stream_rng(31, 0);
  for (int k = 0; k < 300; ++k) {
    const EncodingConfig cfg = random_config(gen);
    const BlochVector r(random_unit(gen));
    const WeightMatrix w = random_weight(gen);
    const EtaPair etas = eta_pair(cfg);
    const QfimUhlmann num = sld_info(cfg, r);
    const Mat2 f = qfim_pure_qubit(r, etas);
    CHECK(max_abs(f - num.qfim) < 1e-9);
    CHECK(std::abs(uhlmann_pure_qubit(r, etas) - num.d12) < 1e-9);
    const double t = r.r().dot(etas.cross());
    CHECK(std::abs(f.determinant() - t * t) < 1e-10);
    if (std::abs(t) > 0.2) {
      CHECK(hcrb_qubit(r, etas, w) == doctest::Approx(holevo_from_matrices(num.qfim, num.d12, w)).epsilon(1e-10));
    }
  }
}

TEST_CASE("pure-state functions reject mixed probes") {
  const EtaPair etas = eta_pair(EncodingConfig::planar(1.0, 0.3, 0.4));
  const BlochVector half(0.0, 0.0, 0.5);
  CHECK_THROWS_AS(qfim_pure_qubit(half, etas), RequiresPureState);
  CHECK_THROWS_AS(uhlmann_pure_qubit(half, etas), RequiresPureState);
  CHECK_THROWS_AS(hcrb_qubit(half, etas, WeightMatrix::identity()), RequiresPureState);
}

TEST_CASE("optimal probe is the normalized cross product and beats random probes") {
  auto gen = stream_rng(32, 0);
  for (int k = 0; k < 30; ++k) {
    const EncodingConfig cfg = random_config(gen);
    const WeightMatrix w = random_weight(gen);
    const EtaPair etas = eta_pair(cfg);
    const OptimalQubitProbe p = optimal_qubit_probe(etas);
    const Vec3 n = etas.cross().normalized();
    CHECK(std::min((p.primary.r() - n).norm(), (p.primary.r() + n).norm()) < 1e-12);
    CHECK((p.primary.r() + p.opposite.r()).norm() == 0.0);
    const double best = min_hcrb_qubit(etas, w);
    CHECK(best == doctest::Approx(hcrb_qubit(p.primary, etas, w)).epsilon(1e-12));
    CHECK(best == doctest::Approx(hcrb_qubit(p.opposite, etas, w)).epsilon(1e-12));
    for (int s = 0; s < 300; ++s) {
      const BlochVector r(random_unit(gen));
      if (std::abs(r.r().dot(etas.cross())) < 1e-6) continue;
      CHECK(hcrb_qubit(r, etas, w) >= best - 1e-9);
    }
  }
}

TEST_CASE("optimal probe at theta = pi/2, phi = (0.3, 0.7) is the grid-search argmin") {
  const EncodingConfig cfg = EncodingConfig::planar(0.5 * kPi, 0.3, 0.7);
  const QubitGridResult g = grid_search_qubit(cfg, WeightMatrix::identity(), 100);
  REQUIRE(g.feasible);
  CHECK(g.margin >= -1e-9);
  CHECK(g.angle_to_optimum <= g.angular_tolerance);
}

TEST_CASE("minimum HCRB matches independently computed values") {
  // Nelder-Mead over the Bloch sphere on finite-difference QFIM/Uhlmann data
  // from scipy's expm, run offline.
  const WeightMatrix w(1.0, 0.2, 1.0);
  CHECK(min_hcrb_qubit(eta_pair(EncodingConfig::planar(0.5 * kPi, 0.5, 0.5)), w) ==
        doctest::Approx(4.0352034285).epsilon(1e-8));
  CHECK(min_hcrb_qubit(eta_pair(EncodingConfig::planar(1.0, 0.5, 0.5)), w) ==
        doctest::Approx(5.0406794774).epsilon(1e-8));
}

TEST_CASE("commuting encodings have no optimal probe") {
  const EtaPair etas = eta_pair(EncodingConfig::planar(0.0, 0.5, 0.5));
  CHECK_THROWS_WITH_AS(optimal_qubit_probe(etas), "commuting encodings: estimation infeasible", NoOptimalProbe);
  CHECK_THROWS_AS(min_hcrb_qubit(etas, WeightMatrix::identity()), NoOptimalProbe);
}

TEST_CASE("mixed probes with |r|^2 in {0.2, 0.5, 0.8}: QFIM scales by |r|^2, Uhlmann element by |r|^3") {
  auto gen = stream_rng(33, 0);
  for (double purity : {0.2, 0.5, 0.8}) {
    const double len = std::sqrt(purity);
    for (int k = 0; k < 50; ++k) {
      const EncodingConfig cfg = random_config(gen);
      const WeightMatrix w = random_weight(gen);
      const Vec3 dir = random_unit(gen);
      const EtaPair etas = eta_pair(cfg);
      if (std::abs(dir.dot(etas.cross())) < 1e-3) continue;
      const BlochVector r(len * dir);
      const MixedStateBounds m = mixed_state_bounds(r, etas, w);
      const QfimUhlmann num = sld_info(cfg, r);
      CHECK(max_abs(m.qfim - num.qfim) < 1e-9);
      CHECK(std::abs(m.d12 - num.d12) < 1e-9);
      CHECK(max_abs(m.qfim - len * len * qfim_pure_qubit(BlochVector(dir), etas)) < 1e-12);
      CHECK(std::abs(m.d12 - len * len * len * uhlmann_pure_qubit(BlochVector(dir), etas)) < 1e-12);
      CHECK(m.hcrb > hcrb_qubit(BlochVector(dir), etas, w));
      CHECK(m.hcrb == doctest::Approx(holevo_from_matrices(num.qfim, num.d12, w)).epsilon(1e-9));
    }
  }
}

TEST_CASE("small-phase probe converges quadratically to the exact optimum") {
  auto angle_error = [](const EncodingConfig& cfg) {
    const Vec3 exact = optimal_qubit_probe(eta_pair(cfg)).primary.r();
    const Vec3 approx = small_param_optimal_probe(cfg).r();
    return std::min(angle_between(exact, approx), angle_between(-exact, approx));
  };
  const double e3 = angle_error(EncodingConfig::planar(0.5 * kPi, 1e-3, 1e-3));
  const double e4 = angle_error(EncodingConfig::planar(0.5 * kPi, 1e-4, 1e-4));
  const double e5 = angle_error(EncodingConfig::planar(0.5 * kPi, 1e-5, 1e-5));
  CHECK(e3 < 1e-5);
  CHECK(e5 < 1e-9);
  CHECK(e3 / e4 > 50.0);

  const Vec3 tiny = small_param_optimal_probe(EncodingConfig::planar(1.2, 1e-8, 1e-8)).r();
  CHECK((tiny - Vec3::UnitZ()).norm() < 1e-8);

  auto gen = stream_rng(34, 0);
  for (int k = 0; k < 20; ++k) {
    const EncodingConfig cfg = random_config(gen, 0.3, 1.0);
    CHECK(angle_error(cfg.with_phases(1e-3 * cfg.phi1(), 1e-3 * cfg.phi2())) < 1e-5);
  }
}
