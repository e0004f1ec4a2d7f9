#include <cmath>
#include <numbers>

#include "doctest.h"
#include "su2est/errors.hpp"
#include "su2est/oracle.hpp"
#include "su2est/qutrit_estimation.hpp"
#include "su2est/sampling.hpp"

using namespace su2est;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

double direct_expectation(const QutritKet& ket, const Vec3& t) {
  const ComplexVector psi = ket.amplitudes();
  return psi.dot(spin_component(t, Rep::qutrit) * psi).real();
}

AnsatzParams random_ansatz(std::mt19937_64& gen) {
  return {uniform(gen, 0.0, 0.5 * kPi), uniform(gen, -kPi, kPi)};
}

ReparamCoords random_coords(std::mt19937_64& gen) {
  return {uniform(gen, 0.0, 2.0 * kPi), uniform(gen, -kPi, kPi)};
}

EncodingConfig config_for(double b, double phi) {
  return EncodingConfig::planar(0.5 * kPi, b * std::cos(phi), b * std::sin(phi));
}

}  // namespace

TEST_CASE("SU(2) expectation formula agrees with the matrix element") {
  auto gen = stream_rng(41, 0);
  for (int k = 0; k < 500; ++k) {
    const QutritKet ket(random_qutrit_amplitudes(gen));
    const Vec3 t = uniform(gen, 0.0, 3.0) * random_unit(gen);
    CHECK(su2_expectation(ket, t) == doctest::Approx(direct_expectation(ket, t)).epsilon(1e-12));
  }
}

TEST_CASE("ansatz probes: <t.J> = cos(2 alpha) t.n_rot and weak commutation") {
  auto gen = stream_rng(42, 0);
  for (int k = 0; k < 500; ++k) {
    const AnsatzParams p = random_ansatz(gen);
    const ReparamCoords c = random_coords(gen);
    const QutritKet ket = ansatz_probe(p, c);
    const Vec3 t = random_unit(gen);
    const Vec3 n_rot(std::cos(c.phi), std::sin(c.phi), 0.0);
    CHECK(std::abs(su2_expectation(ket, t) - std::cos(2.0 * p.alpha) * t.dot(n_rot)) < 1e-12);
  }
  for (int k = 0; k < 300; ++k) {
    const EncodingConfig cfg = random_config(gen);
    const QutritKet ket = ansatz_probe(random_ansatz(gen), reparam(cfg));
    CHECK(std::abs(weak_commutation_residual(ket, planar_eta_pair(cfg))) < 1e-10);
  }
  CHECK_THROWS_AS(ansatz_probe({2.0, 0.0}, {1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(ansatz_probe({0.3, 4.0}, {1.0, 0.0}), InvalidInput);
}

TEST_CASE("ansatz probe is cos(a)|+> + e^{i psi} sin(a)|-> in the rotated J_x eigenbasis") {
  auto gen = stream_rng(43, 0);
  for (int k = 0; k < 100; ++k) {
    const AnsatzParams p = random_ansatz(gen);
    const ReparamCoords c = random_coords(gen);
    const auto [vmax, vmin] = extreme_eigenvectors(c.phi, Rep::qutrit);
    const ComplexVector expected = std::cos(p.alpha) * vmax + std::exp(kI * p.psi) * std::sin(p.alpha) * vmin;
    CHECK(fidelity(ansatz_probe(p, c).amplitudes(), expected) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("general qutrit QFIM against the SLD oracle") {
  auto gen = stream_rng(44, 0);
  for (int k = 0; k < 200; ++k) {
    const QutritKet ket(random_qutrit_amplitudes(gen));
    const Vec3 e1 = random_unit(gen), e2 = uniform(gen, 0.1, 2.0) * random_unit(gen);
    const ComplexVector psi = ket.amplitudes();
    const auto num = generator_information(psi * psi.adjoint(), spin_component(e1, Rep::qutrit),
                                           spin_component(e2, Rep::qutrit));
    const Mat2 f = qfim_qutrit(ket, e1, e2);
    CHECK(max_abs(f - num.info.qfim) < 1e-9);
    CHECK(qfim_qutrit_general(ket, e1, e2) == doctest::Approx(f(0, 1)).epsilon(1e-12));
    CHECK(qfim_qutrit_general(ket, e2, e1) == doctest::Approx(f(0, 1)).epsilon(1e-12));
  }
}

TEST_CASE("re-parameterized QFIM of ansatz probes is diagonal and matches the general form") {
  auto gen = stream_rng(45, 0);
  for (int k = 0; k < 1000; ++k) {
    const AnsatzParams p = random_ansatz(gen);
    const ReparamCoords c = random_coords(gen);
    const ReparamEtas e = eta_reparam(c);
    const Mat2 general = qfim_qutrit(ansatz_probe(p, c), e.eta_phi, e.eta_B);
    const ReparamQFIM closed = reparam_qfim_ansatz(p, c.B);
    CHECK(max_abs(closed.matrix() - general) < 1e-9);
    CHECK(std::abs(general(0, 1)) < 1e-10);
    CHECK(closed.B_B == doctest::Approx(4.0 * std::pow(std::sin(2.0 * p.alpha), 2)).epsilon(1e-14));
  }
}

TEST_CASE("alpha = pi/4, psi = pi - B reaches diag(16 sin^2(B/2), 4)") {
  auto gen = stream_rng(46, 0);
  for (int k = 0; k < 200; ++k) {
    const ReparamCoords c = random_coords(gen);
    const AnsatzParams p{0.25 * kPi, kPi - c.B};
    const ReparamEtas e = eta_reparam(c);
    const Mat2 f = qfim_qutrit(ansatz_probe(p, c), e.eta_phi, e.eta_B);
    const double s = std::sin(0.5 * c.B);
    CHECK(std::abs(f(0, 0) - 16.0 * s * s) < 1e-10);
    CHECK(std::abs(f(1, 1) - 4.0) < 1e-10);
    CHECK(std::abs(f(0, 1)) < 1e-10);
    CHECK(fidelity(optimal_qutrit_probe(c), ansatz_probe(p, c)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("optimal qutrit probe: explicit amplitudes") {
  const ReparamCoords c{0.5 * kPi, 0.3};
  const QutritKet k = optimal_qutrit_probe(c);
  const double s = std::sin(0.25 * kPi) / std::sqrt(2.0);
  CHECK(std::abs(k.m(1) - std::exp(-kI * 0.3) * s) < 1e-15);
  CHECK(std::abs(k.m(0) + kI * std::cos(0.25 * kPi)) < 1e-15);
  CHECK(std::abs(k.m(-1) - std::exp(kI * 0.3) * s) < 1e-15);
  CHECK(fidelity(k, ansatz_probe({0.25 * kPi, kPi - c.B}, c)) == doctest::Approx(1.0).epsilon(1e-14));

  const QutritKet pi_limit = optimal_qutrit_probe({kPi, 0.7});
  const Eigen::Vector3cd expected(std::exp(-kI * 0.7) / std::sqrt(2.0), 0.0, std::exp(kI * 0.7) / std::sqrt(2.0));
  CHECK(fidelity(pi_limit.amplitudes(), expected) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("optimal qutrit probe beats random probes for random weights") {
  auto gen = stream_rng(47, 0);
  for (int k = 0; k < 5; ++k) {
    const EncodingConfig cfg = random_config(gen, 0.2);
    const WeightMatrix w = random_weight(gen);
    const double best = min_qcrb_qutrit(cfg, w);
    const EtaPair etas = planar_eta_pair(cfg);
    const Mat2 at_opt = qfim_qutrit(optimal_qutrit_probe(reparam(cfg)), etas.eta1, etas.eta2);
    CHECK(qcrb_trace(at_opt, w) == doctest::Approx(best).epsilon(1e-10));
    int worse = 0;
    for (int s = 0; s < 2000; ++s) {
      const Mat2 f = qfim_qutrit(QutritKet(random_qutrit_amplitudes(gen)), etas.eta1, etas.eta2);
      if (f.determinant() <= 1e-12) {
        ++worse;
        continue;
      }
      if (qcrb_trace(f, w) >= best - 1e-9) ++worse;
    }
    CHECK(worse == 2000);
  }
}

TEST_CASE("minimum QCRB against the SLD oracle and the independent optimizer") {
  auto gen = stream_rng(48, 0);
  for (int k = 0; k < 100; ++k) {
    const EncodingConfig cfg = EncodingConfig::planar(uniform(gen, 0.3, kPi - 0.3), uniform(gen, -2.0, 2.0),
                                                      uniform(gen, -2.0, 2.0));
    const ReparamCoords c = reparam(cfg);
    if (c.B < 0.3 || std::sin(0.5 * c.B) < 0.3) continue;
    const WeightMatrix w = random_weight(gen);
    const ComplexVector psi = optimal_qutrit_probe(c).amplitudes();
    const auto num = encoded_state_information(cfg, psi * psi.adjoint());
    CHECK(min_qcrb_qutrit(cfg, w) == doctest::Approx(qcrb_trace(num.info.qfim, w)).epsilon(1e-10));
    CHECK(std::abs(num.info.d12) < 1e-10);
  }
  const WeightMatrix w(1.0, 0.2, 1.0);
  CHECK(min_qcrb_qutrit(EncodingConfig::planar(0.5 * kPi, 0.5, 0.5), w) ==
        doctest::Approx(0.5085458737).epsilon(1e-7));
  CHECK(min_qcrb_qutrit(EncodingConfig::planar(1.0, 0.5, 0.5), w) ==
        doctest::Approx(0.6588668604).epsilon(1e-7));
}

TEST_CASE("qutrit grid search at B = pi/2, phi = 0.3 finds the optimal probe") {
  const EncodingConfig cfg = config_for(0.5 * kPi, 0.3);
  const ReparamCoords c = reparam(cfg);
  CHECK(c.B == doctest::Approx(0.5 * kPi).epsilon(1e-14));
  CHECK(c.phi == doctest::Approx(0.3).epsilon(1e-14));
  const QutritGridResult g = grid_search_qutrit(cfg, WeightMatrix::identity(), 20);
  REQUIRE(g.feasible);
  CHECK(g.margin >= -1e-9);
  CHECK(g.grid_value >= g.closed_form - 1e-9);
  CHECK(g.fidelity_with_optimum > 0.999);
  CHECK(g.near_optimal_count >= 1);
}

TEST_CASE("commuting encodings are infeasible for qutrits too") {
  CHECK_THROWS_WITH_AS(min_qcrb_qutrit(EncodingConfig::planar(0.0, 0.5, 0.5), WeightMatrix::identity()),
                       "commuting encodings: estimation infeasible", NoOptimalProbe);
  const QutritGridResult g = grid_search_qutrit(EncodingConfig::planar(0.0, 0.5, 0.5), WeightMatrix::identity(), 20);
  CHECK_FALSE(g.feasible);
  CHECK(g.message == "infeasible: |eta1 x eta2| = 0");
  CHECK_THROWS_AS(qcrb_trace(Mat2::Zero(), WeightMatrix::identity()), SingularQFIM);
}

TEST_CASE("Loewner dominance of the optimal re-parameterized QFIM") {
  const LoewnerReport rep = loewner_dominance_scan(20000, 7);
  CHECK(rep.samples == 20000);
  CHECK(rep.pass);
  CHECK(rep.min_eigenvalue >= -1e-9);
  const LoewnerSample worst = loewner_sample(7, rep.worst_index);
  CHECK(loewner_min_eigenvalue(worst.ket, worst.coords) == rep.min_eigenvalue);
  CHECK(worst.coords.B == rep.worst_B);

  // At the optimum the difference vanishes.
  const ReparamCoords c{1.3, -0.4};
  CHECK(std::abs(loewner_min_eigenvalue(optimal_qutrit_probe(c), c)) < 1e-12);
  CHECK_THROWS_AS(loewner_dominance_scan(0, 1), InvalidInput);
}

TEST_CASE("commuting model: QCRB from the covariance QFIM") {
  const CommutingSpectra spectra{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}};
  auto gen = stream_rng(49, 0);
  for (int k = 0; k < 200; ++k) {
    const QutritKet ket(random_qutrit_amplitudes(gen));
    const WeightMatrix w = random_weight(gen);
    const double p0 = std::norm(ket[0]), p1 = std::norm(ket[1]);
    const auto num = generator_information(ket.amplitudes() * ket.amplitudes().adjoint(),
                                           ComplexMatrix(Eigen::Vector3cd(0.0, 1.0, 0.0).asDiagonal()),
                                           ComplexMatrix(Eigen::Vector3cd(1.0, 0.0, 0.0).asDiagonal()));
    CHECK(max_abs(commuting_qfim(ket, spectra) - num.info.qfim) < 1e-12);
    CHECK(std::abs(num.info.d12) < 1e-12);
    CHECK(commuting_qcrb(p0, p1, w) == doctest::Approx(qcrb_trace(commuting_qfim(ket, spectra), w)).epsilon(1e-9));
  }
  CHECK(std::isinf(commuting_qcrb(0.0, 0.5, WeightMatrix::identity())));
}

TEST_CASE("commuting model: closed-form minimizer against a brute-force simplex grid") {
  auto gen = stream_rng(50, 0);
  for (int k = 0; k < 10; ++k) {
    const WeightMatrix w = k == 0 ? WeightMatrix(1.0, 0.2, 1.0) : random_weight(gen);
    const CommutingAmplitudes a = commuting_optimal_amplitudes(w);
    CHECK(a.c0 * a.c0 + a.c1 * a.c1 + a.c2 * a.c2 == doctest::Approx(1.0).epsilon(1e-14));
    const double closed = commuting_qcrb(a.c0 * a.c0, a.c1 * a.c1, w);
    const int n = 1000;
    double best = INFINITY, b0 = 0.0, b1 = 0.0;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; i + j < n; ++j) {
        const double v = commuting_qcrb(double(i) / n, double(j) / n, w);
        if (v < best) {
          best = v;
          b0 = double(i) / n;
          b1 = double(j) / n;
        }
      }
    }
    CHECK(best >= closed - 1e-12);
    CHECK(best - closed < 1e-3 * closed);
    CHECK(std::abs(b0 - a.c0 * a.c0) <= 2.0 / n);
    CHECK(std::abs(b1 - a.c1 * a.c1) <= 2.0 / n);
  }
  const CommutingAmplitudes sym = commuting_optimal_amplitudes(WeightMatrix(1.0, 0.2, 1.0));
  CHECK(sym.c0 == doctest::Approx(sym.c1).epsilon(1e-15));
  CHECK(sym.c0 == doctest::Approx(0.5308).epsilon(1e-4));
}
