#include <cmath>
#include <numbers>

#include "doctest.h"
#include "su2est/errors.hpp"
#include "su2est/sampling.hpp"
#include "su2est/su2_algebra.hpp"

using namespace su2est;

namespace {

constexpr cplx kI{0.0, 1.0};

double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("generators obey the su(2) commutation relations") {
  for (Rep rep : {Rep::qubit, Rep::qutrit}) {
    const auto s = spin_operators(rep);
    CHECK(dist(commutator(s[0], s[1]), kI * s[2]) < 1e-15);
    CHECK(dist(commutator(s[1], s[2]), kI * s[0]) < 1e-15);
    CHECK(dist(commutator(s[2], s[0]), kI * s[1]) < 1e-15);
    const double j = rep == Rep::qubit ? 0.5 : 1.0;
    const int d = dimension(rep);
    const ComplexMatrix casimir = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    CHECK(dist(casimir, j * (j + 1) * ComplexMatrix::Identity(d, d)) < 1e-15);
  }
  const auto p = pauli_matrices();
  CHECK(dist(p[2], ComplexMatrix(Eigen::Vector2cd(1.0, -1.0).asDiagonal())) == 0.0);
  const auto j = spin1_generators();
  CHECK(dist(j[2], ComplexMatrix(Eigen::Vector3cd(1.0, 0.0, -1.0).asDiagonal())) == 0.0);
}

TEST_CASE("closed-form group elements match the generic exponential") {
  auto gen = stream_rng(11, 0);
  for (int k = 0; k < 200; ++k) {
    const Vec3 n = random_unit(gen);
    const double angle = uniform(gen, -7.0, 7.0);
    for (Rep rep : {Rep::qubit, Rep::qutrit}) {
      const ComplexMatrix u = su2_unitary(n, angle, rep);
      CHECK(is_unitary(u, 1e-12));
      CHECK(dist(u, hermitian_exp(spin_component(n, rep), angle)) < 1e-12);
    }
  }
  const ComplexMatrix minus_one = su2_unitary(Vec3::UnitZ(), 2.0 * std::numbers::pi, Rep::qubit);
  CHECK(dist(minus_one, -ComplexMatrix::Identity(2, 2)) < 1e-15);
  const ComplexMatrix one = su2_unitary(Vec3::UnitX(), 2.0 * std::numbers::pi, Rep::qutrit);
  CHECK(dist(one, ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK_THROWS_AS(su2_unitary(Vec3(1.0, 1.0, 0.0), 0.3, Rep::qubit), InvalidAxis);
}

TEST_CASE("Bloch vectors") {
  auto gen = stream_rng(12, 0);
  for (int k = 0; k < 100; ++k) {
    const BlochVector r(uniform(gen, 0.0, 1.0) * random_unit(gen));
    const ComplexMatrix rho = bloch_to_density(r);
    CHECK(is_hermitian(rho));
    CHECK(std::abs(rho.trace() - 1.0) < 1e-15);
    CHECK((density_to_bloch(rho).r() - r.r()).norm() < 1e-15);
  }
  CHECK_THROWS_AS(BlochVector(0.0, 0.8, 0.8), InvalidBloch);
  CHECK(BlochVector(0.0, 0.0, 1.0).is_pure(1e-10));
  CHECK_FALSE(BlochVector(0.0, 0.0, 0.5).is_pure(1e-10));
}

TEST_CASE("qutrit kets") {
  CHECK_THROWS_AS(QutritKet(Eigen::Vector3cd(1.0, 1.0, 0.0)), InvalidKet);
  const QutritKet k = QutritKet::normalized(Eigen::Vector3cd(1.0, 2.0, cplx(0.0, 2.0)));
  CHECK(std::abs(k.amplitudes().norm() - 1.0) < 1e-15);
  CHECK(k.m(1) == k[0]);
  CHECK(k.m(-1) == k[2]);
  const QutritKet phased(std::exp(kI * 0.7) * k.amplitudes());
  CHECK(fidelity(k, phased) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rotated J_x and its extreme eigenvectors") {
  auto gen = stream_rng(13, 0);
  for (int k = 0; k < 100; ++k) {
    const double phi = uniform(gen, -std::numbers::pi, std::numbers::pi);
    for (Rep rep : {Rep::qubit, Rep::qutrit}) {
      const auto s = spin_operators(rep);
      const ComplexMatrix jz_rot = hermitian_exp(s[2], phi);
      const ComplexMatrix expected = jz_rot * s[0] * jz_rot.adjoint();
      const ComplexMatrix jx = rotated_jx(phi, rep);
      CHECK(dist(jx, expected) < 1e-12);
      const double j = rep == Rep::qubit ? 0.5 : 1.0;
      const auto [vmax, vmin] = extreme_eigenvectors(phi, rep);
      CHECK(std::abs(vmax.norm() - 1.0) < 1e-14);
      CHECK(std::abs(vmin.norm() - 1.0) < 1e-14);
      CHECK((jx * vmax - j * vmax).norm() < 1e-12);
      CHECK((jx * vmin + j * vmin).norm() < 1e-12);
    }
  }
}
