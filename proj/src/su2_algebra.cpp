#include "su2est/su2_algebra.hpp"

#include <cmath>

#include "su2est/constants.hpp"
#include "su2est/errors.hpp"

namespace su2est {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

std::array<ComplexMatrix, 3> pauli_matrices() {
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -kI, kI, 0;
  sz << 1, 0, 0, -1;
  return {sx, sy, sz};
}

std::array<ComplexMatrix, 3> spin1_generators() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix jx(3, 3), jy(3, 3), jz(3, 3);
  jx << 0, s, 0,
        s, 0, s,
        0, s, 0;
  jy << 0, -kI * s, 0,
        kI * s, 0, -kI * s,
        0, kI * s, 0;
  jz << 1, 0, 0,
        0, 0, 0,
        0, 0, -1;
  return {jx, jy, jz};
}

std::array<ComplexMatrix, 3> spin_operators(Rep rep) {
  if (rep == Rep::qutrit) return spin1_generators();
  auto s = pauli_matrices();
  for (auto& m : s) m *= 0.5;
  return s;
}

ComplexMatrix spin_component(const Vec3& t, Rep rep) {
  const auto s = spin_operators(rep);
  return t.x() * s[0] + t.y() * s[1] + t.z() * s[2];
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  const auto id = ComplexMatrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).cwiseAbs().maxCoeff() < tol;
}

ComplexMatrix hermitian_exp(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  ComplexVector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::exp(-kI * t * lambda(k));
  }
  const ComplexMatrix& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

BlochVector::BlochVector(const Vec3& r) : r_(r) {
  if (!r.allFinite() || r.norm() > 1.0 + kTol.bloch_radius) {
    throw InvalidBloch("Bloch vector must satisfy |r| <= 1");
  }
}

bool BlochVector::is_pure(double tol) const { return std::abs(r_.norm() - 1.0) < tol; }

ComplexMatrix bloch_to_density(const BlochVector& r) {
  const auto s = pauli_matrices();
  ComplexMatrix rho = ComplexMatrix::Identity(2, 2);
  for (int a = 0; a < 3; ++a) rho += r.r()(a) * s[a];
  return 0.5 * rho;
}

BlochVector density_to_bloch(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw InvalidInput("density_to_bloch expects a 2x2 matrix");
  }
  const auto s = pauli_matrices();
  Vec3 r;
  for (int a = 0; a < 3; ++a) r(a) = (rho * s[a]).trace().real();
  return BlochVector(r);
}

QutritKet::QutritKet(const Eigen::Vector3cd& amplitudes) : c_(amplitudes) {
  if (!c_.allFinite() || std::abs(c_.squaredNorm() - 1.0) > kTol.normalization) {
    throw InvalidKet("qutrit amplitudes must be normalized");
  }
}

QutritKet QutritKet::normalized(const Eigen::Vector3cd& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw InvalidKet("cannot normalize a zero ket");
  return QutritKet(amplitudes / n);
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  return std::abs(a.dot(b));
}

double fidelity(const QutritKet& a, const QutritKet& b) {
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

ComplexMatrix su2_unitary(const Vec3& n, double angle, Rep rep) {
  if (!n.allFinite() || std::abs(n.norm() - 1.0) > kTol.normalization) {
    throw InvalidAxis("rotation axis must be a unit vector");
  }
  if (rep == Rep::qubit) {
    const auto s = pauli_matrices();
    ComplexMatrix u = std::cos(0.5 * angle) * ComplexMatrix::Identity(2, 2);
    u -= kI * std::sin(0.5 * angle) * (n.x() * s[0] + n.y() * s[1] + n.z() * s[2]);
    return u;
  }
  return hermitian_exp(spin_component(n, Rep::qutrit), angle);
}

ComplexMatrix rotated_jx(double phi, Rep rep) {
  return spin_component(Vec3(std::cos(phi), std::sin(phi), 0.0), rep);
}

std::pair<ComplexVector, ComplexVector> extreme_eigenvectors(double phi, Rep rep) {
  // Components over m_z = +j, ..., -j; index k corresponds to m_z = j - k.
  const int two_j = rep == Rep::qubit ? 1 : 2;
  const double j = 0.5 * two_j;
  const int dim = two_j + 1;
  ComplexVector vmax(dim), vmin(dim);
  const double norm = std::pow(2.0, -j);
  for (int k = 0; k < dim; ++k) {
    const double mz = j - k;
    const int j_plus_m = two_j - k;
    // binom(2j, j + m)
    double binom = 1.0;
    for (int i = 1; i <= j_plus_m; ++i) binom = binom * (two_j - j_plus_m + i) / i;
    const cplx amp = norm * std::sqrt(binom) * std::exp(-kI * mz * phi);
    vmax(k) = amp;
    vmin(k) = (j_plus_m % 2 == 0) ? amp : -amp;
  }
  return {vmax, vmin};
}

}  // namespace su2est
