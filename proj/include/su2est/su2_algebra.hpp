#pragma once

// Exact small-dimension SU(2) algebra: Pauli and spin-1 generators, Bloch
// maps, closed-form group elements and the extreme eigenvectors of a rotated
// J_x.
//
// Basis conventions: the qubit basis is (|0>, |1>) = (m_z = +1/2, -1/2) and
// the spin-1 basis is (m_z = +1, 0, -1). Every module uses these orders.

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace su2est {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class Rep { qubit, qutrit };

inline int dimension(Rep rep) { return rep == Rep::qubit ? 2 : 3; }

std::array<ComplexMatrix, 3> pauli_matrices();

// (J_x, J_y, J_z) for spin 1 in the (m_z = +1, 0, -1) basis.
std::array<ComplexMatrix, 3> spin1_generators();

// Spin operators of the representation: sigma/2 for the qubit, J for the qutrit.
std::array<ComplexMatrix, 3> spin_operators(Rep rep);

// t . S for the representation.
ComplexMatrix spin_component(const Vec3& t, Rep rep);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-12);

// exp(-i t H) for Hermitian H, via eigendecomposition.
ComplexMatrix hermitian_exp(const ComplexMatrix& h, double t);

/// Bloch vector of a qubit state, rho = (I + r.sigma)/2. Construction fails
/// with InvalidBloch when |r| > 1.
class BlochVector {
 public:
  explicit BlochVector(const Vec3& r);
  BlochVector(double x, double y, double z) : BlochVector(Vec3(x, y, z)) {}

  const Vec3& r() const { return r_; }
  double norm() const { return r_.norm(); }
  bool is_pure(double tol) const;

 private:
  Vec3 r_;
};

ComplexMatrix bloch_to_density(const BlochVector& r);
BlochVector density_to_bloch(const ComplexMatrix& rho);

/// Normalized pure qutrit state. Amplitudes are stored in the (m_z = +1, 0, -1)
/// order; for the commuting-Hamiltonian model the same three slots hold the
/// coefficients in the shared eigenbasis (|0>, |1>, |2>).
class QutritKet {
 public:
  // Throws InvalidKet unless sum |c|^2 = 1 within 1e-12.
  explicit QutritKet(const Eigen::Vector3cd& amplitudes);
  static QutritKet normalized(const Eigen::Vector3cd& amplitudes);

  const Eigen::Vector3cd& amplitudes() const { return c_; }
  cplx operator[](int i) const { return c_(i); }
  // Coefficient of |1; m_z>.
  cplx m(int mz) const { return c_(1 - mz); }

 private:
  Eigen::Vector3cd c_;
};

// |<a|b>|, insensitive to global phase.
double fidelity(const ComplexVector& a, const ComplexVector& b);
double fidelity(const QutritKet& a, const QutritKet& b);

// exp(-i B n.S); n must be a unit vector (InvalidAxis otherwise).
ComplexMatrix su2_unitary(const Vec3& n, double angle, Rep rep);

// cos(phi) J_x + sin(phi) J_y = exp(-i phi J_z) J_x exp(i phi J_z).
ComplexMatrix rotated_jx(double phi, Rep rep);

// Eigenvectors of rotated_jx(phi) with eigenvalues +j and -j, from the
// Wigner-d expansion of the J_x eigenstates.
std::pair<ComplexVector, ComplexVector> extreme_eigenvectors(double phi, Rep rep);

}  // namespace su2est
