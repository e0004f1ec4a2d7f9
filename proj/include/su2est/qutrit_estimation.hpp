#pragma once

// Single-qutrit probes for SU(2) encodings in the spin-1 representation, and
// the commuting-Hamiltonian qutrit model.
//
// Kets for the SU(2) encoding are written in the J_z eigenbasis of the planar
// frame of the encoding (a1 along x, a2 in the xy-plane).

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "su2est/effective_hamiltonians.hpp"
#include "su2est/qubit_estimation.hpp"
#include "su2est/su2_algebra.hpp"

namespace su2est {

// Probe cos(alpha)|lambda_max> + e^{i psi} sin(alpha)|lambda_min>,
// alpha in [0, pi/2], psi in [-pi, pi].
struct AnsatzParams {
  double alpha = 0.0;
  double psi = 0.0;
};

// QFIM of the (phi, B) parameterization.
struct ReparamQFIM {
  double phi_phi = 0.0;
  double B_B = 0.0;
  double phi_B = 0.0;

  // Index order (phi, B).
  Mat2 matrix() const;
};

// Eigenvalues of H1 and H2 in their shared eigenbasis.
struct CommutingSpectra {
  std::array<double, 3> lambda{};
  std::array<double, 3> lambda_prime{};
};

// c_0 = (cos a - e^{i psi} sin a)/sqrt(2), c_{+-1} = e^{-+i phi}(cos a + e^{i psi} sin a)/2.
// Throws InvalidInput when alpha or psi is out of range.
QutritKet ansatz_probe(const AnsatzParams& p, const ReparamCoords& coords);

// <t.J> = t_z sum_mu mu |c_mu|^2 + sqrt(2) Re[(t_x + i t_y)(c*_{-1} c_0 + c*_0 c_1)].
double su2_expectation(const QutritKet& ket, const Vec3& t);

// <(eta1 x eta2).J>; zero means the weak-commutation condition holds.
double weak_commutation_residual(const QutritKet& ket, const EtaPair& etas);

// 4 [Re<(eta_i.J)(eta_j.J)> - <eta_i.J><eta_j.J>].
double qfim_qutrit_general(const QutritKet& ket, const Vec3& eta_i, const Vec3& eta_j);

// Full 2x2 QFIM of the pair (eta_a, eta_b).
Mat2 qfim_qutrit(const QutritKet& ket, const Vec3& eta_a, const Vec3& eta_b);

// Closed form for ansatz probes: phi_phi = 8 sin^2(B/2) [1 - sin(2a) cos(psi + B)],
// B_B = 4 sin^2(2a), phi_B = 0.
ReparamQFIM reparam_qfim_ansatz(const AnsatzParams& p, double B);

// QFIM with both diagonal entries at their maxima: diag(16 sin^2(B/2), 4).
ReparamQFIM reparam_qfim_max(double B);

// sin(B/2) (e^{i phi}|1;-1> + e^{-i phi}|1;1>)/sqrt(2) - i cos(B/2)|1;0>
QutritKet optimal_qutrit_probe(const ReparamCoords& coords);

// Tr(W F^{-1}). Throws SingularQFIM when det F <= 1e-12.
double qcrb_trace(const Mat2& qfim, const WeightMatrix& w);

// Minimum QCRB over qutrit probes for the (phi1, phi2) parameters: the optimal
// probe's re-parameterized QFIM pulled back through the Jacobian. Throws
// SingularReparam / SingularQFIM when estimation is infeasible.
double min_qcrb_qutrit(const EncodingConfig& cfg, const WeightMatrix& w);

// Effective-Hamiltonian vectors of cfg expressed in its planar frame, the
// frame in which the qutrit kets above are written.
EtaPair planar_eta_pair(const EncodingConfig& cfg);

struct LoewnerReport {
  std::int64_t samples = 0;
  double min_eigenvalue = 0.0;
  std::int64_t worst_index = -1;
  double worst_B = 0.0;
  double worst_phi = 0.0;
  bool pass = true;
};

// Draws `samples` Haar-random qutrit probes with B ~ U[0, 2pi], phi ~ U[-pi, pi]
// and records the smallest eigenvalue of F_max - G, where G is the probe's
// re-parameterized QFIM. Sample k uses its own generator seeded from
// (seed, k), so the result does not depend on the thread count.
LoewnerReport loewner_dominance_scan(std::int64_t samples, std::uint64_t seed);
LoewnerReport loewner_dominance_scan_serial(std::int64_t samples, std::uint64_t seed);

// One sample of the scan, exposed for tests and benchmarks.
struct LoewnerSample {
  QutritKet ket;
  ReparamCoords coords;
};
LoewnerSample loewner_sample(std::uint64_t seed, std::int64_t index);
double loewner_min_eigenvalue(const QutritKet& ket, const ReparamCoords& coords);

// 4 Cov(H1, H2) for diagonal H1 = diag(lambda), H2 = diag(lambda').
Mat2 commuting_qfim(const QutritKet& ket, const CommutingSpectra& spectra);

// 1/4 [w22/|c0|^2 + w11/|c1|^2 + (w11 + w22 + 2 w12)/|c2|^2], the QCRB of the
// commuting model with lambda_1 = lambda_3 = lambda_2 - 1 and
// lambda'_2 = lambda'_3 = lambda'_1 - 1, as a function of the populations.
double commuting_qcrb(double p0, double p1, const WeightMatrix& w);

struct CommutingAmplitudes {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

// Interior minimizer of commuting_qcrb over the open simplex.
CommutingAmplitudes commuting_optimal_amplitudes(const WeightMatrix& w);

}  // namespace su2est
