#pragma once

// Numerical ground truth for the closed forms: finite-difference effective
// Hamiltonians, SLD-based QFIM and Uhlmann elements, brute-force probe
// searches, and the verification suite run by `su2est verify`.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "su2est/effective_hamiltonians.hpp"
#include "su2est/qubit_estimation.hpp"
#include "su2est/qutrit_estimation.hpp"
#include "su2est/su2_algebra.hpp"

namespace su2est {

struct EffectiveHamiltonians {
  ComplexMatrix h1;
  ComplexMatrix h2;
};

// H_j = i (d_j U^dagger) U with d_j from central differences of step h.
// Throws InvalidInput unless h is in [1e-8, 1e-3].
EffectiveHamiltonians numerical_effective_hamiltonians(const EncodingConfig& cfg, double h = 1e-5,
                                                       Rep rep = Rep::qubit);

// Components of H = eta.S: Tr(H sigma_a) on a qubit, Tr(H J_a)/2 on a qutrit.
EtaPair eta_from_effective_hamiltonians(const EffectiveHamiltonians& heff, Rep rep);

// U = exp(-i (phi1 a1 + phi2 a2).S), built from the generic Hermitian exponential.
ComplexMatrix encoding_unitary(const EncodingConfig& cfg, Rep rep);

// Exact dU/dphi_j from the Daleckii-Krein formula in the generator's eigenbasis.
std::array<ComplexMatrix, 2> encoding_unitary_derivatives(const EncodingConfig& cfg, Rep rep);

// L with (L)_mn = 2 (d rho)_mn / (l_m + l_n) in the eigenbasis of rho; entries
// with both eigenvalues below 1e-12 are set to zero.
std::vector<ComplexMatrix> sld_from_state(const ComplexMatrix& rho,
                                          const std::vector<ComplexMatrix>& drho);

struct QfimUhlmann {
  Mat2 qfim;
  double d12 = 0.0;
};

// F_ij = Re Tr(rho L_i L_j), D_12 = Im Tr(rho L_1 L_2).
QfimUhlmann qfim_uhlmann_from_slds(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& slds);

struct EncodedInformation {
  ComplexMatrix rho;
  std::vector<ComplexMatrix> drho;
  std::vector<ComplexMatrix> slds;
  QfimUhlmann info;
  // max |d rho - (L rho + rho L)/2| over both parameters, restricted to the support.
  double lyapunov_residual = 0.0;
};

// Encodes rho_in with U(phi1, phi2) and solves for the SLDs of both phases.
EncodedInformation encoded_state_information(const EncodingConfig& cfg, const ComplexMatrix& rho_in);

// Same, for a state moving as d_j rho = -i [H_j, rho].
EncodedInformation generator_information(const ComplexMatrix& rho, const ComplexMatrix& h1,
                                         const ComplexMatrix& h2);

// Tr(W F^-1) + || sqrt(W) F^-1 D F^-1 sqrt(W) ||_1, D = [[0, d12], [-d12, 0]].
// Throws SingularQFIM when det F <= 1e-12.
double holevo_from_matrices(const Mat2& qfim, double d12, const WeightMatrix& w);

struct QubitGridResult {
  bool feasible = false;
  std::string message;
  Vec3 best_direction = Vec3::Zero();
  double best_value = 0.0;
  double closed_form = 0.0;
  double margin = 0.0;  // best_value - closed_form
  // Angle between best_direction and the nearer of +-r_opt.
  double angle_to_optimum = 0.0;
  double angular_tolerance = 0.0;
  std::int64_t evaluated = 0;
  std::int64_t best_index = -1;
};

// Sweeps chi_i = pi i/res (i = 0..res) and vs_j = pi j/res (j < 2 res) over
// the Bloch sphere and keeps the smallest HCRB. Throws InvalidInput when
// resolution < 20.
QubitGridResult grid_search_qubit(const EncodingConfig& cfg, const WeightMatrix& w, int resolution);
QubitGridResult grid_search_qubit_serial(const EncodingConfig& cfg, const WeightMatrix& w,
                                         int resolution);

struct QutritGridResult {
  bool feasible = false;
  std::string message;
  // Chart (theta0, theta1, phi_plus, phi_minus) of the refined minimizer.
  std::array<double, 4> best_chart{};
  Eigen::Vector3cd best_ket = Eigen::Vector3cd::Zero();
  double grid_value = 0.0;
  double best_value = 0.0;
  double closed_form = 0.0;
  double margin = 0.0;
  double fidelity_with_optimum = 0.0;
  // Grid points within near_tolerance (relative) of the closed form, and the
  // lowest fidelity with the optimal probe among them.
  std::int64_t near_optimal_count = 0;
  double near_optimal_min_fidelity = 1.0;
  double near_tolerance = 0.0;
  std::int64_t evaluated = 0;
};

// c_0 = cos t0, c_{+1} = sin t0 cos t1 e^{i p+}, c_{-1} = sin t0 sin t1 e^{i p-}.
Eigen::Vector3cd qutrit_chart_ket(const std::array<double, 4>& chart);

// Grid of res+1 points per polar angle on [0, pi/2] and res points per phase on
// [0, 2 pi), followed by a compass search from the best grid point.
QutritGridResult grid_search_qutrit(const EncodingConfig& cfg, const WeightMatrix& w, int resolution,
                                    double near_tolerance = 1e-2);
QutritGridResult grid_search_qutrit_serial(const EncodingConfig& cfg, const WeightMatrix& w,
                                           int resolution, double near_tolerance = 1e-2);

struct OracleReport {
  std::string name;
  double closed_form = 0.0;  // at the worst instance
  double numerical = 0.0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyHooks {
  // Replaces eta_pair as the closed form under test; empty means eta_pair.
  std::function<EtaPair(const EncodingConfig&)> eta_provider;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::int64_t kDefaultBudget = 500;

// Runs every suite with `budget` random instances each (the grid and
// dominance suites scale from it). budget = 0 returns an empty list.
std::vector<OracleReport> verify_all(std::uint64_t seed = kDefaultSeed,
                                     std::int64_t budget = kDefaultBudget,
                                     const VerifyHooks& hooks = {});

bool all_pass(const std::vector<OracleReport>& reports);

void write_reports_text(std::ostream& os, const std::vector<OracleReport>& reports);
std::string reports_to_json(const std::vector<OracleReport>& reports);

}  // namespace su2est
