#include "su2est/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "json.hpp"

#include "su2est/constants.hpp"
#include "su2est/errors.hpp"
#include "su2est/sampling.hpp"

namespace su2est {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double eta_error(const EtaPair& a, const EtaPair& b) {
  return std::max((a.eta1 - b.eta1).cwiseAbs().maxCoeff(), (a.eta2 - b.eta2).cwiseAbs().maxCoeff());
}

// Smallest (value, index) pair wins; used by every parallel minimum so the
// answer matches the serial sweep exactly.
struct ArgMin {
  double value = kInf;
  std::int64_t index = -1;

  void offer(double v, std::int64_t k) {
    if (v < value || (v == value && (index < 0 || k < index))) {
      value = v;
      index = k;
    }
  }
};

Vec3 sphere_point(int i, int j, int res) {
  const double chi = kPi * i / res;
  const double vs = kPi * j / res;
  return {std::sin(chi) * std::cos(vs), std::sin(chi) * std::sin(vs), std::cos(chi)};
}

// HCRB at a unit direction, +inf where the bound does not exist.
double qubit_value(const Vec3& r, const EtaPair& etas, const WeightMatrix& w) {
  if (std::abs(r.dot(etas.cross())) < kTol.singular_triple) return kInf;
  return hcrb_qubit(BlochVector(r), etas, w);
}

QubitGridResult qubit_grid_setup(const EncodingConfig& cfg, const WeightMatrix& w, int resolution,
                                 EtaPair& etas) {
  if (resolution < 20) throw InvalidInput("grid resolution must be at least 20 points per angle");
  QubitGridResult res;
  res.angular_tolerance = 2.0 * kPi / resolution;
  etas = eta_pair(cfg);
  if (etas.cross().norm() < kTol.degenerate_cross) {
    res.feasible = false;
    res.message = "infeasible: |eta1 x eta2| = 0";
    return res;
  }
  res.feasible = true;
  res.closed_form = min_hcrb_qubit(etas, w);
  return res;
}

void qubit_grid_finish(QubitGridResult& res, const ArgMin& best, const EtaPair& etas, int resolution) {
  const int nvs = 2 * resolution;
  res.evaluated = static_cast<std::int64_t>(resolution + 1) * nvs;
  res.best_index = best.index;
  res.best_value = best.value;
  res.best_direction = sphere_point(static_cast<int>(best.index / nvs),
                                    static_cast<int>(best.index % nvs), resolution);
  res.margin = res.best_value - res.closed_form;
  const Vec3 ropt = optimal_qubit_probe(etas).primary.r();
  res.angle_to_optimum =
      std::min(angle_between(res.best_direction, ropt), angle_between(res.best_direction, -ropt));
  res.message = "ok";
}

struct QutritObjective {
  Eigen::Matrix3cd h1;
  Eigen::Matrix3cd h2;
  const WeightMatrix* w;

  double operator()(const Eigen::Vector3cd& psi) const {
    const Eigen::Vector3cd v1 = h1 * psi;
    const Eigen::Vector3cd v2 = h2 * psi;
    const double m1 = psi.dot(v1).real(), m2 = psi.dot(v2).real();
    const double f11 = 4.0 * (v1.squaredNorm() - m1 * m1);
    const double f22 = 4.0 * (v2.squaredNorm() - m2 * m2);
    const double f12 = 4.0 * (v1.dot(v2).real() - m1 * m2);
    const double det = f11 * f22 - f12 * f12;
    if (!(det > kTol.singular_det)) return kInf;
    return (w->w11() * f22 + w->w22() * f11 - 2.0 * w->w12() * f12) / det;
  }
};

struct QutritGrid {
  int res;
  std::int64_t n_polar, n_phase;

  explicit QutritGrid(int r) : res(r), n_polar(r + 1), n_phase(r) {}
  std::int64_t size() const { return n_polar * n_polar * n_phase * n_phase; }
  std::array<double, 4> chart(std::int64_t k) const {
    const std::int64_t pm = k % n_phase;
    k /= n_phase;
    const std::int64_t pp = k % n_phase;
    k /= n_phase;
    const std::int64_t t1 = k % n_polar;
    const std::int64_t t0 = k / n_polar;
    return {0.5 * kPi * t0 / res, 0.5 * kPi * t1 / res, 2.0 * kPi * pp / res, 2.0 * kPi * pm / res};
  }
};

QutritGridResult qutrit_grid_setup(const EncodingConfig& cfg, const WeightMatrix& w, int resolution,
                                   double near_tolerance, QutritObjective& obj,
                                   Eigen::Vector3cd& optimum) {
  if (resolution < 20) throw InvalidInput("grid resolution must be at least 20 points per angle");
  QutritGridResult res;
  res.near_tolerance = near_tolerance;
  const EtaPair etas = planar_eta_pair(cfg);
  if (etas.cross().norm() < kTol.degenerate_cross) {
    res.feasible = false;
    res.message = "infeasible: |eta1 x eta2| = 0";
    return res;
  }
  res.closed_form = min_qcrb_qutrit(cfg, w);
  res.feasible = true;
  obj.h1 = spin_component(etas.eta1, Rep::qutrit);
  obj.h2 = spin_component(etas.eta2, Rep::qutrit);
  obj.w = &w;
  optimum = optimal_qutrit_probe(reparam(cfg)).amplitudes();
  return res;
}

void qutrit_refine(QutritGridResult& res, const QutritObjective& obj, std::array<double, 4> x,
                   int resolution, const Eigen::Vector3cd& optimum) {
  double fx = obj(qutrit_chart_ket(x));
  std::array<double, 4> step{0.5 * kPi / resolution, 0.5 * kPi / resolution, 2.0 * kPi / resolution,
                             2.0 * kPi / resolution};
  for (int iter = 0; iter < 100000 && step[0] > 1e-12; ++iter) {
    bool moved = false;
    for (int d = 0; d < 4 && !moved; ++d) {
      for (const double sign : {1.0, -1.0}) {
        std::array<double, 4> y = x;
        y[d] += sign * step[d];
        const double fy = obj(qutrit_chart_ket(y));
        if (fy < fx) {
          x = y;
          fx = fy;
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      for (double& s : step) s *= 0.5;
    }
  }
  res.best_chart = x;
  res.best_ket = qutrit_chart_ket(x);
  res.best_value = std::min(fx, res.grid_value);
  res.margin = res.best_value - res.closed_form;
  res.fidelity_with_optimum = std::abs(optimum.dot(res.best_ket));
  res.message = "ok";
}

}  // namespace

EffectiveHamiltonians numerical_effective_hamiltonians(const EncodingConfig& cfg, double h, Rep rep) {
  if (!(h >= 1e-8 && h <= 1e-3)) throw InvalidInput("finite-difference step must lie in [1e-8, 1e-3]");
  const ComplexMatrix u = encoding_unitary(cfg, rep);
  auto heff = [&](double d1, double d2) {
    const ComplexMatrix up =
        encoding_unitary(cfg.with_phases(cfg.phi1() + d1, cfg.phi2() + d2), rep).adjoint();
    const ComplexMatrix um =
        encoding_unitary(cfg.with_phases(cfg.phi1() - d1, cfg.phi2() - d2), rep).adjoint();
    const ComplexMatrix dudag = (up - um) / (2.0 * h);
    return ComplexMatrix(kI * dudag * u);
  };
  return {heff(h, 0.0), heff(0.0, h)};
}

EtaPair eta_from_effective_hamiltonians(const EffectiveHamiltonians& heff, Rep rep) {
  const auto ops = rep == Rep::qubit ? pauli_matrices() : spin1_generators();
  const double norm = rep == Rep::qubit ? 1.0 : 0.5;
  EtaPair out{Vec3::Zero(), Vec3::Zero()};
  for (int a = 0; a < 3; ++a) {
    out.eta1(a) = norm * (heff.h1 * ops[a]).trace().real();
    out.eta2(a) = norm * (heff.h2 * ops[a]).trace().real();
  }
  return out;
}

ComplexMatrix encoding_unitary(const EncodingConfig& cfg, Rep rep) {
  return hermitian_exp(spin_component(cfg.generator(), rep), 1.0);
}

std::array<ComplexMatrix, 2> encoding_unitary_derivatives(const EncodingConfig& cfg, Rep rep) {
  const ComplexMatrix g = spin_component(cfg.generator(), rep);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
  const ComplexMatrix& v = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const int n = static_cast<int>(lam.size());
  ComplexMatrix div(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      div(k, l) = -kI * std::exp(-kI * (0.5 * (lam(k) + lam(l)))) * sinc(0.5 * (lam(k) - lam(l)));
    }
  }
  std::array<ComplexMatrix, 2> out;
  const Vec3 axes[2] = {cfg.a1(), cfg.a2()};
  for (int j = 0; j < 2; ++j) {
    const ComplexMatrix a = v.adjoint() * spin_component(axes[j], rep) * v;
    out[j] = v * a.cwiseProduct(div) * v.adjoint();
  }
  return out;
}

std::vector<ComplexMatrix> sld_from_state(const ComplexMatrix& rho,
                                          const std::vector<ComplexMatrix>& drho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
  const ComplexMatrix& v = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const int n = static_cast<int>(lam.size());
  std::vector<ComplexMatrix> out;
  out.reserve(drho.size());
  for (const ComplexMatrix& d : drho) {
    const ComplexMatrix x = v.adjoint() * d * v;
    ComplexMatrix l = ComplexMatrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) {
        const double s = lam(m) + lam(k);
        if (std::max(lam(m), lam(k)) > kTol.support_cutoff) l(m, k) = 2.0 * x(m, k) / s;
      }
    }
    out.push_back(v * l * v.adjoint());
  }
  return out;
}

QfimUhlmann qfim_uhlmann_from_slds(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& slds) {
  QfimUhlmann out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.qfim(i, j) = (rho * slds[i] * slds[j]).trace().real();
  }
  out.qfim = 0.5 * (out.qfim + out.qfim.transpose()).eval();
  out.d12 = (rho * slds[0] * slds[1]).trace().imag();
  return out;
}

namespace {

EncodedInformation finish_information(ComplexMatrix rho, std::vector<ComplexMatrix> drho) {
  EncodedInformation info;
  info.slds = sld_from_state(rho, drho);
  info.info = qfim_uhlmann_from_slds(rho, info.slds);
  for (std::size_t j = 0; j < drho.size(); ++j) {
    const ComplexMatrix& l = info.slds[j];
    info.lyapunov_residual =
        std::max(info.lyapunov_residual, max_abs(ComplexMatrix(drho[j] - 0.5 * (l * rho + rho * l))));
  }
  info.rho = std::move(rho);
  info.drho = std::move(drho);
  return info;
}

}  // namespace

EncodedInformation encoded_state_information(const EncodingConfig& cfg, const ComplexMatrix& rho_in) {
  const Rep rep = rho_in.rows() == 2 ? Rep::qubit : Rep::qutrit;
  const ComplexMatrix u = encoding_unitary(cfg, rep);
  const auto du = encoding_unitary_derivatives(cfg, rep);
  ComplexMatrix rho = u * rho_in * u.adjoint();
  std::vector<ComplexMatrix> drho;
  for (const ComplexMatrix& d : du) {
    drho.push_back(d * rho_in * u.adjoint() + u * rho_in * d.adjoint());
  }
  return finish_information(std::move(rho), std::move(drho));
}

EncodedInformation generator_information(const ComplexMatrix& rho, const ComplexMatrix& h1,
                                         const ComplexMatrix& h2) {
  std::vector<ComplexMatrix> drho;
  for (const ComplexMatrix* h : {&h1, &h2}) {
    drho.push_back(-kI * (*h * rho - rho * *h));
  }
  return finish_information(rho, std::move(drho));
}

double holevo_from_matrices(const Mat2& qfim, double d12, const WeightMatrix& w) {
  if (!(qfim.determinant() > kTol.singular_det)) {
    throw SingularQFIM("QFIM is singular: parameters cannot be estimated jointly");
  }
  const Mat2 finv = qfim.inverse();
  Eigen::SelfAdjointEigenSolver<Mat2> es(w.matrix());
  const Mat2 sqrt_w = es.operatorSqrt();
  Mat2 d;
  d << 0.0, d12, -d12, 0.0;
  const Mat2 m = sqrt_w * finv * d * finv * sqrt_w;
  Eigen::JacobiSVD<Mat2> svd(m);
  return (w.matrix() * finv).trace() + svd.singularValues().sum();
}

QubitGridResult grid_search_qubit_serial(const EncodingConfig& cfg, const WeightMatrix& w,
                                         int resolution) {
  EtaPair etas;
  QubitGridResult res = qubit_grid_setup(cfg, w, resolution, etas);
  if (!res.feasible) return res;
  const int nvs = 2 * resolution;
  const std::int64_t total = static_cast<std::int64_t>(resolution + 1) * nvs;
  ArgMin best;
  for (std::int64_t k = 0; k < total; ++k) {
    best.offer(qubit_value(sphere_point(static_cast<int>(k / nvs), static_cast<int>(k % nvs), resolution),
                           etas, w),
               k);
  }
  qubit_grid_finish(res, best, etas, resolution);
  return res;
}

QubitGridResult grid_search_qubit(const EncodingConfig& cfg, const WeightMatrix& w, int resolution) {
  EtaPair etas;
  QubitGridResult res = qubit_grid_setup(cfg, w, resolution, etas);
  if (!res.feasible) return res;
  const int nvs = 2 * resolution;
  const std::int64_t total = static_cast<std::int64_t>(resolution + 1) * nvs;
  ArgMin best;
#pragma omp parallel
  {
    ArgMin local;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      local.offer(qubit_value(sphere_point(static_cast<int>(k / nvs), static_cast<int>(k % nvs), resolution),
                              etas, w),
                  k);
    }
#pragma omp critical(su2est_qubit_grid)
    if (local.index >= 0) best.offer(local.value, local.index);
  }
  qubit_grid_finish(res, best, etas, resolution);
  return res;
}

Eigen::Vector3cd qutrit_chart_ket(const std::array<double, 4>& chart) {
  const double s0 = std::sin(chart[0]);
  Eigen::Vector3cd c;
  c(0) = s0 * std::cos(chart[1]) * std::exp(kI * chart[2]);
  c(1) = std::cos(chart[0]);
  c(2) = s0 * std::sin(chart[1]) * std::exp(kI * chart[3]);
  return c;
}

QutritGridResult grid_search_qutrit_serial(const EncodingConfig& cfg, const WeightMatrix& w,
                                           int resolution, double near_tolerance) {
  QutritObjective obj;
  Eigen::Vector3cd optimum;
  QutritGridResult res = qutrit_grid_setup(cfg, w, resolution, near_tolerance, obj, optimum);
  if (!res.feasible) return res;
  const QutritGrid grid(resolution);
  const double near = res.closed_form * (1.0 + near_tolerance);
  ArgMin best;
  for (std::int64_t k = 0; k < grid.size(); ++k) {
    const Eigen::Vector3cd psi = qutrit_chart_ket(grid.chart(k));
    const double v = obj(psi);
    best.offer(v, k);
    if (v <= near) {
      ++res.near_optimal_count;
      res.near_optimal_min_fidelity = std::min(res.near_optimal_min_fidelity, std::abs(optimum.dot(psi)));
    }
  }
  res.evaluated = grid.size();
  res.grid_value = best.value;
  qutrit_refine(res, obj, grid.chart(best.index), resolution, optimum);
  return res;
}

QutritGridResult grid_search_qutrit(const EncodingConfig& cfg, const WeightMatrix& w, int resolution,
                                    double near_tolerance) {
  QutritObjective obj;
  Eigen::Vector3cd optimum;
  QutritGridResult res = qutrit_grid_setup(cfg, w, resolution, near_tolerance, obj, optimum);
  if (!res.feasible) return res;
  const QutritGrid grid(resolution);
  const double near = res.closed_form * (1.0 + near_tolerance);
  const std::int64_t total = grid.size();
  ArgMin best;
  std::int64_t near_count = 0;
  double near_fid = 1.0;
#pragma omp parallel
  {
    ArgMin local;
#pragma omp for schedule(static) reduction(+ : near_count) reduction(min : near_fid)
    for (std::int64_t k = 0; k < total; ++k) {
      const Eigen::Vector3cd psi = qutrit_chart_ket(grid.chart(k));
      const double v = obj(psi);
      local.offer(v, k);
      if (v <= near) {
        ++near_count;
        near_fid = std::min(near_fid, std::abs(optimum.dot(psi)));
      }
    }
#pragma omp critical(su2est_qutrit_grid)
    if (local.index >= 0) best.offer(local.value, local.index);
  }
  res.near_optimal_count = near_count;
  res.near_optimal_min_fidelity = near_fid;
  res.evaluated = total;
  res.grid_value = best.value;
  qutrit_refine(res, obj, grid.chart(best.index), resolution, optimum);
  return res;
}

namespace {

struct Suite {
  OracleReport report;

  Suite(std::string name, double tolerance) {
    report.name = std::move(name);
    report.tolerance = tolerance;
  }
  void record(double closed, double numerical, double error) {
    if (error > report.max_abs_error || std::isnan(error)) {
      report.max_abs_error = error;
      report.closed_form = closed;
      report.numerical = numerical;
    }
  }
  OracleReport done() {
    report.pass = report.max_abs_error <= report.tolerance;
    return report;
  }
};

enum Stream : std::uint64_t {
  kEtaQubit = 1,
  kEtaQutrit,
  kQubitSld,
  kMixed,
  kHolevo,
  kQutritSld,
  kAnsatz,
  kQutritQcrb,
  kQubitGrid,
  kQutritGrid,
  kLoewner,
};

}  // namespace

std::vector<OracleReport> verify_all(std::uint64_t seed, std::int64_t budget, const VerifyHooks& hooks) {
  std::vector<OracleReport> out;
  if (budget <= 0) return out;
  const auto closed_eta = [&](const EncodingConfig& cfg) {
    return hooks.eta_provider ? hooks.eta_provider(cfg) : eta_pair(cfg);
  };

  {
    auto gen = stream_rng(seed, kEtaQubit);
    Suite s("eta_finite_difference", 1e-6);
    for (std::int64_t k = 0; k < budget; ++k) {
      const EncodingConfig cfg = random_config(gen);
      const EtaPair closed = closed_eta(cfg);
      const EtaPair num =
          eta_from_effective_hamiltonians(numerical_effective_hamiltonians(cfg, 1e-5, Rep::qubit), Rep::qubit);
      s.record(closed.eta2.norm(), num.eta2.norm(), eta_error(closed, num));
    }
    out.push_back(s.done());
  }
  {
    auto gen = stream_rng(seed, kEtaQutrit);
    Suite s("eta_finite_difference_qutrit", 1e-6);
    for (std::int64_t k = 0; k < std::max<std::int64_t>(1, budget / 10); ++k) {
      const EncodingConfig cfg = random_config(gen);
      const EtaPair closed = closed_eta(cfg);
      const EtaPair num = eta_from_effective_hamiltonians(
          numerical_effective_hamiltonians(cfg, 1e-5, Rep::qutrit), Rep::qutrit);
      s.record(closed.eta2.norm(), num.eta2.norm(), eta_error(closed, num));
    }
    out.push_back(s.done());
  }
  {
    auto gen = stream_rng(seed, kQubitSld);
    Suite qfim("qubit_qfim_sld", 1e-9), uhl("qubit_uhlmann_sld", 1e-9), det("qubit_det_identity", 1e-10),
        lyap("sld_lyapunov_residual", 1e-9);
    for (std::int64_t k = 0; k < budget; ++k) {
      const EncodingConfig cfg = random_config(gen);
      const BlochVector r(random_unit(gen));
      const EtaPair etas = eta_pair(cfg);
      const EncodedInformation info = encoded_state_information(cfg, bloch_to_density(r));
      const Mat2 f = qfim_pure_qubit(r, etas);
      qfim.record(f(0, 1), info.info.qfim(0, 1), max_abs(Eigen::MatrixXd(f - info.info.qfim)));
      const double d = uhlmann_pure_qubit(r, etas);
      uhl.record(d, info.info.d12, std::abs(d - info.info.d12));
      const double t = r.r().dot(etas.cross());
      det.record(t * t, info.info.qfim.determinant(), std::abs(t * t - info.info.qfim.determinant()));
      lyap.record(0.0, info.lyapunov_residual, info.lyapunov_residual);
    }
    out.push_back(qfim.done());
    out.push_back(uhl.done());
    out.push_back(det.done());
    out.push_back(lyap.done());
  }
  {
    auto gen = stream_rng(seed, kMixed);
    Suite s("mixed_state_scaling", 1e-9);
    for (std::int64_t k = 0; k < budget; ++k) {
      const EncodingConfig cfg = random_config(gen);
      const BlochVector r(uniform(gen, 0.1, 0.95) * random_unit(gen));
      const WeightMatrix w = random_weight(gen);
      const MixedStateBounds mixed = mixed_state_bounds(r, eta_pair(cfg), w);
      const EncodedInformation info = encoded_state_information(cfg, bloch_to_density(r));
      const double err = std::max(max_abs(Eigen::MatrixXd(mixed.qfim - info.info.qfim)),
                                   std::abs(mixed.d12 - info.info.d12));
      s.record(mixed.d12, info.info.d12, err);
    }
    out.push_back(s.done());
  }
  {
    auto gen = stream_rng(seed, kHolevo);
    Suite s("qubit_holevo_closed_form", 1e-8);
    for (std::int64_t k = 0; k < budget; ++k) {
      const EncodingConfig cfg = random_config(gen);
      const BlochVector r(random_unit(gen));
      const WeightMatrix w = random_weight(gen);
      const EtaPair etas = eta_pair(cfg);
      if (std::abs(r.r().dot(etas.cross())) < 0.2) continue;
      const EncodedInformation info = encoded_state_information(cfg, bloch_to_density(r));
      const double closed = hcrb_qubit(r, etas, w);
      const double num = holevo_from_matrices(info.info.qfim, info.info.d12, w);
      s.record(closed, num, std::abs(closed - num));
    }
    out.push_back(s.done());
  }
  {
    auto gen = stream_rng(seed, kQutritSld);
    Suite s("qutrit_qfim_sld", 1e-9);
    for (std::int64_t k = 0; k < budget; ++k) {
      const QutritKet ket(random_qutrit_amplitudes(gen));
      const Vec3 e1 = uniform(gen, 0.1, 2.0) * random_unit(gen);
      const Vec3 e2 = uniform(gen, 0.1, 2.0) * random_unit(gen);
      const ComplexVector psi = ket.amplitudes();
      const EncodedInformation info = generator_information(
          psi * psi.adjoint(), spin_component(e1, Rep::qutrit), spin_component(e2, Rep::qutrit));
      const Mat2 f = qfim_qutrit(ket, e1, e2);
      s.record(f(0, 1), info.info.qfim(0, 1), max_abs(Eigen::MatrixXd(f - info.info.qfim)));
    }
    out.push_back(s.done());
  }
  {
    auto gen = stream_rng(seed, kAnsatz);
    Suite weak("qutrit_weak_commutation", 1e-10), rq("qutrit_reparam_qfim", 1e-9),
        opt("qutrit_optimal_probe_qfim", 1e-10);
    for (std::int64_t k = 0; k < budget; ++k) {
      const EncodingConfig cfg = random_config(gen);
      const AnsatzParams p{uniform(gen, 0.0, 0.5 * kPi), uniform(gen, -kPi, kPi)};
      const ReparamCoords coords = reparam(cfg);
      const QutritKet ket = ansatz_probe(p, coords);
      const double res = weak_commutation_residual(ket, planar_eta_pair(cfg));
      weak.record(0.0, res, std::abs(res));

      const ReparamEtas e = eta_reparam(coords);
      const Mat2 general = qfim_qutrit(ket, e.eta_phi, e.eta_B);
      const Mat2 closed = reparam_qfim_ansatz(p, coords.B).matrix();
      rq.record(closed(0, 0), general(0, 0), max_abs(Eigen::MatrixXd(closed - general)));

      const Mat2 best = qfim_qutrit(optimal_qutrit_probe(coords), e.eta_phi, e.eta_B);
      const Mat2 fmax = reparam_qfim_max(coords.B).matrix();
      opt.record(fmax(0, 0), best(0, 0), max_abs(Eigen::MatrixXd(fmax - best)));
    }
    out.push_back(weak.done());
    out.push_back(rq.done());
    out.push_back(opt.done());
  }
  {
    auto gen = stream_rng(seed, kQutritQcrb);
    Suite s("qutrit_min_qcrb_sld", 1e-7);
    for (std::int64_t k = 0; k < budget; ++k) {
      const double theta = uniform(gen, 0.3, kPi - 0.3);
      const EncodingConfig cfg = EncodingConfig::planar(theta, uniform(gen, -2.0, 2.0), uniform(gen, -2.0, 2.0));
      const WeightMatrix w = random_weight(gen);
      const ReparamCoords coords = reparam(cfg);
      if (coords.B < 0.3 || std::sin(0.5 * coords.B) < 0.3) continue;
      const ComplexVector psi = optimal_qutrit_probe(coords).amplitudes();
      const EncodedInformation info = encoded_state_information(cfg, psi * psi.adjoint());
      const double closed = min_qcrb_qutrit(cfg, w);
      const double num = qcrb_trace(info.info.qfim, w);
      s.record(closed, num, std::abs(closed - num));
    }
    out.push_back(s.done());
  }
  {
    auto gen = stream_rng(seed, kQubitGrid);
    Suite value("qubit_grid_optimality", 1e-9), arg("qubit_grid_argmin", 2.0 * kPi / 60);
    for (std::int64_t k = 0; k < std::max<std::int64_t>(1, budget / 100); ++k) {
      const EncodingConfig cfg = random_config(gen, 0.3);
      const WeightMatrix w = random_weight(gen);
      const QubitGridResult g = grid_search_qubit(cfg, w, 60);
      value.record(g.closed_form, g.best_value, std::max(0.0, -g.margin));
      arg.record(0.0, g.angle_to_optimum, g.angle_to_optimum);
    }
    out.push_back(value.done());
    out.push_back(arg.done());
  }
  {
    auto gen = stream_rng(seed, kQutritGrid);
    Suite value("qutrit_grid_optimality", 1e-9), arg("qutrit_grid_argmin", 1e-3);
    for (std::int64_t k = 0; k < std::max<std::int64_t>(1, budget / 250); ++k) {
      const EncodingConfig cfg = random_config(gen, 0.3);
      const WeightMatrix w = random_weight(gen);
      const QutritGridResult g = grid_search_qutrit(cfg, w, 20);
      value.record(g.closed_form, g.best_value, std::max(0.0, -g.margin));
      arg.record(1.0, g.fidelity_with_optimum, 1.0 - g.fidelity_with_optimum);
    }
    out.push_back(value.done());
    out.push_back(arg.done());
  }
  {
    Suite s("loewner_dominance", -kTol.loewner_floor);
    const LoewnerReport rep = loewner_dominance_scan(budget * 20, seed + kLoewner);
    s.record(0.0, rep.min_eigenvalue, std::max(0.0, -rep.min_eigenvalue));
    out.push_back(s.done());
  }
  return out;
}

bool all_pass(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.pass; });
}

void write_reports_text(std::ostream& os, const std::vector<OracleReport>& reports) {
  char line[256];
  for (const OracleReport& r : reports) {
    std::snprintf(line, sizeof line, "%-30s max_abs_error=%.3e tolerance=%.1e %s\n", r.name.c_str(),
                  r.max_abs_error, r.tolerance, r.pass ? "PASS" : "FAIL");
    os << line;
  }
}

std::string reports_to_json(const std::vector<OracleReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const OracleReport& r : reports) {
    nlohmann::ordered_json rec;
    rec["name"] = r.name;
    rec["max_abs_error"] = r.max_abs_error;
    rec["tolerance"] = r.tolerance;
    rec["pass"] = r.pass;
    arr.push_back(rec);
  }
  return arr.dump(2) + "\n";
}

}  // namespace su2est
