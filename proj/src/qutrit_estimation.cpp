#include "su2est/qutrit_estimation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>


#include "su2est/constants.hpp"
#include "su2est/errors.hpp"

namespace su2est {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

double min_eigenvalue_sym2(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  return mean - std::hypot(half_gap, b);
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::int64_t index = -1;

  void offer(double v, std::int64_t k) {
    if (v < value || (v == value && (index < 0 || k < index))) {
      value = v;
      index = k;
    }
  }
};

LoewnerReport finish_report(std::int64_t samples, const Best& best, std::uint64_t seed) {
  LoewnerReport rep;
  rep.samples = samples;
  if (best.index >= 0) {
    const LoewnerSample s = loewner_sample(seed, best.index);
    rep.min_eigenvalue = best.value;
    rep.worst_index = best.index;
    rep.worst_B = s.coords.B;
    rep.worst_phi = s.coords.phi;
  }
  rep.pass = rep.min_eigenvalue >= kTol.loewner_floor;
  return rep;
}

}  // namespace

Mat2 ReparamQFIM::matrix() const {
  Mat2 m;
  m << phi_phi, phi_B, phi_B, B_B;
  return m;
}

QutritKet ansatz_probe(const AnsatzParams& p, const ReparamCoords& coords) {
  constexpr double slack = 1e-12;
  if (!(p.alpha >= -slack && p.alpha <= 0.5 * kPi + slack) ||
      !(p.psi >= -kPi - slack && p.psi <= kPi + slack)) {
    throw InvalidInput("ansatz parameters out of range: alpha in [0, pi/2], psi in [-pi, pi]");
  }
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const cplx e_psi = std::exp(kI * p.psi);
  const cplx plus = (ca + e_psi * sa) * 0.5;
  Eigen::Vector3cd c;
  c(0) = std::exp(-kI * coords.phi) * plus;
  c(1) = (ca - e_psi * sa) / std::sqrt(2.0);
  c(2) = std::exp(kI * coords.phi) * plus;
  return QutritKet::normalized(c);
}

double su2_expectation(const QutritKet& ket, const Vec3& t) {
  const cplx cp = ket.m(1), c0 = ket.m(0), cm = ket.m(-1);
  const double pop = std::norm(cp) - std::norm(cm);
  const cplx coherence = std::conj(cm) * c0 + std::conj(c0) * cp;
  return t.z() * pop + std::sqrt(2.0) * (cplx(t.x(), t.y()) * coherence).real();
}

double weak_commutation_residual(const QutritKet& ket, const EtaPair& etas) {
  return su2_expectation(ket, etas.cross());
}

double qfim_qutrit_general(const QutritKet& ket, const Vec3& eta_i, const Vec3& eta_j) {
  const ComplexMatrix hi = spin_component(eta_i, Rep::qutrit);
  const ComplexMatrix hj = spin_component(eta_j, Rep::qutrit);
  const ComplexVector psi = ket.amplitudes();
  const ComplexVector vi = hi * psi;
  const ComplexVector vj = hj * psi;
  const double second = psi.dot(hi * vj).real();
  return 4.0 * (second - psi.dot(vi).real() * psi.dot(vj).real());
}

Mat2 qfim_qutrit(const QutritKet& ket, const Vec3& eta_a, const Vec3& eta_b) {
  const ComplexVector psi = ket.amplitudes();
  const ComplexVector va = spin_component(eta_a, Rep::qutrit) * psi;
  const ComplexVector vb = spin_component(eta_b, Rep::qutrit) * psi;
  const double ma = psi.dot(va).real(), mb = psi.dot(vb).real();
  Mat2 f;
  f(0, 0) = 4.0 * (va.squaredNorm() - ma * ma);
  f(1, 1) = 4.0 * (vb.squaredNorm() - mb * mb);
  f(0, 1) = f(1, 0) = 4.0 * (va.dot(vb).real() - ma * mb);
  return f;
}

ReparamQFIM reparam_qfim_ansatz(const AnsatzParams& p, double B) {
  const double sh = std::sin(0.5 * B);
  const double s2a = std::sin(2.0 * p.alpha);
  ReparamQFIM f;
  f.phi_phi = 8.0 * sh * sh * (1.0 - s2a * std::cos(p.psi + B));
  f.B_B = 4.0 * s2a * s2a;
  f.phi_B = 0.0;
  return f;
}

ReparamQFIM reparam_qfim_max(double B) {
  const double sh = std::sin(0.5 * B);
  return {16.0 * sh * sh, 4.0, 0.0};
}

QutritKet optimal_qutrit_probe(const ReparamCoords& coords) {
  const double sh = std::sin(0.5 * coords.B), ch = std::cos(0.5 * coords.B);
  Eigen::Vector3cd c;
  c(0) = std::exp(-kI * coords.phi) * sh / std::sqrt(2.0);
  c(1) = -kI * ch;
  c(2) = std::exp(kI * coords.phi) * sh / std::sqrt(2.0);
  return QutritKet::normalized(c);
}

double qcrb_trace(const Mat2& f, const WeightMatrix& w) {
  const double det = f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0);
  if (!(det > kTol.singular_det)) {
    throw SingularQFIM("QFIM is singular: parameters cannot be estimated jointly");
  }
  return (w.w11() * f(1, 1) + w.w22() * f(0, 0) - w.w12() * (f(0, 1) + f(1, 0))) / det;
}

double min_qcrb_qutrit(const EncodingConfig& cfg, const WeightMatrix& w) {
  if (!(cfg.sin_theta() > kTol.degenerate_cross)) {
    throw NoOptimalProbe("commuting encodings: estimation infeasible");
  }
  const Jacobian2 jac = jacobian(cfg);
  const ReparamQFIM fmax = reparam_qfim_max(reparam(cfg).B);
  Mat2 reparam_b_phi;  // (B, phi) order, matching the Jacobian rows
  reparam_b_phi << fmax.B_B, fmax.phi_B, fmax.phi_B, fmax.phi_phi;
  const Mat2 f = jac.m.transpose() * reparam_b_phi * jac.m;
  return qcrb_trace(f, w);
}

EtaPair planar_eta_pair(const EncodingConfig& cfg) {
  const EtaPair g = eta_pair(cfg);
  return {cfg.frame().transpose() * g.eta1, cfg.frame().transpose() * g.eta2};
}

LoewnerSample loewner_sample(std::uint64_t seed, std::int64_t index) {
  const auto k = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::mt19937_64 gen(seq);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  Eigen::Vector3cd c;
  for (int i = 0; i < 3; ++i) c(i) = cplx(normal(gen), normal(gen));
  const double B = 2.0 * kPi * unit(gen);
  const double phi = -kPi + 2.0 * kPi * unit(gen);
  return {QutritKet::normalized(c), {B, phi}};
}

double loewner_min_eigenvalue(const QutritKet& ket, const ReparamCoords& coords) {
  const ReparamEtas e = eta_reparam(coords);
  const Mat2 g = qfim_qutrit(ket, e.eta_phi, e.eta_B);
  const ReparamQFIM fmax = reparam_qfim_max(coords.B);
  return min_eigenvalue_sym2(fmax.phi_phi - g(0, 0), -g(0, 1), fmax.B_B - g(1, 1));
}

LoewnerReport loewner_dominance_scan_serial(std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("dominance scan needs at least one sample");
  Best best;
  for (std::int64_t k = 0; k < samples; ++k) {
    const LoewnerSample s = loewner_sample(seed, k);
    best.offer(loewner_min_eigenvalue(s.ket, s.coords), k);
  }
  return finish_report(samples, best, seed);
}

LoewnerReport loewner_dominance_scan(std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("dominance scan needs at least one sample");
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < samples; ++k) {
      const LoewnerSample s = loewner_sample(seed, k);
      local.offer(loewner_min_eigenvalue(s.ket, s.coords), k);
    }
#pragma omp critical(su2est_loewner_merge)
    if (local.index >= 0) best.offer(local.value, local.index);
  }
  return finish_report(samples, best, seed);
}

Mat2 commuting_qfim(const QutritKet& ket, const CommutingSpectra& spectra) {
  double m1 = 0.0, m2 = 0.0, s11 = 0.0, s22 = 0.0, s12 = 0.0;
  for (int mu = 0; mu < 3; ++mu) {
    const double p = std::norm(ket[mu]);
    const double l1 = spectra.lambda[mu], l2 = spectra.lambda_prime[mu];
    m1 += p * l1;
    m2 += p * l2;
    s11 += p * l1 * l1;
    s22 += p * l2 * l2;
    s12 += p * l1 * l2;
  }
  Mat2 f;
  f(0, 0) = 4.0 * (s11 - m1 * m1);
  f(1, 1) = 4.0 * (s22 - m2 * m2);
  f(0, 1) = f(1, 0) = 4.0 * (s12 - m1 * m2);
  return f;
}

double commuting_qcrb(double p0, double p1, const WeightMatrix& w) {
  const double p2 = 1.0 - p0 - p1;
  if (!(p0 > 0.0) || !(p1 > 0.0) || !(p2 > 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return 0.25 * (w.w22() / p0 + w.w11() / p1 + (w.w11() + w.w22() + 2.0 * w.w12()) / p2);
}

CommutingAmplitudes commuting_optimal_amplitudes(const WeightMatrix& w) {
  // Stationarity of sum_k K_k / p_k on p0 + p1 + p2 = 1 gives p_k ~ sqrt(K_k);
  // the objective is strictly convex there, so this is the unique minimum.
  const double k0 = std::sqrt(w.w22());
  const double k1 = std::sqrt(w.w11());
  const double k2 = std::sqrt(w.w11() + w.w22() + 2.0 * w.w12());
  const double total = k0 + k1 + k2;
  return {std::sqrt(k0 / total), std::sqrt(k1 / total), std::sqrt(k2 / total)};
}

}  // namespace su2est
