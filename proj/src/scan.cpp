#include "su2est/scan.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "su2est/errors.hpp"
#include "su2est/qutrit_estimation.hpp"

namespace su2est {

void ScanSpec::validate() const {
  if (!(theta_min >= 0.0 && theta_min < theta_max && theta_max <= std::numbers::pi)) {
    throw InvalidInput("scan range must satisfy 0 <= theta-min < theta-max <= pi");
  }
  if (steps < 2) throw InvalidInput("scan needs at least 2 steps");
}

double ScanSpec::theta(int i) const {
  if (i == steps - 1) return theta_max;
  return theta_min + (theta_max - theta_min) * i / (steps - 1);
}

std::optional<double> optimal_bound(Model model, const EncodingConfig& cfg, const WeightMatrix& w) {
  try {
    if (model == Model::qubit) return min_hcrb_qubit(eta_pair(cfg), w);
    return min_qcrb_qutrit(cfg, w);
  } catch (const Infeasible&) {
    return std::nullopt;
  }
}

namespace {

ScanRow scan_row(const ScanSpec& spec, int i) {
  ScanRow row;
  row.theta = spec.theta(i);
  const auto b = optimal_bound(spec.model, EncodingConfig::planar(row.theta, spec.phi1, spec.phi2),
                               spec.weight);
  row.feasible = b.has_value() && std::isfinite(*b);
  row.bound = row.feasible ? *b : std::numeric_limits<double>::infinity();
  return row;
}

}  // namespace

std::vector<ScanRow> theta_scan_serial(const ScanSpec& spec) {
  spec.validate();
  std::vector<ScanRow> rows(spec.steps);
  for (int i = 0; i < spec.steps; ++i) rows[i] = scan_row(spec, i);
  return rows;
}

std::vector<ScanRow> theta_scan(const ScanSpec& spec) {
  spec.validate();
  std::vector<ScanRow> rows(spec.steps);
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < spec.steps; ++i) rows[i] = scan_row(spec, i);
  return rows;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "theta,bound,feasible\n";
  char buf[96];
  for (const ScanRow& r : rows) {
    if (r.feasible) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,1\n", r.theta, r.bound);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,inf,0\n", r.theta);
    }
    os << buf;
  }
}

}  // namespace su2est
