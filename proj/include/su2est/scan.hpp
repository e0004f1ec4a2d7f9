#pragma once

// Optimal-bound scans over the angle between the two encoding axes.

#include <iosfwd>
#include <optional>
#include <vector>

#include "su2est/effective_hamiltonians.hpp"
#include "su2est/qubit_estimation.hpp"

namespace su2est {

enum class Model { qubit, qutrit };

struct ScanSpec {
  double theta_min = 0.0;
  double theta_max = 3.141592653589793;
  int steps = 181;
  double phi1 = 0.5;
  double phi2 = 0.5;
  WeightMatrix weight{1.0, 0.2, 1.0};
  Model model = Model::qubit;

  // Throws InvalidInput unless 0 <= theta_min < theta_max <= pi and steps >= 2.
  void validate() const;
  double theta(int i) const;
};

struct ScanRow {
  double theta = 0.0;
  double bound = 0.0;  // +inf when infeasible
  bool feasible = false;
};

// Minimum HCRB (qubit) or QCRB (qutrit) over probes; nullopt when the
// encoding admits no finite bound.
std::optional<double> optimal_bound(Model model, const EncodingConfig& cfg, const WeightMatrix& w);

std::vector<ScanRow> theta_scan(const ScanSpec& spec);
std::vector<ScanRow> theta_scan_serial(const ScanSpec& spec);

// Header `theta,bound,feasible`, 17 significant digits, LF line endings.
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace su2est
