#include "su2est/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "su2est/constants.hpp"
#include "su2est/errors.hpp"
#include "su2est/oracle.hpp"
#include "su2est/qubit_estimation.hpp"
#include "su2est/qutrit_estimation.hpp"
#include "su2est/scan.hpp"

namespace su2est {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> vals;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !(is >> std::ws).eof() || !std::isfinite(v)) {
      throw InvalidInput(std::string("cannot parse ") + flag + " value '" + item + "'");
    }
    vals.push_back(v);
  }
  if (vals.size() != count) {
    throw InvalidInput(std::string(flag) + " expects " + std::to_string(count) + " comma-separated numbers");
  }
  return vals;
}

WeightMatrix parse_weight(const std::string& text) {
  const auto v = parse_list(text, 3, "--w");
  return WeightMatrix(v[0], v[1], v[2]);
}

Model parse_model(const std::string& name) { return name == "qutrit" ? Model::qutrit : Model::qubit; }

void print_qubit_probe(std::ostream& out, const Vec3& r) {
  out << "probe " << fmt(r.x()) << ' ' << fmt(r.y()) << ' ' << fmt(r.z()) << '\n';
}

void print_qutrit_probe(std::ostream& out, const QutritKet& ket) {
  const char* labels[3] = {"+1", "0", "-1"};
  for (int i = 0; i < 3; ++i) {
    out << "amplitude m=" << labels[i] << ' ' << fmt(ket[i].real()) << ' ' << fmt(ket[i].imag()) << '\n';
  }
}

struct ProbeFlags {
  std::string model = "qubit";
  double phi1 = 0.0;
  double phi2 = 0.0;
  double theta = 0.0;
};

void add_probe_flags(CLI::App* cmd, ProbeFlags& f) {
  cmd->add_option("--model", f.model, "qubit or qutrit")->check(CLI::IsMember({"qubit", "qutrit"}));
  cmd->add_option("--phi1", f.phi1, "first phase (radians)")->required();
  cmd->add_option("--phi2", f.phi2, "second phase (radians)")->required();
  cmd->add_option("--theta", f.theta, "angle between the encoding axes (radians)")->required();
}

EncodingConfig planar_config(const ProbeFlags& f) {
  if (!(f.theta >= 0.0 && f.theta <= std::numbers::pi)) throw InvalidInput("--theta must lie in [0, pi]");
  return EncodingConfig::planar(f.theta, f.phi1, f.phi2);
}

int cmd_bound(std::ostream& out, const ProbeFlags& f, const std::string& wtext, const std::string& probe) {
  const WeightMatrix w = parse_weight(wtext);
  const EncodingConfig cfg = planar_config(f);
  out << "model " << f.model << '\n';
  if (f.model == "qubit") {
    const EtaPair etas = eta_pair(cfg);
    if (probe.empty()) {
      const OptimalQubitProbe p = optimal_qubit_probe(etas);
      out << "bound " << fmt(min_hcrb_qubit(etas, w)) << '\n';
      print_qubit_probe(out, p.primary.r());
    } else {
      const auto v = parse_list(probe, 3, "--probe");
      const BlochVector r(Vec3(v[0], v[1], v[2]));
      out << "bound " << fmt(hcrb_qubit(r, etas, w)) << '\n';
      print_qubit_probe(out, r.r());
    }
  } else {
    if (probe.empty()) {
      const double b = min_qcrb_qutrit(cfg, w);
      out << "bound " << fmt(b) << '\n';
      print_qutrit_probe(out, optimal_qutrit_probe(reparam(cfg)));
    } else {
      const auto v = parse_list(probe, 6, "--probe");
      const QutritKet ket(Eigen::Vector3cd(cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5])));
      const EtaPair etas = planar_eta_pair(cfg);
      out << "bound " << fmt(qcrb_trace(qfim_qutrit(ket, etas.eta1, etas.eta2), w)) << '\n';
      print_qutrit_probe(out, ket);
    }
  }
  out << "feasible 1\n";
  return kExitOk;
}

int cmd_optimal_probe(std::ostream& out, const ProbeFlags& f) {
  const EncodingConfig cfg = planar_config(f);
  out << "model " << f.model << '\n';
  if (f.model == "qubit") {
    print_qubit_probe(out, optimal_qubit_probe(eta_pair(cfg)).primary.r());
  } else {
    if (!(cfg.sin_theta() > kTol.degenerate_cross)) {
      throw NoOptimalProbe("commuting encodings: estimation infeasible");
    }
    jacobian(cfg);
    print_qutrit_probe(out, optimal_qutrit_probe(reparam(cfg)));
  }
  return kExitOk;
}

int cmd_scan(std::ostream& out, ScanSpec spec, const std::string& model, const std::string& wtext,
             const std::string& path) {
  spec.model = parse_model(model);
  spec.weight = parse_weight(wtext);
  const auto rows = theta_scan(spec);
  if (path.empty()) {
    write_scan_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + path);
  write_scan_csv(file, rows);
  file.close();
  if (!file) throw InvalidInput("cannot write " + path);
  out << "wrote " << rows.size() << " rows to " << path << '\n';
  return kExitOk;
}

int cmd_verify(std::ostream& out, std::ostream& err, std::uint64_t seed, std::int64_t budget,
               const std::string& json_path) {
  if (budget < 0) throw InvalidInput("--budget must be non-negative");
  const auto reports = verify_all(seed, budget);
  if (reports.empty()) err << "warning: budget 0, no verification suites were run\n";
  write_reports_text(out, reports);
  if (!json_path.empty()) {
    std::ofstream file(json_path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write " + json_path);
    file << reports_to_json(reports);
    if (!file) throw InvalidInput("cannot write " + json_path);
  }
  const bool ok = all_pass(reports);
  out << "overall " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal probes and precision bounds for two-phase SU(2) encodings", "su2est"};
  app.require_subcommand(1);

  ProbeFlags bound_flags, probe_flags;
  std::string wtext = "1,0.2,1";
  std::string probe;
  auto* bound = app.add_subcommand("bound", "optimal (or given-probe) bound for one encoding");
  add_probe_flags(bound, bound_flags);
  bound->add_option("--w", wtext, "weight matrix w11,w12,w22");
  bound->add_option("--probe", probe, "qubit: x,y,z; qutrit: re,im for m=+1,0,-1");

  auto* optimal = app.add_subcommand("optimal-probe", "optimal input state");
  add_probe_flags(optimal, probe_flags);

  ScanSpec spec;
  std::string scan_model = "qubit", scan_w = "1,0.2,1", out_path;
  auto* scan = app.add_subcommand("scan", "optimal bound versus the axis angle, as CSV");
  scan->add_option("--model", scan_model, "qubit or qutrit")->check(CLI::IsMember({"qubit", "qutrit"}));
  scan->add_option("--theta-min", spec.theta_min);
  scan->add_option("--theta-max", spec.theta_max);
  scan->add_option("--steps", spec.steps);
  scan->add_option("--phi1", spec.phi1);
  scan->add_option("--phi2", spec.phi2);
  scan->add_option("--w", scan_w, "weight matrix w11,w12,w22");
  scan->add_option("--out", out_path, "CSV path (stdout when omitted)");

  std::uint64_t seed = kDefaultSeed;
  std::int64_t budget = kDefaultBudget;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "check every closed form against the numerical oracles");
  verify->add_option("--seed", seed);
  verify->add_option("--budget", budget, "random instances per suite");
  verify->add_option("--json", json_path, "also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(out, bound_flags, wtext, probe);
    if (*optimal) return cmd_optimal_probe(out, probe_flags);
    if (*scan) return cmd_scan(out, spec, scan_model, scan_w, out_path);
    if (*verify) return cmd_verify(out, err, seed, budget, json_path);
  } catch (const Infeasible& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InvalidInput& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace su2est
