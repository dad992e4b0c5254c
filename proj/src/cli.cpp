#include "torusbound/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "torusbound/geometry.hpp"
#include "torusbound/spectra.hpp"

namespace torusbound {

namespace {

// All floats are emitted at 10 significant digits so identical configs
// produce byte-identical documents.
std::string num(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

const char* bool_str(bool v) { return v ? "true" : "false"; }

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_state_json(std::ostream& os, const Eigenstate& s) {
  os << "{\"n_index\":" << s.n_index << ",\"beta\":" << num(s.beta)
     << ",\"degeneracy\":" << s.degeneracy
     << ",\"norm_constant\":" << num(s.norm_constant) << ",\"coeffs\":[";
  for (Eigen::Index j = 0; j < s.coeffs.size(); ++j) {
    if (j) os << ",";
    os << num(s.coeffs(j));
  }
  os << "],\"node_count\":" << s.node_count << "}";
}

void emit_spectrum(const Spectrum& sp, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::json) {
    os << "{\"alpha\":" << num(sp.alpha) << ",\"m\":" << sp.m
       << ",\"parity\":\"" << to_string(sp.parity) << "\""
       << ",\"include_vc\":" << bool_str(sp.include_vc)
       << ",\"truncation\":" << sp.truncation_used
       << ",\"converged\":" << bool_str(sp.converged) << ",\"states\":[";
    for (std::size_t i = 0; i < sp.states.size(); ++i) {
      if (i) os << ",";
      write_state_json(os, sp.states[i]);
    }
    os << "]}\n";
  } else {
    os << "n_index,beta,degeneracy,norm_constant,node_count\n";
    for (const auto& s : sp.states) {
      os << s.n_index << "," << num(s.beta) << "," << s.degeneracy << ","
         << num(s.norm_constant) << "," << s.node_count << "\n";
    }
  }
}

void emit_scan(const BoundStateTable& table, OutputFormat format,
               std::ostream& os) {
  if (format == OutputFormat::json) {
    os << "{\"alpha\":" << num(table.alpha) << ",\"m_max\":" << table.m_max
       << ",\"include_vc\":true,\"cutoff_m\":" << cutoff_m(table.alpha)
       << ",\"total_count_sectors\":" << table.total_count_sectors
       << ",\"total_count_with_degeneracy\":"
       << table.total_count_with_degeneracy << ",\"entries\":[";
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
      const auto& s = table.entries[i];
      if (i) os << ",";
      os << "{\"m\":" << s.m << ",\"parity\":\"" << to_string(s.parity)
         << "\",\"n_index\":" << s.n_index << ",\"beta\":" << num(s.beta)
         << ",\"degeneracy\":" << s.degeneracy
         << ",\"norm_constant\":" << num(s.norm_constant) << ",\"coeffs\":[";
      for (Eigen::Index j = 0; j < s.coeffs.size(); ++j) {
        if (j) os << ",";
        os << num(s.coeffs(j));
      }
      os << "],\"node_count\":" << s.node_count << "}";
    }
    os << "]}\n";
  } else {
    os << "m,parity,n_index,beta,degeneracy,norm_constant,node_count\n";
    for (const auto& s : table.entries) {
      os << s.m << "," << to_string(s.parity) << "," << s.n_index << ","
         << num(s.beta) << "," << s.degeneracy << "," << num(s.norm_constant)
         << "," << s.node_count << "\n";
    }
  }
}

void emit_wavefunction(const Spectrum& sp, const Eigenstate& state,
                       int samples, OutputFormat format, std::ostream& os) {
  const double step = 2.0 * std::numbers::pi / samples;
  if (format == OutputFormat::csv) {
    os << "theta,psi\n";
    for (int i = 0; i < samples; ++i) {
      const double theta = step * i;
      os << num(theta) << ","
         << num(evaluate_series(state.coeffs, state.parity, theta)) << "\n";
    }
  } else {
    os << "{\"alpha\":" << num(sp.alpha) << ",\"m\":" << sp.m
       << ",\"parity\":\"" << to_string(sp.parity) << "\""
       << ",\"include_vc\":" << bool_str(sp.include_vc)
       << ",\"state_index\":" << state.n_index
       << ",\"beta\":" << num(state.beta) << ",\"samples\":" << samples
       << ",\"rows\":[";
    for (int i = 0; i < samples; ++i) {
      const double theta = step * i;
      if (i) os << ",";
      os << "{\"theta\":" << num(theta) << ",\"psi\":"
         << num(evaluate_series(state.coeffs, state.parity, theta)) << "}";
    }
    os << "]}\n";
  }
}

void emit_curvature(double alpha, int samples, OutputFormat format,
                    std::ostream& os) {
  const TorusGeometry geom(alpha, 1.0);  // R = 1 units
  const double step = 2.0 * std::numbers::pi / samples;
  if (format == OutputFormat::csv) {
    os << "theta,k1,k2,H,K,Vc\n";
    for (int i = 0; i < samples; ++i) {
      const double theta = step * i;
      const CurvatureBundle b = torus_curvatures(geom, theta);
      os << num(theta) << "," << num(b.k1) << "," << num(b.k2) << ","
         << num(b.H) << "," << num(b.K) << "," << num(b.Vc) << "\n";
    }
  } else {
    os << "{\"alpha\":" << num(alpha) << ",\"samples\":" << samples
       << ",\"rows\":[";
    for (int i = 0; i < samples; ++i) {
      const double theta = step * i;
      const CurvatureBundle b = torus_curvatures(geom, theta);
      if (i) os << ",";
      os << "{\"theta\":" << num(theta) << ",\"k1\":" << num(b.k1)
         << ",\"k2\":" << num(b.k2) << ",\"H\":" << num(b.H)
         << ",\"K\":" << num(b.K) << ",\"Vc\":" << num(b.Vc) << "}";
    }
    os << "]}\n";
  }
}

const char* kind_str(TargetKind kind) {
  switch (kind) {
    case TargetKind::required: return "required";
    case TargetKind::disputed: return "disputed";
    case TargetKind::info: return "info";
  }
  return "required";
}

void emit_report(const TableDiffReport& report, OutputFormat format,
                 std::ostream& os) {
  if (format == OutputFormat::json) {
    int required = 0;
    for (const auto& t : report.targets) {
      if (t.kind == TargetKind::required) ++required;
    }
    os << "{\"targets\":[";
    for (std::size_t i = 0; i < report.targets.size(); ++i) {
      const auto& t = report.targets[i];
      if (i) os << ",";
      os << "{\"name\":\"" << json_escape(t.name) << "\",\"kind\":\""
         << kind_str(t.kind) << "\",\"reference\":" << num(t.reference)
         << ",\"computed\":" << num(t.computed)
         << ",\"diff\":" << num(std::abs(t.diff()))
         << ",\"tolerance\":" << num(t.tolerance)
         << ",\"pass\":" << bool_str(t.pass) << ",\"note\":\""
         << json_escape(t.note) << "\"}";
    }
    os << "],\"required_total\":" << required
       << ",\"required_failed\":" << report.failed_required()
       << ",\"all_required_pass\":" << bool_str(report.all_required_pass())
       << "}\n";
  } else {
    os << "name,kind,reference,computed,diff,tolerance,pass\n";
    for (const auto& t : report.targets) {
      os << t.name << "," << kind_str(t.kind) << "," << num(t.reference) << ","
         << num(t.computed) << "," << num(std::abs(t.diff())) << ","
         << num(t.tolerance) << "," << bool_str(t.pass) << "\n";
    }
  }
}

int validate(const RunConfig& config, std::ostream& diag) {
  if (config.command != Command::verify_tables &&
      !(config.alpha > 0.0 && config.alpha < 1.0)) {
    diag << "error: --alpha must lie in (0, 1)\n";
    return kExitBadArgs;
  }
  if (config.m < 0 || config.m_max < 0 || config.state_index < 0) {
    diag << "error: --m, --m-max and --state must be >= 0\n";
    return kExitBadArgs;
  }
  if (config.n_basis < 4) {
    diag << "error: --n-basis must be >= 4\n";
    return kExitBadArgs;
  }
  if (config.command == Command::wavefunction && config.samples != 0 &&
      config.samples < 16) {
    diag << "error: wavefunction needs --samples >= 16\n";
    return kExitBadArgs;
  }
  if (config.command == Command::curvature && config.samples != 0 &&
      config.samples < 4) {
    diag << "error: curvature needs --samples >= 4\n";
    return kExitBadArgs;
  }
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& os, std::ostream& diag) {
  const int n_start = std::max(8, config.n_basis);
  switch (config.command) {
    case Command::spectrum: {
      const Spectrum sp = converge_spectrum(config.alpha, config.m,
                                            config.parity, config.include_vc,
                                            1e-8, n_start);
      emit_spectrum(sp, config.format, os);
      return kExitOk;
    }
    case Command::scan: {
      const BoundStateTable table = bound_state_scan(config.alpha, config.m_max);
      emit_scan(table, config.format, os);
      return kExitOk;
    }
    case Command::wavefunction: {
      const Spectrum sp = converge_spectrum(config.alpha, config.m,
                                            config.parity, config.include_vc,
                                            1e-8, n_start);
      if (config.state_index >= static_cast<int>(sp.states.size())) {
        diag << "error: --state " << config.state_index
             << " out of range (sector has " << sp.states.size()
             << " states)\n";
        return kExitBadArgs;
      }
      const int samples = config.samples == 0 ? 1024 : config.samples;
      emit_wavefunction(sp, sp.states[config.state_index], samples,
                        config.format, os);
      return kExitOk;
    }
    case Command::curvature: {
      const int samples = config.samples == 0 ? 360 : config.samples;
      emit_curvature(config.alpha, samples, config.format, os);
      return kExitOk;
    }
    case Command::verify_tables: {
      const TableDiffReport report = reproduce_tables();
      emit_report(report, config.format, os);
      if (!report.all_required_pass()) {
        diag << "verify-tables: " << report.failed_required()
             << " required target(s) outside tolerance\n";
        return kExitVerifyFailed;
      }
      return kExitOk;
    }
  }
  return kExitBadArgs;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const int rc = validate(config, diag);
  if (rc != kExitOk) return rc;

  try {
    std::ostringstream buffer;
    const int code = dispatch(config, buffer, diag);
    if (code == kExitBadArgs) return code;

    if (config.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) {
        diag << "error: cannot open output path " << config.out_path << "\n";
        return kExitBadArgs;
      }
      file << buffer.str();
    }
    return code;
  } catch (const SolverError& e) {
    diag << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    diag << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return kExitSolverFailure;
  }
}

}  // namespace torusbound
