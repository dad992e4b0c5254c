#pragma once

#include <iosfwd>
#include <string>

#include "torusbound/assembly.hpp"

namespace torusbound {

enum class Command { spectrum, scan, wavefunction, curvature, verify_tables };
enum class OutputFormat { json, csv };

struct RunConfig {
  Command command = Command::spectrum;
  double alpha = 0.5;
  int m = 0;
  int m_max = 6;
  int n_basis = 64;
  bool include_vc = true;
  Parity parity = Parity::even;
  int state_index = 0;
  int samples = 0;  // 0 = per-command default
  OutputFormat format = OutputFormat::json;
  std::string out_path;  // empty = write to `out`
};

// Exit codes: 0 success, 2 invalid arguments, 3 solver failure,
// 4 verify-tables with failing targets.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitSolverFailure = 3;
inline constexpr int kExitVerifyFailed = 4;

// Executes one command. The emitted document goes to `out` (or to
// config.out_path when set); diagnostics go to `diag`, never into the
// data stream. Identical configs produce byte-identical documents
// (fixed key order, floats at 10 significant digits).
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace torusbound
